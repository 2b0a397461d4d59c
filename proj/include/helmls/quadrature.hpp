#pragma once

#include <vector>

#include "helmls/types.hpp"

namespace helmls {

/// Quadrature rule on the reference simplex ([0,1] or the unit triangle).
struct QuadratureRule {
    int dim = 1;
    int exactness = 0;
    std::vector<Vec2> points;
    std::vector<double> weights;

    int size() const { return static_cast<int>(weights.size()); }
};

/// Gauss-Jacobi nodes and weights on [-1, 1] for the weight
/// (1 - t)^alpha (1 + t)^beta, via the Golub-Welsch eigenvalue problem.
void gauss_jacobi(int n, double alpha, double beta, std::vector<double>& nodes,
                  std::vector<double>& weights);

/// n-point Gauss-Legendre rule mapped to [0, 1].
QuadratureRule gauss_legendre_unit(int n);

/// Rule exact for polynomials of total degree <= exactness: Gauss-Legendre on
/// [0,1] for d = 1, collapsed Gauss-Legendre x Gauss-Jacobi(1,0) on the triangle.
QuadratureRule simplex_quadrature(int dim, int exactness);

/// Number of Gauss points needed for a given exactness in one direction.
inline int gauss_points_for(int exactness) { return exactness / 2 + 1; }

} // namespace helmls

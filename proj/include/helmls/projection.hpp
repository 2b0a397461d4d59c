#pragma once

#include <functional>
#include <vector>

#include "helmls/spaces.hpp"

namespace helmls {

/// Real scalar field with gradient, evaluable pointwise.
struct ScalarFunction {
    std::function<double(const Vec2&)> value;
    std::function<Vec2(const Vec2&)> gradient;
};

/// Real vector field with Jacobian J(i, j) = d phi_i / d x_j.
struct VectorFunction {
    std::function<Vec2(const Vec2&)> value;
    std::function<Mat2(const Vec2&)> jacobian;
};

using EdgeFunction = std::function<double(double)>;

// ------------------------------------------------------------------ edge norms
//
// All edge quantities live on the unit parameter interval (0, 1). The
// H^{1/2}_00 inner product is
//   (u, v)_L2 + int int (u(x)-u(y))(v(x)-v(y)) / |x-y|^2 dx dy + int u v / dist(x, {0,1}) dx.
// The edge basis is {1 - s, s, b_0, ..., b_{p-2}} with bubbles
// b_j(s) = s (1 - s) P^{(1,1)}_j(2 s - 1), matching the traces of the
// hierarchical scalar basis.

struct EdgeNormGram {
    int p = 1;
    MatrixXd gram_l2;      ///< (p+1) x (p+1), full edge basis
    MatrixXd gram_h12_00;  ///< (p-1) x (p-1), bubble sub-basis
};

EdgeNormGram h12_00_gram(int p);

/// Values of the edge basis {1 - s, s, bubbles...} at s.
VectorXd edge_basis_values(int p, double s);

double edge_l2_inner(const EdgeFunction& f, const EdgeFunction& g, int n_quad);
/// Double integral of the product of difference quotients, by splitting the
/// square along its diagonal and integrating in (x - y, x) coordinates.
double edge_seminorm_inner(const EdgeFunction& f, const EdgeFunction& g, int n_quad);
/// int f g / dist(x, {0,1}) with the interval split at 1/2; f g must vanish at
/// the endpoints for the integral to be finite.
double edge_weighted_inner(const EdgeFunction& f, const EdgeFunction& g, int n_quad);
double edge_h12_00_inner(const EdgeFunction& f, const EdgeFunction& g, int n_quad);

/// Vertex interpolation followed by the edge minimisation of
/// p ||u - pi||^2_L2 + ||u - pi||^2_{H^{1/2}_00} over P_p(e) with matching
/// endpoint values. Returns coefficients in the edge basis.
struct EdgeProjection {
    VectorXd coefficients; ///< size p + 1
    double kkt_residual = 0.0;
};

EdgeProjection project_edge(const EdgeFunction& trace, int p);

// ------------------------------------------------------- reference projection

struct ReferenceProjection {
    int p = 1;
    int d = 1;
    VectorXd coefficients; ///< in ScalarBasis(d, p) ordering
    // step trace
    std::vector<double> vertex_values;
    std::vector<VectorXd> edge_solutions; ///< bubble coefficients per edge (d = 2) or the element (d = 1)
    VectorXd interior_solution;           ///< volume step (d = 2); empty for d = 1
    double max_kkt_residual = 0.0;
};

/// Vertex values, edge minimisations, and (for d = 2) the volume minimisation
/// of p^2 ||u - pi||^2_L2 + ||u - pi||^2_H1 over interior bubbles. In one
/// dimension the reference simplex is itself the single edge, so the edge
/// minimisation fixes the result and the volume step has no free parameters.
ReferenceProjection project_reference(const ScalarFunction& u, int d, int p);

/// Weighted volume energy p^2 ||w||^2_L2 + ||w||^2_H1 on the reference simplex.
double reference_volume_energy(const std::function<double(const Vec2&)>& w,
                               const std::function<Vec2(const Vec2&)>& grad_w, int d, int p, int quad_exactness);

// ------------------------------------------------------- global operators

struct GlobalProjection {
    VectorXd coefficients;
    /// Largest disagreement between element-wise values of shared dofs,
    /// relative to the largest dof magnitude.
    double conformity_defect = 0.0;
};

/// Element-wise reference projection of u composed with each element map,
/// assembled into a ScalarH1 space.
GlobalProjection project_h1_global(const ScalarFunction& u, const FunctionSpace& space);

/// Piola pull-back, componentwise reference projection, push-forward,
/// expressed in the global BDM basis (VectorHdiv space).
GlobalProjection project_hdiv_global(const VectorFunction& phi, const FunctionSpace& space);

/// The componentwise reference projection of a reference vector field,
/// returned as expansion coefficients [x-component; y-component].
VectorXd project_reference_vector(const VectorFunction& phihat, int p);

} // namespace helmls

#pragma once

#include <vector>

#include "helmls/types.hpp"

namespace helmls {

/// Jacobi polynomials P_j^{(a,b)}(t), j = 0..n, and their derivatives.
void jacobi_values(int n, double a, double b, double t, std::vector<double>& values,
                   std::vector<double>* derivatives = nullptr);

/// Shifted Legendre polynomials P_j(2s - 1) on [0, 1], j = 0..n.
void shifted_legendre_values(int n, double s, std::vector<double>& values);

enum class DofClass { Vertex, Edge, Interior };

/// Descriptor of one hierarchical basis function.
struct BasisFunctionInfo {
    DofClass cls = DofClass::Vertex;
    int entity = 0; ///< vertex number, local edge number, or 0 for interior
    int order = 0;  ///< position within its entity (kernel degree for edges)
};

/// Hierarchical H^1-conforming basis of P_p on the reference simplex.
///
/// Ordering: d + 1 vertex functions (barycentric coordinates); in 2D then
/// (p - 1) functions per local edge m (edge m joins the two vertices other than
/// m, traversed from the lower to the higher local vertex), then interior
/// bubbles. Edge functions are lambda_a lambda_b P^{(1,1)}_j(lambda_b - lambda_a),
/// so on their own edge they reduce to s (1 - s) P^{(1,1)}_j(2 s - 1).
/// In 1D the bubbles x (1 - x) P^{(1,1)}_j(2 x - 1) are the interior functions.
class ScalarBasis {
public:
    ScalarBasis(int dim, int degree);

    int dim() const { return dim_; }
    int degree() const { return degree_; }
    int size() const { return static_cast<int>(info_.size()); }
    const BasisFunctionInfo& info(int i) const { return info_[i]; }
    int num_vertex() const { return dim_ + 1; }
    int num_edge_per_edge() const { return dim_ == 2 ? degree_ - 1 : 0; }
    int num_interior() const { return size() - num_vertex() - 3 * num_edge_per_edge(); }
    int first_edge_function(int m) const { return num_vertex() + m * num_edge_per_edge(); }
    int first_interior_function() const { return num_vertex() + (dim_ == 2 ? 3 * num_edge_per_edge() : 0); }

    void evaluate(const Vec2& xhat, Eigen::Ref<VectorXd> values) const;
    /// Gradients as rows of an n x 2 matrix (second column zero in 1D).
    void evaluate_gradients(const Vec2& xhat, Eigen::Ref<MatrixXd> grads) const;

    VectorXd values(const Vec2& xhat) const;
    MatrixXd gradients(const Vec2& xhat) const;

private:
    int dim_;
    int degree_;
    std::vector<BasisFunctionInfo> info_;
};

/// Edge parameterisation on the reference triangle: local edge m runs from
/// vertex `edge_vertices(m)[0]` to `[1]`.
std::array<int, 2> reference_edge_vertices(int m);
Vec2 reference_edge_point(int m, double s);

} // namespace helmls

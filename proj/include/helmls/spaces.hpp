#pragma once

#include <vector>

#include "helmls/basis.hpp"
#include "helmls/mesh.hpp"

namespace helmls {

/// Contravariant Piola transform for an affine element map.
///
/// push: phi(x) = A phihat(xhat) / det A, with (div phi)(x) = divhat phihat / det A.
/// pull is the inverse: phihat = det A * A^{-1} phi(F(xhat)).
class PiolaMap {
public:
    PiolaMap(int dim, const ElementMap& map);

    Vec2 push(const Vec2& vhat) const;
    double push_divergence(double divhat) const;
    Vec2 pull(const Vec2& v) const;
    /// Jacobian of the pulled-back field given the physical Jacobian of phi.
    Mat2 pull_jacobian(const Mat2& dphi) const;
    /// Normal flux density transfer: phi . n dS = phihat . nhat dShat.
    double det() const { return det_; }

private:
    int dim_;
    Mat2 a_;
    Mat2 ainv_;
    double det_;
};

/// BDM_p on the reference triangle.
///
/// Degrees of freedom: for each local edge m (see reference_edge_vertices) the
/// moments int_0^1 phihat . nuhat_m P_j(s) ds, j = 0..p, where nuhat_m is the
/// outward normal scaled by the edge length and P_j the shifted Legendre
/// polynomials; then (p + 1)(p - 1) interior moments against a basis of the
/// zero-normal-trace subspace. Basis functions are stored as coefficients over
/// two copies of the hierarchical scalar basis.
class BdmReferenceElement {
public:
    explicit BdmReferenceElement(int degree);

    int degree() const { return degree_; }
    int size() const { return static_cast<int>(coefficients_.cols()); }
    int num_edge_dofs() const { return 3 * (degree_ + 1); }
    const ScalarBasis& expansion() const { return expansion_; }
    /// (2 nS) x size; column k holds [x-component; y-component] of basis k.
    const MatrixXd& coefficients() const { return coefficients_; }
    /// size x (2 nS); applies the dof functionals to expansion coefficients.
    const MatrixXd& functionals() const { return functionals_; }

    /// values: size x 2, divergence: size.
    void evaluate(const Vec2& xhat, MatrixXd& values, VectorXd& divergence) const;

    static Vec2 scaled_edge_normal(int m);

private:
    int degree_;
    ScalarBasis expansion_;
    MatrixXd coefficients_;
    MatrixXd functionals_;
};

enum class SpaceKind { ScalarH1, VectorHdiv };

struct LocalDof {
    int global = 0;
    double sign = 1.0;
};

/// Shape functions of one element at one point, mapped to the physical element
/// and multiplied by their global orientation signs.
struct ShapeValues {
    VectorXd scalar;   ///< ScalarH1: values
    MatrixXd vector;   ///< n x 2: gradients (ScalarH1) or vector values (VectorHdiv)
    VectorXd divergence; ///< VectorHdiv only
};

/// Reference-element tabulation reused across elements (affine maps).
struct ReferenceShape {
    VectorXd scalar;
    MatrixXd vector;
    VectorXd divergence;
};

/// Global conforming space: S_p (ScalarH1) or BDM_p (VectorHdiv).
///
/// Global numbering, ScalarH1: vertices, then (p - 1) dofs per edge (2D), then
/// element interiors. VectorHdiv (2D): (p + 1) normal moments per edge in the
/// ascending-vertex edge parameterisation with the facet normal of the mesh,
/// then (p + 1)(p - 1) interior dofs per element. In 1D VectorHdiv reuses the
/// ScalarH1 layout (H(div) = H^1 on an interval).
class FunctionSpace {
public:
    SpaceKind kind() const { return kind_; }
    const MeshPtr& mesh_ptr() const { return mesh_; }
    const Mesh& mesh() const { return *mesh_; }
    int degree() const { return degree_; }
    int num_dofs() const { return n_dofs_; }
    int dofs_per_element() const { return static_cast<int>(elem_dofs_.front().size()); }
    const std::vector<LocalDof>& element_dofs(int e) const { return elem_dofs_[e]; }

    const ScalarBasis& scalar_basis() const { return scalar_; }
    /// Null for ScalarH1 and for 1D.
    const BdmReferenceElement* bdm() const { return bdm_.get(); }

    ReferenceShape tabulate(const Vec2& xhat) const;
    void map_shape(int e, const ReferenceShape& ref, ShapeValues& out) const;
    ShapeValues evaluate(int e, const Vec2& xhat) const;

    /// Evaluate a coefficient vector on element e at xhat.
    /// ScalarH1: returns value in `value`, gradient in `vec`.
    /// VectorHdiv: returns field in `vec`, divergence in `value`.
    template <typename Scalar>
    void evaluate_function(int e, const Vec2& xhat, const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& coeffs,
                           Scalar& value, Eigen::Matrix<Scalar, 2, 1>& vec) const
    {
        const ShapeValues sv = evaluate(e, xhat);
        value = Scalar(0);
        vec.setZero();
        const auto& dofs = elem_dofs_[e];
        for (std::size_t i = 0; i < dofs.size(); ++i) {
            const Scalar c = coeffs(dofs[i].global);
            if (kind_ == SpaceKind::ScalarH1) {
                value += c * sv.scalar(i);
            } else {
                value += c * sv.divergence(i);
            }
            vec(0) += c * sv.vector(i, 0);
            vec(1) += c * sv.vector(i, 1);
        }
    }

    friend FunctionSpace build_h1_space(MeshPtr mesh, int p);
    friend FunctionSpace build_hdiv_space(MeshPtr mesh, int p);

private:
    FunctionSpace(SpaceKind kind, MeshPtr mesh, int degree);

    SpaceKind kind_;
    MeshPtr mesh_;
    int degree_;
    int n_dofs_ = 0;
    ScalarBasis scalar_;
    std::shared_ptr<const BdmReferenceElement> bdm_;
    std::vector<std::vector<LocalDof>> elem_dofs_;
};

FunctionSpace build_h1_space(MeshPtr mesh, int p);
FunctionSpace build_hdiv_space(MeshPtr mesh, int p);

/// Reference coordinates on element e of the point with global edge parameter
/// s on facet `facet_id` (ascending-vertex direction). In 1D returns the vertex.
Vec2 facet_point_on_element(const Mesh& mesh, int facet_id, int side, double s);

} // namespace helmls

#include "helmls/spaces.hpp"

#include <cmath>

#include <Eigen/SVD>

#include "helmls/quadrature.hpp"

namespace helmls {

// ---------------------------------------------------------------- Piola

PiolaMap::PiolaMap(int dim, const ElementMap& map) : dim_(dim), a_(map.jacobian), det_(map.det)
{
    if (dim_ == 1) {
        a_ << map.jacobian(0, 0), 0.0, 0.0, 1.0;
        det_ = map.jacobian(0, 0);
    } else {
        det_ = a_.determinant();
    }
    require(std::abs(det_) > 1e-300 && std::isfinite(det_), "PiolaMap: singular element map");
    ainv_ = a_.inverse();
}

Vec2 PiolaMap::push(const Vec2& vhat) const
{
    if (dim_ == 1) {
        // A / det A = 1 in one dimension.
        return Vec2(vhat.x(), 0.0);
    }
    return a_ * vhat / det_;
}

double PiolaMap::push_divergence(double divhat) const { return divhat / det_; }

Vec2 PiolaMap::pull(const Vec2& v) const
{
    if (dim_ == 1) {
        return Vec2(v.x(), 0.0);
    }
    return det_ * (ainv_ * v);
}

Mat2 PiolaMap::pull_jacobian(const Mat2& dphi) const
{
    if (dim_ == 1) {
        Mat2 r = Mat2::Zero();
        r(0, 0) = dphi(0, 0) * a_(0, 0);
        return r;
    }
    return det_ * ainv_ * dphi * a_;
}

// ---------------------------------------------------------------- BDM reference element

Vec2 BdmReferenceElement::scaled_edge_normal(int m)
{
    switch (m) {
    case 0: return Vec2(1.0, 1.0);
    case 1: return Vec2(-1.0, 0.0);
    default: return Vec2(0.0, -1.0);
    }
}

BdmReferenceElement::BdmReferenceElement(int degree) : degree_(degree), expansion_(2, degree)
{
    require(degree >= 1, "BdmReferenceElement: p >= 1 required");
    const int ns = expansion_.size();
    const int n = 2 * ns;
    const int n_edge = num_edge_dofs();

    MatrixXd edge_fun = MatrixXd::Zero(n_edge, n);
    const QuadratureRule line = gauss_legendre_unit(degree + 1);
    std::vector<double> leg;
    VectorXd sv(ns);
    for (int m = 0; m < 3; ++m) {
        const Vec2 nu = scaled_edge_normal(m);
        for (int q = 0; q < line.size(); ++q) {
            const double s = line.points[q].x();
            expansion_.evaluate(reference_edge_point(m, s), sv);
            shifted_legendre_values(degree, s, leg);
            for (int j = 0; j <= degree; ++j) {
                const double w = line.weights[q] * leg[j];
                edge_fun.block(m * (degree + 1) + j, 0, 1, ns) += w * nu.x() * sv.transpose();
                edge_fun.block(m * (degree + 1) + j, ns, 1, ns) += w * nu.y() * sv.transpose();
            }
        }
    }

    const QuadratureRule tri = simplex_quadrature(2, 2 * degree);
    MatrixXd mass = MatrixXd::Zero(ns, ns);
    for (int q = 0; q < tri.size(); ++q) {
        expansion_.evaluate(tri.points[q], sv);
        mass += tri.weights[q] * sv * sv.transpose();
    }
    MatrixXd mass2 = MatrixXd::Zero(n, n);
    mass2.topLeftCorner(ns, ns) = mass;
    mass2.bottomRightCorner(ns, ns) = mass;

    functionals_.resize(n, n);
    functionals_.topRows(n_edge) = edge_fun;
    if (n > n_edge) {
        Eigen::JacobiSVD<MatrixXd> svd(edge_fun, Eigen::ComputeFullV);
        const MatrixXd kernel = svd.matrixV().rightCols(n - n_edge);
        functionals_.bottomRows(n - n_edge) = kernel.transpose() * mass2;
    }
    coefficients_ = functionals_.fullPivLu().inverse();
}

void BdmReferenceElement::evaluate(const Vec2& xhat, MatrixXd& values, VectorXd& divergence) const
{
    const int ns = expansion_.size();
    const VectorXd s = expansion_.values(xhat);
    const MatrixXd g = expansion_.gradients(xhat);
    const auto cx = coefficients_.topRows(ns);
    const auto cy = coefficients_.bottomRows(ns);
    values.resize(size(), 2);
    values.col(0) = cx.transpose() * s;
    values.col(1) = cy.transpose() * s;
    divergence = cx.transpose() * g.col(0) + cy.transpose() * g.col(1);
}

// ---------------------------------------------------------------- FunctionSpace

FunctionSpace::FunctionSpace(SpaceKind kind, MeshPtr mesh, int degree)
    : kind_(kind), mesh_(std::move(mesh)), degree_(degree), scalar_(mesh_->dim(), degree)
{
}

namespace {

/// True when local edge m of element e runs against the ascending global order.
bool edge_flipped(const Mesh& mesh, int e, int m)
{
    const auto ev = reference_edge_vertices(m);
    const auto& el = mesh.element(e);
    return el[ev[0]] > el[ev[1]];
}

double parity_sign(bool flipped, int j) { return (flipped && (j % 2 == 1)) ? -1.0 : 1.0; }

} // namespace

FunctionSpace build_h1_space(MeshPtr mesh, int p)
{
    require(mesh != nullptr, "build_h1_space: null mesh");
    require(p >= 1, "build_h1_space: p >= 1 required");
    FunctionSpace space(SpaceKind::ScalarH1, mesh, p);
    const Mesh& m = *mesh;
    const ScalarBasis& basis = space.scalar_;
    const int nv = m.num_vertices();
    const int per_edge = p - 1;
    const int n_int = basis.num_interior();

    int offset_interior = nv;
    if (m.dim() == 2) {
        offset_interior += per_edge * m.num_facets();
    }
    space.n_dofs_ = offset_interior + n_int * m.num_elements();
    space.elem_dofs_.resize(m.num_elements());
    for (int e = 0; e < m.num_elements(); ++e) {
        auto& dofs = space.elem_dofs_[e];
        dofs.resize(basis.size());
        for (int i = 0; i < basis.size(); ++i) {
            const auto& inf = basis.info(i);
            switch (inf.cls) {
            case DofClass::Vertex:
                dofs[i] = {m.element(e)[inf.entity], 1.0};
                break;
            case DofClass::Edge: {
                const int facet = m.element_facet(e, inf.entity);
                dofs[i] = {nv + facet * per_edge + inf.order,
                           parity_sign(edge_flipped(m, e, inf.entity), inf.order)};
                break;
            }
            case DofClass::Interior:
                dofs[i] = {offset_interior + e * n_int + (i - basis.first_interior_function()), 1.0};
                break;
            }
        }
    }
    return space;
}

FunctionSpace build_hdiv_space(MeshPtr mesh, int p)
{
    require(mesh != nullptr, "build_hdiv_space: null mesh");
    require(p >= 1, "build_hdiv_space: p >= 1 required");
    if (mesh->dim() == 1) {
        FunctionSpace s = build_h1_space(mesh, p);
        s.kind_ = SpaceKind::VectorHdiv;
        return s;
    }
    FunctionSpace space(SpaceKind::VectorHdiv, mesh, p);
    space.bdm_ = std::make_shared<const BdmReferenceElement>(p);
    const Mesh& m = *mesh;
    const int per_edge = p + 1;
    const int n_int = (p + 1) * (p - 1);
    const int offset_interior = per_edge * m.num_facets();
    space.n_dofs_ = offset_interior + n_int * m.num_elements();
    space.elem_dofs_.resize(m.num_elements());
    for (int e = 0; e < m.num_elements(); ++e) {
        auto& dofs = space.elem_dofs_[e];
        dofs.resize(space.bdm_->size());
        for (int mm = 0; mm < 3; ++mm) {
            const int facet_id = m.element_facet(e, mm);
            const Facet& f = m.facet(facet_id);
            const double sigma = (f.elements[0] == e) ? 1.0 : -1.0;
            const bool flipped = edge_flipped(m, e, mm);
            for (int j = 0; j <= p; ++j) {
                dofs[mm * per_edge + j] = {facet_id * per_edge + j, sigma * parity_sign(flipped, j)};
            }
        }
        for (int i = 0; i < n_int; ++i) {
            dofs[3 * per_edge + i] = {offset_interior + e * n_int + i, 1.0};
        }
    }
    return space;
}

ReferenceShape FunctionSpace::tabulate(const Vec2& xhat) const
{
    ReferenceShape r;
    if (bdm_ != nullptr) {
        bdm_->evaluate(xhat, r.vector, r.divergence);
        return r;
    }
    r.scalar = scalar_.values(xhat);
    r.vector = scalar_.gradients(xhat);
    if (kind_ == SpaceKind::VectorHdiv) {
        // 1D: the vector field is the scalar function, its divergence the derivative.
        r.divergence = r.vector.col(0);
        r.vector.col(0) = r.scalar;
        r.vector.col(1).setZero();
    }
    return r;
}

void FunctionSpace::map_shape(int e, const ReferenceShape& ref, ShapeValues& out) const
{
    const ElementMap& em = mesh_->map(e);
    const auto& dofs = elem_dofs_[e];
    const int n = static_cast<int>(dofs.size());
    VectorXd sign(n);
    for (int i = 0; i < n; ++i) {
        sign(i) = dofs[i].sign;
    }

    if (kind_ == SpaceKind::ScalarH1) {
        out.scalar = ref.scalar.cwiseProduct(sign);
        if (mesh_->dim() == 1) {
            out.vector.resize(n, 2);
            out.vector.col(0) = ref.vector.col(0).cwiseProduct(sign) * em.inverse(0, 0);
            out.vector.col(1).setZero();
        } else {
            out.vector = sign.asDiagonal() * ref.vector * em.inverse;
        }
        out.divergence.resize(0);
        return;
    }

    out.scalar.resize(0);
    if (mesh_->dim() == 1) {
        out.vector = sign.asDiagonal() * ref.vector;
        out.divergence = ref.divergence.cwiseProduct(sign) * em.inverse(0, 0);
        return;
    }
    out.vector = sign.asDiagonal() * ref.vector * em.jacobian.transpose() / em.det;
    out.divergence = ref.divergence.cwiseProduct(sign) / em.det;
}

ShapeValues FunctionSpace::evaluate(int e, const Vec2& xhat) const
{
    ShapeValues out;
    map_shape(e, tabulate(xhat), out);
    return out;
}

Vec2 facet_point_on_element(const Mesh& mesh, int facet_id, int side, double s)
{
    const Facet& f = mesh.facet(facet_id);
    const int e = f.elements[side];
    require(e >= 0, "facet_point_on_element: facet has no element on that side");
    const int m = f.local_index[side];
    if (mesh.dim() == 1) {
        return Vec2(m == 0 ? 1.0 : 0.0, 0.0);
    }
    const double shat = edge_flipped(mesh, e, m) ? 1.0 - s : s;
    return reference_edge_point(m, shat);
}

} // namespace helmls

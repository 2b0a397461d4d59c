#include "helmls/projection.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "helmls/quadrature.hpp"

namespace helmls {

namespace {

// Extra Gauss points beyond polynomial exactness, for non-polynomial data.
constexpr int kEdgeExtraPoints = 24;
constexpr int kVolumeExtraExactness = 16;

double bubble_value(int j, double s)
{
    std::vector<double> k;
    jacobi_values(j, 1.0, 1.0, 2.0 * s - 1.0, k);
    return s * (1.0 - s) * k[j];
}

/// Point set for the diagonal-split double integral: pairs (x, y) with y < x
/// and their weights, covering half of the unit square.
struct DiagonalRule {
    std::vector<double> x;
    std::vector<double> y;
    std::vector<double> w;
};

DiagonalRule diagonal_rule(int n)
{
    const QuadratureRule g = gauss_legendre_unit(n);
    DiagonalRule r;
    for (int a = 0; a < n; ++a) {
        const double z = g.points[a].x();
        for (int b = 0; b < n; ++b) {
            const double sigma = g.points[b].x();
            const double x = z + (1.0 - z) * sigma;
            r.x.push_back(x);
            r.y.push_back(x - z);
            r.w.push_back(g.weights[a] * g.weights[b] * (1.0 - z));
        }
    }
    return r;
}

/// Moments (w, b_j) in L2 and in H^{1/2}_00 against all bubbles j < nb.
void edge_bubble_moments(const EdgeFunction& w, int p, int n, VectorXd& l2, VectorXd& h12)
{
    const int nb = p - 1;
    l2 = VectorXd::Zero(nb);
    h12 = VectorXd::Zero(nb);
    if (nb == 0) {
        return;
    }
    auto bubbles = [&](double s) {
        VectorXd v(nb);
        std::vector<double> k;
        jacobi_values(nb - 1, 1.0, 1.0, 2.0 * s - 1.0, k);
        for (int j = 0; j < nb; ++j) {
            v(j) = s * (1.0 - s) * k[j];
        }
        return v;
    };

    const QuadratureRule g = gauss_legendre_unit(n);
    VectorXd weighted = VectorXd::Zero(nb);
    for (int q = 0; q < g.size(); ++q) {
        const double s = g.points[q].x();
        const double ws = w(s);
        l2 += g.weights[q] * ws * bubbles(s);
        // Halves [0, 1/2] and [1/2, 1], each with its own Gauss rule.
        const double left = 0.5 * s;
        const double right = 0.5 + 0.5 * s;
        weighted += 0.5 * g.weights[q] * (w(left) / left * bubbles(left) + w(right) / (1.0 - right) * bubbles(right));
    }

    const DiagonalRule d = diagonal_rule(n);
    VectorXd semi = VectorXd::Zero(nb);
    for (std::size_t q = 0; q < d.w.size(); ++q) {
        const double dz = d.x[q] - d.y[q];
        const double dw = (w(d.x[q]) - w(d.y[q])) / dz;
        semi += d.w[q] * dw * (bubbles(d.x[q]) - bubbles(d.y[q])) / dz;
    }
    h12 = l2 + 2.0 * semi + weighted;
}

const EdgeNormGram& cached_gram(int p)
{
    static std::mutex mutex;
    static std::map<int, EdgeNormGram> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(p);
    if (it == cache.end()) {
        it = cache.emplace(p, h12_00_gram(p)).first;
    }
    return it->second;
}

} // namespace

VectorXd edge_basis_values(int p, double s)
{
    VectorXd v(p + 1);
    v(0) = 1.0 - s;
    v(1) = s;
    if (p >= 2) {
        std::vector<double> k;
        jacobi_values(p - 2, 1.0, 1.0, 2.0 * s - 1.0, k);
        for (int j = 0; j + 2 <= p; ++j) {
            v(2 + j) = s * (1.0 - s) * k[j];
        }
    }
    return v;
}

double edge_l2_inner(const EdgeFunction& f, const EdgeFunction& g, int n_quad)
{
    const QuadratureRule r = gauss_legendre_unit(n_quad);
    double sum = 0.0;
    for (int q = 0; q < r.size(); ++q) {
        const double s = r.points[q].x();
        sum += r.weights[q] * f(s) * g(s);
    }
    return sum;
}

double edge_seminorm_inner(const EdgeFunction& f, const EdgeFunction& g, int n_quad)
{
    const DiagonalRule d = diagonal_rule(n_quad);
    double sum = 0.0;
    for (std::size_t q = 0; q < d.w.size(); ++q) {
        const double dz = d.x[q] - d.y[q];
        sum += d.w[q] * (f(d.x[q]) - f(d.y[q])) * (g(d.x[q]) - g(d.y[q])) / (dz * dz);
    }
    return 2.0 * sum;
}

double edge_weighted_inner(const EdgeFunction& f, const EdgeFunction& g, int n_quad)
{
    const QuadratureRule r = gauss_legendre_unit(n_quad);
    double sum = 0.0;
    for (int q = 0; q < r.size(); ++q) {
        const double s = r.points[q].x();
        const double left = 0.5 * s;
        const double right = 0.5 + 0.5 * s;
        sum += 0.5 * r.weights[q] * (f(left) * g(left) / left + f(right) * g(right) / (1.0 - right));
    }
    return sum;
}

double edge_h12_00_inner(const EdgeFunction& f, const EdgeFunction& g, int n_quad)
{
    return edge_l2_inner(f, g, n_quad) + edge_seminorm_inner(f, g, n_quad) + edge_weighted_inner(f, g, n_quad);
}

EdgeNormGram h12_00_gram(int p)
{
    require(p >= 1, "h12_00_gram: p >= 1 required");
    EdgeNormGram gram;
    gram.p = p;
    const QuadratureRule r = gauss_legendre_unit(p + 1);
    gram.gram_l2 = MatrixXd::Zero(p + 1, p + 1);
    for (int q = 0; q < r.size(); ++q) {
        const VectorXd v = edge_basis_values(p, r.points[q].x());
        gram.gram_l2 += r.weights[q] * v * v.transpose();
    }
    const int nb = p - 1;
    gram.gram_h12_00 = MatrixXd::Zero(nb, nb);
    // Products of difference quotients have degree 2p - 2 in each variable.
    const int n = p + 1;
    for (int i = 0; i < nb; ++i) {
        for (int j = i; j < nb; ++j) {
            auto bi = [i](double s) { return bubble_value(i, s); };
            auto bj = [j](double s) { return bubble_value(j, s); };
            const double v = edge_h12_00_inner(bi, bj, n);
            gram.gram_h12_00(i, j) = v;
            gram.gram_h12_00(j, i) = v;
        }
    }
    return gram;
}

EdgeProjection project_edge(const EdgeFunction& trace, int p)
{
    require(p >= 1, "project_edge: p >= 1 required");
    EdgeProjection out;
    out.coefficients = VectorXd::Zero(p + 1);
    const double u0 = trace(0.0);
    const double u1 = trace(1.0);
    out.coefficients(0) = u0;
    out.coefficients(1) = u1;
    if (p == 1) {
        return out;
    }
    const EdgeNormGram& gram = cached_gram(p);
    const int nb = p - 1;
    const MatrixXd a = p * gram.gram_l2.bottomRightCorner(nb, nb) + gram.gram_h12_00;
    EdgeFunction w = [&](double s) { return trace(s) - ((1.0 - s) * u0 + s * u1); };
    VectorXd l2;
    VectorXd h12;
    edge_bubble_moments(w, p, p + kEdgeExtraPoints, l2, h12);
    const VectorXd rhs = p * l2 + h12;
    const VectorXd c = a.llt().solve(rhs);
    out.coefficients.tail(nb) = c;
    const double scale = std::max(rhs.norm(), a.norm() * c.norm());
    out.kkt_residual = scale > 0.0 ? (a * c - rhs).norm() / scale : 0.0;
    return out;
}

double reference_volume_energy(const std::function<double(const Vec2&)>& w,
                               const std::function<Vec2(const Vec2&)>& grad_w, int d, int p, int quad_exactness)
{
    const QuadratureRule r = simplex_quadrature(d, quad_exactness);
    double l2 = 0.0;
    double h1 = 0.0;
    for (int q = 0; q < r.size(); ++q) {
        const double v = w(r.points[q]);
        l2 += r.weights[q] * v * v;
        h1 += r.weights[q] * grad_w(r.points[q]).squaredNorm();
    }
    return (static_cast<double>(p) * p + 1.0) * l2 + h1;
}

ReferenceProjection project_reference(const ScalarFunction& u, int d, int p)
{
    if (d == 3) {
        throw InvalidArgument("project_reference: d = 3 (face step) is not supported");
    }
    require(d == 1 || d == 2, "project_reference: d must be 1 or 2");
    require(p >= 1, "project_reference: p >= 1 required");

    const ScalarBasis basis(d, p);
    ReferenceProjection out;
    out.p = p;
    out.d = d;
    out.coefficients = VectorXd::Zero(basis.size());

    // Step 1: vertices.
    const auto& rv = reference_vertices();
    for (int v = 0; v <= d; ++v) {
        const double val = u.value(rv[v]);
        out.vertex_values.push_back(val);
        out.coefficients(v) = val;
    }

    // Step 2: edges.
    if (d == 1) {
        const EdgeProjection ep = project_edge([&](double s) { return u.value(Vec2(s, 0.0)); }, p);
        out.edge_solutions.push_back(ep.coefficients.tail(p - 1));
        out.coefficients.tail(p - 1) = ep.coefficients.tail(p - 1);
        out.max_kkt_residual = ep.kkt_residual;
        return out;
    }
    for (int m = 0; m < 3; ++m) {
        const EdgeProjection ep =
            project_edge([&](double s) { return u.value(reference_edge_point(m, s)); }, p);
        out.edge_solutions.push_back(ep.coefficients.tail(p - 1));
        out.coefficients.segment(basis.first_edge_function(m), p - 1) = ep.coefficients.tail(p - 1);
        out.max_kkt_residual = std::max(out.max_kkt_residual, ep.kkt_residual);
    }

    // Step 3 (faces) does not arise for d <= 2. Step 4: volume.
    const int ni = basis.num_interior();
    if (ni == 0) {
        out.interior_solution.resize(0);
        return out;
    }
    const int i0 = basis.first_interior_function();
    const double wl2 = static_cast<double>(p) * p + 1.0;
    const QuadratureRule r = simplex_quadrature(2, 2 * p + kVolumeExtraExactness);
    MatrixXd a = MatrixXd::Zero(ni, ni);
    VectorXd rhs = VectorXd::Zero(ni);
    const VectorXd fixed = out.coefficients;
    for (int q = 0; q < r.size(); ++q) {
        const Vec2& x = r.points[q];
        const VectorXd phi = basis.values(x);
        const MatrixXd grad = basis.gradients(x);
        const double w = u.value(x) - phi.dot(fixed);
        const Vec2 gw = u.gradient(x) - grad.transpose() * fixed;
        const auto bi = phi.segment(i0, ni);
        const auto gi = grad.middleRows(i0, ni);
        a += r.weights[q] * (wl2 * bi * bi.transpose() + gi * gi.transpose());
        rhs += r.weights[q] * (wl2 * w * bi + gi * gw);
    }
    const VectorXd c = a.llt().solve(rhs);
    out.interior_solution = c;
    out.coefficients.segment(i0, ni) = c;
    const double scale = std::max(rhs.norm(), a.norm() * c.norm());
    if (scale > 0.0) {
        out.max_kkt_residual = std::max(out.max_kkt_residual, (a * c - rhs).norm() / scale);
    }
    return out;
}

VectorXd project_reference_vector(const VectorFunction& phihat, int p)
{
    const int ns = ScalarBasis(2, p).size();
    VectorXd coeffs(2 * ns);
    for (int comp = 0; comp < 2; ++comp) {
        ScalarFunction f{[&, comp](const Vec2& x) { return phihat.value(x)(comp); },
                         [&, comp](const Vec2& x) { return Vec2(phihat.jacobian(x).row(comp).transpose()); }};
        coeffs.segment(comp * ns, ns) = project_reference(f, 2, p).coefficients;
    }
    return coeffs;
}

namespace {

void scatter(const std::vector<LocalDof>& dofs, const VectorXd& local, VectorXd& global,
             std::vector<char>& seen, double& defect)
{
    for (std::size_t i = 0; i < dofs.size(); ++i) {
        const double v = dofs[i].sign * local(static_cast<int>(i));
        const int g = dofs[i].global;
        if (seen[g]) {
            defect = std::max(defect, std::abs(global(g) - v));
        } else {
            global(g) = v;
            seen[g] = 1;
        }
    }
}

double relative_defect(double defect, const VectorXd& coeffs)
{
    const double scale = coeffs.size() > 0 ? coeffs.cwiseAbs().maxCoeff() : 0.0;
    return scale > 0.0 ? defect / scale : defect;
}

} // namespace

GlobalProjection project_h1_global(const ScalarFunction& u, const FunctionSpace& space)
{
    require(space.kind() == SpaceKind::ScalarH1 || space.mesh().dim() == 1,
            "project_h1_global: scalar H1 space required");
    const Mesh& mesh = space.mesh();
    const int d = mesh.dim();
    GlobalProjection out;
    out.coefficients = VectorXd::Zero(space.num_dofs());
    std::vector<char> seen(space.num_dofs(), 0);
    double defect = 0.0;
    for (int e = 0; e < mesh.num_elements(); ++e) {
        const ElementMap& em = mesh.map(e);
        ScalarFunction uhat{
            [&](const Vec2& xh) { return u.value(mesh.map_to_physical(e, xh)); },
            [&](const Vec2& xh) {
                const Vec2 g = u.gradient(mesh.map_to_physical(e, xh));
                if (d == 1) {
                    return Vec2(g.x() * em.jacobian(0, 0), 0.0);
                }
                return Vec2(em.jacobian.transpose() * g);
            }};
        const ReferenceProjection rp = project_reference(uhat, d, space.degree());
        scatter(space.element_dofs(e), rp.coefficients, out.coefficients, seen, defect);
    }
    out.conformity_defect = relative_defect(defect, out.coefficients);
    return out;
}

GlobalProjection project_hdiv_global(const VectorFunction& phi, const FunctionSpace& space)
{
    require(space.kind() == SpaceKind::VectorHdiv, "project_hdiv_global: H(div) space required");
    const Mesh& mesh = space.mesh();
    if (mesh.dim() == 1) {
        // The Piola transform is the identity in one dimension.
        ScalarFunction first{[&](const Vec2& x) { return phi.value(x).x(); },
                             [&](const Vec2& x) { return Vec2(phi.jacobian(x)(0, 0), 0.0); }};
        const Mesh& m = mesh;
        GlobalProjection out;
        out.coefficients = VectorXd::Zero(space.num_dofs());
        std::vector<char> seen(space.num_dofs(), 0);
        double defect = 0.0;
        for (int e = 0; e < m.num_elements(); ++e) {
            const double len = m.map(e).jacobian(0, 0);
            ScalarFunction uhat{[&](const Vec2& xh) { return first.value(m.map_to_physical(e, xh)); },
                                [&](const Vec2& xh) {
                                    return Vec2(first.gradient(m.map_to_physical(e, xh)).x() * len, 0.0);
                                }};
            const ReferenceProjection rp = project_reference(uhat, 1, space.degree());
            scatter(space.element_dofs(e), rp.coefficients, out.coefficients, seen, defect);
        }
        out.conformity_defect = relative_defect(defect, out.coefficients);
        return out;
    }

    const BdmReferenceElement& bdm = *space.bdm();
    GlobalProjection out;
    out.coefficients = VectorXd::Zero(space.num_dofs());
    std::vector<char> seen(space.num_dofs(), 0);
    double defect = 0.0;
    for (int e = 0; e < mesh.num_elements(); ++e) {
        const PiolaMap piola(2, mesh.map(e));
        VectorFunction phihat{
            [&](const Vec2& xh) { return piola.pull(phi.value(mesh.map_to_physical(e, xh))); },
            [&](const Vec2& xh) { return piola.pull_jacobian(phi.jacobian(mesh.map_to_physical(e, xh))); }};
        const VectorXd expansion = project_reference_vector(phihat, space.degree());
        const VectorXd local = bdm.functionals() * expansion;
        scatter(space.element_dofs(e), local, out.coefficients, seen, defect);
    }
    out.conformity_defect = relative_defect(defect, out.coefficients);
    return out;
}

} // namespace helmls

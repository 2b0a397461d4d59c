#include "helmls/fosls.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace helmls {

namespace {

constexpr double kBreakpointTolerance = 1e-14;

int default_exactness(int p) { return 2 * p + 2; }

std::vector<int> visiting_order(const Mesh& mesh, const AssemblyOptions& options)
{
    if (options.element_order.empty()) {
        std::vector<int> order(mesh.num_elements());
        std::iota(order.begin(), order.end(), 0);
        return order;
    }
    require(static_cast<int>(options.element_order.size()) == mesh.num_elements(),
            "assembly: element_order must be a permutation of the elements");
    std::vector<int> check = options.element_order;
    std::sort(check.begin(), check.end());
    for (int i = 0; i < mesh.num_elements(); ++i) {
        require(check[i] == i, "assembly: element_order must be a permutation of the elements");
    }
    return options.element_order;
}

bool element_is_split(const Mesh& mesh, int e, std::span<const double> breakpoints)
{
    if (mesh.dim() != 1) {
        return false;
    }
    const double a = mesh.vertex(mesh.element(e)[0]).x();
    const double b = mesh.vertex(mesh.element(e)[1]).x();
    return std::any_of(breakpoints.begin(), breakpoints.end(), [&](double c) {
        return c > a + kBreakpointTolerance && c < b - kBreakpointTolerance;
    });
}

/// Trial-side quantities of the FOSLS form for every local function:
/// s1 = i k psi + grad v, s2 = i k v + div psi (local ordering [V | W]).
struct FoslsShape {
    VectorXc s1x;
    VectorXc s1y;
    VectorXc s2;
};

FoslsShape fosls_shape(const ShapeValues& v, const ShapeValues& w, double k)
{
    const int nv = static_cast<int>(v.vector.rows());
    const int nw = static_cast<int>(w.scalar.size());
    FoslsShape s;
    s.s1x.resize(nv + nw);
    s.s1y.resize(nv + nw);
    s.s2.resize(nv + nw);
    const Complex ik = kI * k;
    for (int i = 0; i < nv; ++i) {
        s.s1x(i) = ik * v.vector(i, 0);
        s.s1y(i) = ik * v.vector(i, 1);
        s.s2(i) = v.divergence(i);
    }
    for (int i = 0; i < nw; ++i) {
        s.s1x(nv + i) = w.vector(i, 0);
        s.s1y(nv + i) = w.vector(i, 1);
        s.s2(nv + i) = ik * w.scalar(i);
    }
    return s;
}

/// Boundary quantity s3 = psi . n + v for every local function.
VectorXc fosls_trace(const ShapeValues& v, const ShapeValues& w, const Vec2& n)
{
    const int nv = static_cast<int>(v.vector.rows());
    const int nw = static_cast<int>(w.scalar.size());
    VectorXc s3(nv + nw);
    for (int i = 0; i < nv; ++i) {
        s3(i) = v.vector(i, 0) * n.x() + v.vector(i, 1) * n.y();
    }
    for (int i = 0; i < nw; ++i) {
        s3(nv + i) = w.scalar(i);
    }
    return s3;
}

std::vector<int> fosls_global_dofs(const FunctionSpace& v, const FunctionSpace& w, int e)
{
    std::vector<int> g;
    for (const auto& d : v.element_dofs(e)) {
        g.push_back(d.global);
    }
    for (const auto& d : w.element_dofs(e)) {
        g.push_back(v.num_dofs() + d.global);
    }
    return g;
}

void check_same_mesh(const FunctionSpace& a, const FunctionSpace& b)
{
    require(a.mesh_ptr() == b.mesh_ptr(), "assembly: V_h and W_h must be built on the same mesh");
}

/// Element points with cached reference tabulations for unsplit elements.
class ElementIntegrator {
public:
    ElementIntegrator(const Mesh& mesh, int exactness, std::span<const double> breakpoints)
        : mesh_(mesh), rule_(simplex_quadrature(mesh.dim(), exactness)), breakpoints_(breakpoints)
    {
    }

    const QuadratureRule& rule() const { return rule_; }

    std::vector<QuadraturePoint> points(int e) const { return element_quadrature(mesh_, e, rule_, breakpoints_); }

    bool split(int e) const { return element_is_split(mesh_, e, breakpoints_); }

private:
    const Mesh& mesh_;
    QuadratureRule rule_;
    std::span<const double> breakpoints_;
};

std::vector<ReferenceShape> tabulate_rule(const FunctionSpace& space, const QuadratureRule& rule)
{
    std::vector<ReferenceShape> t;
    t.reserve(rule.size());
    for (const auto& p : rule.points) {
        t.push_back(space.tabulate(p));
    }
    return t;
}

} // namespace

std::vector<QuadraturePoint> element_quadrature(const Mesh& mesh, int e, const QuadratureRule& rule,
                                                std::span<const double> breakpoints)
{
    std::vector<QuadraturePoint> pts;
    pts.reserve(rule.size());
    if (mesh.dim() == 2) {
        const double det = mesh.map(e).det;
        for (int q = 0; q < rule.size(); ++q) {
            pts.push_back({rule.points[q], mesh.map_to_physical(e, rule.points[q]), rule.weights[q] * det});
        }
        return pts;
    }
    const double a = mesh.vertex(mesh.element(e)[0]).x();
    const double b = mesh.vertex(mesh.element(e)[1]).x();
    std::vector<double> cuts{a};
    for (double c : breakpoints) {
        if (c > a + kBreakpointTolerance && c < b - kBreakpointTolerance) {
            cuts.push_back(c);
        }
    }
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    const double len = b - a;
    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
        const double lo = cuts[s];
        const double hi = cuts[s + 1];
        for (int q = 0; q < rule.size(); ++q) {
            const double x = lo + (hi - lo) * rule.points[q].x();
            pts.push_back({Vec2((x - a) / len, 0.0), Vec2(x, 0.0), rule.weights[q] * (hi - lo)});
        }
    }
    return pts;
}

std::vector<BoundaryPoint> boundary_quadrature(const Mesh& mesh, int n_points)
{
    std::vector<BoundaryPoint> pts;
    const QuadratureRule line = gauss_legendre_unit(std::max(1, n_points));
    for (int fid : mesh.boundary_facets()) {
        const Facet& f = mesh.facet(fid);
        const int e = f.elements[0];
        if (mesh.dim() == 1) {
            const Vec2 xhat = facet_point_on_element(mesh, fid, 0, 0.0);
            pts.push_back({e, xhat, mesh.vertex(f.vertices[0]), f.normal, 1.0});
            continue;
        }
        for (int q = 0; q < line.size(); ++q) {
            const Vec2 xhat = facet_point_on_element(mesh, fid, 0, line.points[q].x());
            pts.push_back({e, xhat, mesh.map_to_physical(e, xhat), f.normal, line.weights[q] * f.measure});
        }
    }
    return pts;
}

DiscreteSolution make_solution(const AssembledSystem& system, std::shared_ptr<const FunctionSpace> v_space,
                               std::shared_ptr<const FunctionSpace> w_space, const VectorXc& x)
{
    require(x.size() == system.size(), "make_solution: coefficient vector has the wrong length");
    DiscreteSolution sol;
    sol.kind = system.kind;
    sol.k = system.k;
    sol.v_space = std::move(v_space);
    sol.w_space = std::move(w_space);
    require(sol.w_space != nullptr, "make_solution: W_h space required");
    require(sol.w_space->num_dofs() == system.n_w, "make_solution: W_h size mismatch");
    if (system.kind == SystemKind::Fosls) {
        require(sol.v_space != nullptr && sol.v_space->num_dofs() == system.n_v, "make_solution: V_h size mismatch");
    } else {
        sol.v_space.reset();
    }
    sol.phi_coeffs = x.head(system.n_v);
    sol.u_coeffs = x.tail(system.n_w);
    return sol;
}

// ---------------------------------------------------------------- evaluators

PairEvaluator exact_evaluator(const ExactBundle& exact)
{
    return [exact](int, const Vec2&, const Vec2& x) {
        PairSample s;
        s.phi = exact.phi(x);
        s.div_phi = exact.div_phi(x);
        s.u = exact.u(x);
        s.grad_u = exact.grad_u(x);
        return s;
    };
}

namespace {

/// Element-wise Laplacian of a discrete scalar function by central
/// differences of its analytic gradient in reference coordinates.
Complex broken_laplacian(const FunctionSpace& w, const VectorXc& coeffs, int e, const Vec2& xhat)
{
    constexpr double delta = 1e-4;
    const ElementMap& em = w.mesh().map(e);
    const int d = w.mesh().dim();
    Complex lap(0.0);
    for (int l = 0; l < d; ++l) {
        Vec2 step = Vec2::Zero();
        step(l) = delta;
        ShapeValues plus;
        ShapeValues minus;
        w.map_shape(e, w.tabulate(xhat + step), plus);
        w.map_shape(e, w.tabulate(xhat - step), minus);
        const auto& dofs = w.element_dofs(e);
        for (int j = 0; j < d; ++j) {
            Complex dg(0.0);
            for (std::size_t i = 0; i < dofs.size(); ++i) {
                dg += coeffs(dofs[i].global) * (plus.vector(i, j) - minus.vector(i, j));
            }
            lap += dg / (2.0 * delta) * em.inverse(l, j);
        }
    }
    return lap;
}

} // namespace

PairEvaluator discrete_evaluator(const DiscreteSolution& sol)
{
    return [sol](int e, const Vec2& xhat, const Vec2&) {
        PairSample s;
        const FunctionSpace& w = *sol.w_space;
        const ShapeValues ws = w.evaluate(e, xhat);
        const auto& wd = w.element_dofs(e);
        for (std::size_t i = 0; i < wd.size(); ++i) {
            const Complex c = sol.u_coeffs(wd[i].global);
            s.u += c * ws.scalar(i);
            s.grad_u(0) += c * ws.vector(i, 0);
            s.grad_u(1) += c * ws.vector(i, 1);
        }
        if (sol.v_space != nullptr) {
            const FunctionSpace& v = *sol.v_space;
            const ShapeValues vs = v.evaluate(e, xhat);
            const auto& vd = v.element_dofs(e);
            for (std::size_t i = 0; i < vd.size(); ++i) {
                const Complex c = sol.phi_coeffs(vd[i].global);
                s.phi(0) += c * vs.vector(i, 0);
                s.phi(1) += c * vs.vector(i, 1);
                s.div_phi += c * vs.divergence(i);
            }
        } else {
            const Complex factor = kI / sol.k;
            s.phi = factor * s.grad_u;
            s.div_phi = factor * broken_laplacian(w, sol.u_coeffs, e, xhat);
        }
        return s;
    };
}

PairEvaluator difference_evaluator(PairEvaluator a, PairEvaluator b)
{
    return [a = std::move(a), b = std::move(b)](int e, const Vec2& xhat, const Vec2& x) {
        const PairSample sa = a(e, xhat, x);
        const PairSample sb = b(e, xhat, x);
        PairSample s;
        s.phi = sa.phi - sb.phi;
        s.div_phi = sa.div_phi - sb.div_phi;
        s.u = sa.u - sb.u;
        s.grad_u = sa.grad_u - sb.grad_u;
        return s;
    };
}

PairEvaluator zero_evaluator()
{
    return [](int, const Vec2&, const Vec2&) { return PairSample{}; };
}

PairEvaluator basis_evaluator(const FunctionSpace& space, bool is_flux, int global_dof)
{
    return [&space, is_flux, global_dof](int e, const Vec2& xhat, const Vec2&) {
        PairSample s;
        const auto& dofs = space.element_dofs(e);
        for (std::size_t i = 0; i < dofs.size(); ++i) {
            if (dofs[i].global != global_dof) {
                continue;
            }
            const ShapeValues sv = space.evaluate(e, xhat);
            if (is_flux) {
                s.phi = CVec2(sv.vector(i, 0), sv.vector(i, 1));
                s.div_phi = sv.divergence(i);
            } else {
                s.u = sv.scalar(i);
                s.grad_u = CVec2(sv.vector(i, 0), sv.vector(i, 1));
            }
        }
        return s;
    };
}

// ---------------------------------------------------------------- assembly

AssembledSystem assemble_fosls(const FunctionSpace& v_space, const FunctionSpace& w_space,
                               const WaveProblem& problem, const AssemblyOptions& options)
{
    check_same_mesh(v_space, w_space);
    require(v_space.kind() == SpaceKind::VectorHdiv, "assemble_fosls: V_h must be an H(div) space");
    require(w_space.kind() == SpaceKind::ScalarH1, "assemble_fosls: W_h must be an H1 space");
    require(problem.k >= kMinWavenumber, "assemble_fosls: k must be positive");
    const Mesh& mesh = v_space.mesh();
    require(problem.dim == mesh.dim(), "assemble_fosls: problem and mesh dimensions differ");

    const double k = problem.k;
    const int p = std::max(v_space.degree(), w_space.degree());
    const int exactness = options.quad_exactness >= 0 ? options.quad_exactness : default_exactness(p);
    const ElementIntegrator integ(mesh, exactness, problem.breakpoints);
    const auto vtab = tabulate_rule(v_space, integ.rule());
    const auto wtab = tabulate_rule(w_space, integ.rule());

    AssembledSystem sys;
    sys.kind = SystemKind::Fosls;
    sys.k = k;
    sys.n_v = v_space.num_dofs();
    sys.n_w = w_space.num_dofs();
    sys.rhs = VectorXc::Zero(sys.size());
    std::vector<Triplet> triplets;
    const int nloc = v_space.dofs_per_element() + w_space.dofs_per_element();
    triplets.reserve(static_cast<std::size_t>(mesh.num_elements()) * nloc * nloc);

    const Complex f_factor = -kI / k;
    ShapeValues vs;
    ShapeValues ws;
    for (int e : visiting_order(mesh, options)) {
        MatrixXc a = MatrixXc::Zero(nloc, nloc);
        VectorXc r = VectorXc::Zero(nloc);
        const bool split = integ.split(e);
        const auto pts = integ.points(e);
        for (std::size_t q = 0; q < pts.size(); ++q) {
            if (split) {
                v_space.map_shape(e, v_space.tabulate(pts[q].xhat), vs);
                w_space.map_shape(e, w_space.tabulate(pts[q].xhat), ws);
            } else {
                v_space.map_shape(e, vtab[q], vs);
                w_space.map_shape(e, wtab[q], ws);
            }
            const FoslsShape s = fosls_shape(vs, ws, k);
            const double wq = pts[q].weight;
            a.noalias() += wq * (s.s1x.conjugate() * s.s1x.transpose() + s.s1y.conjugate() * s.s1y.transpose() +
                                 s.s2.conjugate() * s.s2.transpose());
            const Complex f = problem.f(pts[q].x);
            r += wq * f_factor * f * s.s2.conjugate();
        }
        const auto g = fosls_global_dofs(v_space, w_space, e);
        for (int i = 0; i < nloc; ++i) {
            sys.rhs(g[i]) += r(i);
            for (int j = 0; j < nloc; ++j) {
                triplets.push_back({g[i], g[j], a(i, j)});
            }
        }
    }

    for (const BoundaryPoint& bp : boundary_quadrature(mesh, p + 2)) {
        v_space.map_shape(bp.elem, v_space.tabulate(bp.xhat), vs);
        w_space.map_shape(bp.elem, w_space.tabulate(bp.xhat), ws);
        const VectorXc s3 = fosls_trace(vs, ws, bp.normal);
        const MatrixXc a = k * bp.weight * (s3.conjugate() * s3.transpose());
        const VectorXc r = bp.weight * kI * problem.g(bp.x, bp.normal) * s3.conjugate();
        const auto g = fosls_global_dofs(v_space, w_space, bp.elem);
        for (int i = 0; i < nloc; ++i) {
            sys.rhs(g[i]) += r(i);
            for (int j = 0; j < nloc; ++j) {
                triplets.push_back({g[i], g[j], a(i, j)});
            }
        }
    }
    sys.matrix = CsrMatrix::from_triplets(sys.size(), sys.size(), std::move(triplets));
    return sys;
}

AssembledSystem assemble_classical_fem(const FunctionSpace& w_space, const WaveProblem& problem,
                                       const AssemblyOptions& options)
{
    require(w_space.kind() == SpaceKind::ScalarH1, "assemble_classical_fem: H1 space required");
    require(problem.k >= kMinWavenumber, "assemble_classical_fem: k must be positive");
    const Mesh& mesh = w_space.mesh();
    require(problem.dim == mesh.dim(), "assemble_classical_fem: problem and mesh dimensions differ");
    const double k = problem.k;
    const int p = w_space.degree();
    const int exactness = options.quad_exactness >= 0 ? options.quad_exactness : default_exactness(p);
    const ElementIntegrator integ(mesh, exactness, problem.breakpoints);
    const auto wtab = tabulate_rule(w_space, integ.rule());

    AssembledSystem sys;
    sys.kind = SystemKind::ClassicalFem;
    sys.k = k;
    sys.n_v = 0;
    sys.n_w = w_space.num_dofs();
    sys.rhs = VectorXc::Zero(sys.size());
    const int nloc = w_space.dofs_per_element();
    std::vector<Triplet> triplets;
    triplets.reserve(static_cast<std::size_t>(mesh.num_elements()) * nloc * nloc);

    ShapeValues ws;
    for (int e : visiting_order(mesh, options)) {
        MatrixXd stiff = MatrixXd::Zero(nloc, nloc);
        MatrixXd mass = MatrixXd::Zero(nloc, nloc);
        VectorXc r = VectorXc::Zero(nloc);
        const bool split = integ.split(e);
        const auto pts = integ.points(e);
        for (std::size_t q = 0; q < pts.size(); ++q) {
            w_space.map_shape(e, split ? w_space.tabulate(pts[q].xhat) : wtab[q], ws);
            const double wq = pts[q].weight;
            stiff.noalias() += wq * ws.vector * ws.vector.transpose();
            mass.noalias() += wq * ws.scalar * ws.scalar.transpose();
            r += wq * problem.f(pts[q].x) * ws.scalar.cast<Complex>();
        }
        const auto& dofs = w_space.element_dofs(e);
        for (int i = 0; i < nloc; ++i) {
            sys.rhs(dofs[i].global) += r(i);
            for (int j = 0; j < nloc; ++j) {
                triplets.push_back({dofs[i].global, dofs[j].global, Complex(stiff(i, j) - k * k * mass(i, j))});
            }
        }
    }
    for (const BoundaryPoint& bp : boundary_quadrature(mesh, p + 2)) {
        w_space.map_shape(bp.elem, w_space.tabulate(bp.xhat), ws);
        const auto& dofs = w_space.element_dofs(bp.elem);
        const Complex g = problem.g(bp.x, bp.normal);
        for (int i = 0; i < nloc; ++i) {
            sys.rhs(dofs[i].global) += bp.weight * g * ws.scalar(i);
            for (int j = 0; j < nloc; ++j) {
                triplets.push_back({dofs[i].global, dofs[j].global, -kI * k * bp.weight * ws.scalar(i) * ws.scalar(j)});
            }
        }
    }
    sys.matrix = CsrMatrix::from_triplets(sys.size(), sys.size(), std::move(triplets));
    return sys;
}

// ---------------------------------------------------------------- forms

namespace {

struct FormTerms {
    CVec2 first;  // i k phi + grad u
    Complex second; // i k u + div phi
};

FormTerms form_terms(const PairSample& s, double k)
{
    return {kI * k * s.phi + s.grad_u, kI * k * s.u + s.div_phi};
}

Complex trace_term(const PairSample& s, const Vec2& n) { return s.phi(0) * n.x() + s.phi(1) * n.y() + s.u; }

} // namespace

Complex evaluate_b(const PairEvaluator& a, const PairEvaluator& b, const Mesh& mesh, double k, int exactness,
                   std::span<const double> breakpoints)
{
    const QuadratureRule rule = simplex_quadrature(mesh.dim(), exactness);
    Complex sum(0.0);
    for (int e = 0; e < mesh.num_elements(); ++e) {
        for (const auto& qp : element_quadrature(mesh, e, rule, breakpoints)) {
            const FormTerms ta = form_terms(a(e, qp.xhat, qp.x), k);
            const FormTerms tb = form_terms(b(e, qp.xhat, qp.x), k);
            sum += qp.weight * (ta.first(0) * std::conj(tb.first(0)) +
                                ta.first(1) * std::conj(tb.first(1)) + ta.second * std::conj(tb.second));
        }
    }
    for (const BoundaryPoint& bp : boundary_quadrature(mesh, exactness / 2 + 1)) {
        const Complex ta = trace_term(a(bp.elem, bp.xhat, bp.x), bp.normal);
        const Complex tb = trace_term(b(bp.elem, bp.xhat, bp.x), bp.normal);
        sum += k * bp.weight * ta * std::conj(tb);
    }
    return sum;
}

Complex evaluate_F(const PairEvaluator& test, const WaveProblem& problem, const Mesh& mesh, int exactness)
{
    const QuadratureRule rule = simplex_quadrature(mesh.dim(), exactness);
    const double k = problem.k;
    Complex sum(0.0);
    for (int e = 0; e < mesh.num_elements(); ++e) {
        for (const auto& qp : element_quadrature(mesh, e, rule, problem.breakpoints)) {
            const FormTerms t = form_terms(test(e, qp.xhat, qp.x), k);
            sum += qp.weight * (-kI / k) * problem.f(qp.x) * std::conj(t.second);
        }
    }
    for (const BoundaryPoint& bp : boundary_quadrature(mesh, exactness / 2 + 1)) {
        const Complex t = trace_term(test(bp.elem, bp.xhat, bp.x), bp.normal);
        sum += bp.weight * kI * problem.g(bp.x, bp.normal) * std::conj(t);
    }
    return sum;
}

VectorXc fosls_load_from_pair(const PairEvaluator& pair, const FunctionSpace& v_space, const FunctionSpace& w_space,
                              double k, std::span<const double> breakpoints, int quad_exactness)
{
    check_same_mesh(v_space, w_space);
    const Mesh& mesh = v_space.mesh();
    const int p = std::max(v_space.degree(), w_space.degree());
    const int exactness = quad_exactness >= 0 ? quad_exactness : default_exactness(p);
    const QuadratureRule rule = simplex_quadrature(mesh.dim(), exactness);
    const int n = v_space.num_dofs() + w_space.num_dofs();
    VectorXc out = VectorXc::Zero(n);
    ShapeValues vs;
    ShapeValues ws;
    for (int e = 0; e < mesh.num_elements(); ++e) {
        const auto g = fosls_global_dofs(v_space, w_space, e);
        for (const auto& qp : element_quadrature(mesh, e, rule, breakpoints)) {
            v_space.map_shape(e, v_space.tabulate(qp.xhat), vs);
            w_space.map_shape(e, w_space.tabulate(qp.xhat), ws);
            const FoslsShape s = fosls_shape(vs, ws, k);
            const FormTerms t = form_terms(pair(e, qp.xhat, qp.x), k);
            for (std::size_t i = 0; i < g.size(); ++i) {
                out(g[i]) += qp.weight * (t.first(0) * std::conj(s.s1x(i)) + t.first(1) * std::conj(s.s1y(i)) +
                                          t.second * std::conj(s.s2(i)));
            }
        }
    }
    for (const BoundaryPoint& bp : boundary_quadrature(mesh, p + 2)) {
        v_space.map_shape(bp.elem, v_space.tabulate(bp.xhat), vs);
        w_space.map_shape(bp.elem, w_space.tabulate(bp.xhat), ws);
        const VectorXc s3 = fosls_trace(vs, ws, bp.normal);
        const Complex t = trace_term(pair(bp.elem, bp.xhat, bp.x), bp.normal);
        const auto g = fosls_global_dofs(v_space, w_space, bp.elem);
        for (std::size_t i = 0; i < g.size(); ++i) {
            out(g[i]) += k * bp.weight * t * std::conj(s3(i));
        }
    }
    return out;
}

double galerkin_orthogonality_residual(const DiscreteSolution& sol, const AssembledSystem& system,
                                       const WaveProblem& problem)
{
    require(system.kind == SystemKind::Fosls, "galerkin_orthogonality_residual: FOSLS system required");
    require(problem.exact.has_value(), "galerkin_orthogonality_residual: exact solution required");
    const VectorXc exact_load = fosls_load_from_pair(exact_evaluator(*problem.exact), *sol.v_space, *sol.w_space,
                                                     problem.k, problem.breakpoints);
    VectorXc x(system.size());
    x << sol.phi_coeffs, sol.u_coeffs;
    const VectorXc residual = exact_load - system.matrix.multiply(x);
    const double scale = system.rhs.cwiseAbs().maxCoeff();
    return scale > 0.0 ? residual.cwiseAbs().maxCoeff() / scale : residual.cwiseAbs().maxCoeff();
}

} // namespace helmls

#include "helmls/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace helmls {

namespace {

struct Integrals {
    double u_sq = 0.0;
    double eu_sq = 0.0;
    double grad_sq = 0.0;
    double bnd_sq = 0.0;
    double e1_sq = 0.0;
    double e2_sq = 0.0;
    double flux_sq = 0.0;
    double trace_sq = 0.0;
};

Integrals integrate(const DiscreteSolution& sol, const WaveProblem& problem, int exactness)
{
    const Mesh& mesh = sol.w_space->mesh();
    const double k = problem.k;
    const PairEvaluator exact = exact_evaluator(*problem.exact);
    const PairEvaluator err = difference_evaluator(exact, discrete_evaluator(sol));
    const QuadratureRule rule = simplex_quadrature(mesh.dim(), exactness);
    Integrals s;
    for (int e = 0; e < mesh.num_elements(); ++e) {
        for (const auto& qp : element_quadrature(mesh, e, rule, problem.breakpoints)) {
            const PairSample d = err(e, qp.xhat, qp.x);
            s.u_sq += qp.weight * std::norm(problem.exact->u(qp.x));
            s.eu_sq += qp.weight * std::norm(d.u);
            s.grad_sq += qp.weight * d.grad_u.squaredNorm();
            s.e1_sq += qp.weight * (kI * k * d.phi + d.grad_u).squaredNorm();
            s.e2_sq += qp.weight * std::norm(kI * k * d.u + d.div_phi);
            s.flux_sq += qp.weight * d.phi.squaredNorm();
        }
    }
    for (const BoundaryPoint& bp : boundary_quadrature(mesh, exactness / 2 + 1)) {
        const PairSample d = err(bp.elem, bp.xhat, bp.x);
        s.bnd_sq += bp.weight * std::norm(d.u);
        s.trace_sq += bp.weight * std::norm(d.phi(0) * bp.normal.x() + d.phi(1) * bp.normal.y() + d.u);
    }
    return s;
}

} // namespace

ErrorReport compute_errors(const DiscreteSolution& sol, const WaveProblem& problem, int exactness)
{
    require(problem.exact.has_value(), "compute_errors: problem has no exact solution");
    require(sol.w_space != nullptr, "compute_errors: solution has no W_h space");
    const int p = sol.w_space->degree();
    const int q = exactness >= 0 ? exactness : 2 * p + 8;
    const Integrals a = integrate(sol, problem, q);
    ErrorReport r;
    r.l2_rel = a.u_sq > 0.0 ? std::sqrt(a.eu_sq / a.u_sq) : std::sqrt(a.eu_sq);
    r.h1_err = std::sqrt(a.grad_sq);
    r.bnd_l2 = std::sqrt(a.bnd_sq);
    r.e1 = std::sqrt(a.e1_sq);
    r.e2 = std::sqrt(a.e2_sq);
    r.flux_l2 = std::sqrt(a.flux_sq);
    r.boundary_term = std::sqrt(a.trace_sq);

    const Integrals b = integrate(sol, problem, 2 * q);
    const double l2_doubled = b.u_sq > 0.0 ? std::sqrt(b.eu_sq / b.u_sq) : std::sqrt(b.eu_sq);
    r.quadrature_change = r.l2_rel > 0.0 ? std::abs(l2_doubled - r.l2_rel) / r.l2_rel : std::abs(l2_doubled);
    return r;
}

double dofs_per_wavelength(double dofs, double k, double volume, int dim)
{
    require(dofs > 0.0 && k > 0.0 && volume > 0.0 && dim >= 1, "dofs_per_wavelength: arguments must be positive");
    const double inv_d = 1.0 / dim;
    return 2.0 * std::numbers::pi * std::pow(dofs, inv_d) / (k * std::pow(volume, inv_d));
}

OrderEstimate empirical_order(const std::vector<double>& h, const std::vector<double>& errors)
{
    require(h.size() == errors.size(), "empirical_order: h and errors differ in length");
    require(h.size() >= 2, "empirical_order: at least 2 rows required");
    OrderEstimate out;
    for (std::size_t i = 0; i + 1 < h.size(); ++i) {
        out.pairwise.push_back(std::log(errors[i] / errors[i + 1]) / std::log(h[i] / h[i + 1]));
    }
    const std::size_t start = h.size() > 3 ? h.size() - 3 : 0;
    const std::size_t m = h.size() - start;
    double sx = 0.0;
    double sy = 0.0;
    for (std::size_t i = start; i < h.size(); ++i) {
        sx += std::log(h[i]);
        sy += std::log(errors[i]);
    }
    const double mx = sx / m;
    const double my = sy / m;
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = start; i < h.size(); ++i) {
        const double dx = std::log(h[i]) - mx;
        sxy += dx * (std::log(errors[i]) - my);
        sxx += dx * dx;
    }
    out.tail = sxy / sxx;
    return out;
}

OrderEstimate empirical_order(const ConvergenceTable& table, double ErrorReport::*field)
{
    std::vector<double> h;
    std::vector<double> e;
    for (const auto& row : table.rows) {
        h.push_back(row.h);
        e.push_back(row.errors.*field);
    }
    return empirical_order(h, e);
}

} // namespace helmls

#include "helmls/problems.hpp"

#include <cmath>

namespace helmls {

BoundaryFn robin_data_from_exact(ComplexScalarFn u, ComplexVectorFn grad_u, double k)
{
    return [u = std::move(u), grad_u = std::move(grad_u), k](const Vec2& x, const Vec2& n) {
        const CVec2 g = grad_u(x);
        return g(0) * n.x() + g(1) * n.y() - kI * k * u(x);
    };
}

WaveProblem plane_wave_problem(double k)
{
    require(k >= kMinWavenumber, "plane_wave_problem: k must be positive");
    const double k1 = k / std::sqrt(2.0);
    const double k2 = -k1;
    WaveProblem pr;
    pr.name = "plane-wave-2d";
    pr.dim = 2;
    pr.k = k;
    ExactBundle ex;
    ex.u = [=](const Vec2& x) { return std::exp(kI * (k1 * x.x() + k2 * x.y())); };
    ex.grad_u = [=](const Vec2& x) {
        const Complex u = std::exp(kI * (k1 * x.x() + k2 * x.y()));
        return CVec2(kI * k1 * u, kI * k2 * u);
    };
    ex.laplacian_u = [=](const Vec2& x) {
        return -(k1 * k1 + k2 * k2) * std::exp(kI * (k1 * x.x() + k2 * x.y()));
    };
    ex.phi = [=](const Vec2& x) {
        // i k^{-1} grad u = -(k1, k2) u / k
        const Complex u = std::exp(kI * (k1 * x.x() + k2 * x.y()));
        return CVec2(-k1 / k * u, -k2 / k * u);
    };
    ex.div_phi = [=](const Vec2& x) {
        return kI / k * (-(k1 * k1 + k2 * k2)) * std::exp(kI * (k1 * x.x() + k2 * x.y()));
    };
    pr.f = [](const Vec2&) { return Complex(0.0); };
    pr.g = robin_data_from_exact(ex.u, ex.grad_u, k);
    pr.exact = std::move(ex);
    return pr;
}

WaveProblem piecewise_1d_problem(double k)
{
    require(k >= kMinWavenumber, "piecewise_1d_problem: k must be positive");
    const double c = 1.0 / (k * k);
    const double right = 1.0 + 2.0 * c;
    WaveProblem pr;
    pr.name = "piecewise-1d";
    pr.dim = 1;
    pr.k = k;
    pr.breakpoints = {0.0};
    ExactBundle ex;
    ex.u = [=](const Vec2& x) {
        const double t = x.x();
        return Complex(t <= 0.0 ? std::cos(k * t) + c : right * std::cos(k * t) - c);
    };
    ex.grad_u = [=](const Vec2& x) {
        const double t = x.x();
        const double du = (t <= 0.0 ? -k * std::sin(k * t) : -right * k * std::sin(k * t));
        return CVec2(du, 0.0);
    };
    ex.laplacian_u = [=](const Vec2& x) {
        const double t = x.x();
        return Complex(t <= 0.0 ? -k * k * std::cos(k * t) : -right * k * k * std::cos(k * t));
    };
    ex.phi = [grad = ex.grad_u, k](const Vec2& x) { return CVec2(kI / k * grad(x)); };
    ex.div_phi = [lap = ex.laplacian_u, k](const Vec2& x) { return kI / k * lap(x); };
    pr.f = [](const Vec2& x) { return Complex(x.x() <= 0.0 ? -1.0 : 1.0); };
    pr.g = robin_data_from_exact(ex.u, ex.grad_u, k);
    pr.exact = std::move(ex);
    return pr;
}

const std::vector<ProblemInfo>& problem_registry()
{
    static const std::vector<ProblemInfo> registry{
        {"plane-wave-2d", 2, "u = exp(i(k1 x + k2 y)), k1 = -k2 = k/sqrt(2), f = 0; unit square or polygonal disk"},
        {"piecewise-1d", 1, "Omega = (-1,1), f = -1 on (-1,0], +1 on (0,1); piecewise cosine solution in H^{2.5-}"},
    };
    return registry;
}

WaveProblem make_problem(const std::string& name, double k)
{
    if (name == "plane-wave-2d") {
        return plane_wave_problem(k);
    }
    if (name == "piecewise-1d") {
        return piecewise_1d_problem(k);
    }
    throw InvalidArgument("unknown problem '" + name + "'");
}

double pde_residual(const WaveProblem& problem, const Vec2& x)
{
    require(problem.exact.has_value(), "pde_residual: problem has no exact solution");
    const ExactBundle& ex = *problem.exact;
    const Complex lap = ex.laplacian_u(x);
    const Complex u = ex.u(x);
    const Complex f = problem.f(x);
    const double k2 = problem.k * problem.k;
    const double scale = std::abs(lap) + k2 * std::abs(u) + std::abs(f);
    const double r = std::abs(-lap - k2 * u - f);
    return scale > 0.0 ? r / scale : r;
}

double boundary_residual(const WaveProblem& problem, const Vec2& x, const Vec2& normal)
{
    require(problem.exact.has_value(), "boundary_residual: problem has no exact solution");
    const ExactBundle& ex = *problem.exact;
    const CVec2 gu = ex.grad_u(x);
    const Complex dn = gu(0) * normal.x() + gu(1) * normal.y();
    const Complex iku = kI * problem.k * ex.u(x);
    const Complex g = problem.g(x, normal);
    const double scale = std::abs(dn) + std::abs(iku) + std::abs(g);
    const double r = std::abs(dn - iku - g);
    return scale > 0.0 ? r / scale : r;
}

} // namespace helmls

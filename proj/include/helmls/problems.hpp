#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "helmls/types.hpp"

namespace helmls {

using ComplexScalarFn = std::function<Complex(const Vec2&)>;
using ComplexVectorFn = std::function<CVec2(const Vec2&)>;
/// Impedance datum evaluated at a boundary point with its outward unit normal.
using BoundaryFn = std::function<Complex(const Vec2&, const Vec2&)>;

/// Closed-form solution with the derived flux phi = i k^{-1} grad u.
struct ExactBundle {
    ComplexScalarFn u;
    ComplexVectorFn grad_u;
    ComplexScalarFn laplacian_u;
    ComplexVectorFn phi;
    ComplexScalarFn div_phi;
    bool residual_checkable = true;
};

/// -Delta u - k^2 u = f in Omega, d_n u - i k u = g on the boundary.
struct WaveProblem {
    std::string name;
    int dim = 1;
    double k = 1.0;
    ComplexScalarFn f;
    BoundaryFn g;
    std::optional<ExactBundle> exact;
    /// Points (1D x-coordinates) where f or the solution's second derivative
    /// jump; element quadrature is split there.
    std::vector<double> breakpoints;
};

/// Lower bound k0 on admissible wavenumbers.
inline constexpr double kMinWavenumber = 1e-8;

/// g(x) = grad u(x) . n(x) - i k u(x).
BoundaryFn robin_data_from_exact(ComplexScalarFn u, ComplexVectorFn grad_u, double k);

/// u = exp(i (k1 x + k2 y)), k1 = -k2 = k / sqrt(2), f = 0.
WaveProblem plane_wave_problem(double k);

/// Omega = (-1, 1), f = -1 on (-1, 0], +1 on (0, 1); piecewise cosine solution.
WaveProblem piecewise_1d_problem(double k);

struct ProblemInfo {
    std::string name;
    int dim;
    std::string description;
};

const std::vector<ProblemInfo>& problem_registry();
/// Looks up a registered problem; throws InvalidArgument for unknown names.
WaveProblem make_problem(const std::string& name, double k);

/// Pointwise PDE residual |-Delta u - k^2 u - f| relative to the magnitude of
/// the terms involved.
double pde_residual(const WaveProblem& problem, const Vec2& x);
/// Pointwise boundary residual |d_n u - i k u - g| relative to the terms.
double boundary_residual(const WaveProblem& problem, const Vec2& x, const Vec2& normal);

} // namespace helmls

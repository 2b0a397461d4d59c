#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "helmls/problems.hpp"
#include "helmls/quadrature.hpp"
#include "helmls/sparse.hpp"
#include "helmls/spaces.hpp"

namespace helmls {

enum class SystemKind { Fosls, ClassicalFem };

/// Complex system A x = rhs.
///
/// Fosls: unknowns ordered [V_h block | W_h block], A(i, j) = b(Phi_j, Phi_i)
/// with the sesquilinear convention (u, v) = int u conj(v); the matrix is
/// Hermitian positive definite. ClassicalFem: unknowns of S_p only, complex
/// symmetric and indefinite.
struct AssembledSystem {
    SystemKind kind = SystemKind::Fosls;
    double k = 1.0;
    int n_v = 0;
    int n_w = 0;
    CsrMatrix matrix;
    VectorXc rhs;

    int size() const { return n_v + n_w; }
};

struct DiscreteSolution {
    SystemKind kind = SystemKind::Fosls;
    double k = 1.0;
    std::shared_ptr<const FunctionSpace> v_space; ///< null for ClassicalFem
    std::shared_ptr<const FunctionSpace> w_space;
    VectorXc phi_coeffs;
    VectorXc u_coeffs;
};

DiscreteSolution make_solution(const AssembledSystem& system, std::shared_ptr<const FunctionSpace> v_space,
                               std::shared_ptr<const FunctionSpace> w_space, const VectorXc& x);

/// Values of a pair (phi, u) and of its derivatives at one point.
struct PairSample {
    CVec2 phi = CVec2::Zero();
    Complex div_phi{0.0};
    Complex u{0.0};
    CVec2 grad_u = CVec2::Zero();
};

/// Evaluates a pair at reference point xhat of element `elem`, physical point x.
using PairEvaluator = std::function<PairSample(int elem, const Vec2& xhat, const Vec2& x)>;

PairEvaluator exact_evaluator(const ExactBundle& exact);
/// Discrete pair; for ClassicalFem solutions the flux is post-processed as
/// phi_h = i k^{-1} grad u_h with its element-wise divergence.
PairEvaluator discrete_evaluator(const DiscreteSolution& sol);
PairEvaluator difference_evaluator(PairEvaluator a, PairEvaluator b);
/// A single global basis function of V_h (block 0) or W_h (block 1).
PairEvaluator basis_evaluator(const FunctionSpace& space, bool is_flux, int global_dof);
PairEvaluator zero_evaluator();

struct QuadraturePoint {
    Vec2 xhat;
    Vec2 x;
    double weight; ///< physical measure
};

struct BoundaryPoint {
    int elem;
    Vec2 xhat;
    Vec2 x;
    Vec2 normal;
    double weight;
};

/// Element rule mapped to the physical element; in 1D the element is split at
/// any breakpoint strictly inside it.
std::vector<QuadraturePoint> element_quadrature(const Mesh& mesh, int e, const QuadratureRule& rule,
                                                std::span<const double> breakpoints);
/// Points on every boundary facet (Gauss-Legendre with n_points in 2D).
std::vector<BoundaryPoint> boundary_quadrature(const Mesh& mesh, int n_points);

struct AssemblyOptions {
    /// Volume rule exactness; negative selects 2p + 2.
    int quad_exactness = -1;
    /// Optional element visiting order (a permutation of 0..n_elements-1).
    std::vector<int> element_order;
};

AssembledSystem assemble_fosls(const FunctionSpace& v_space, const FunctionSpace& w_space,
                               const WaveProblem& problem, const AssemblyOptions& options = {});

AssembledSystem assemble_classical_fem(const FunctionSpace& w_space, const WaveProblem& problem,
                                       const AssemblyOptions& options = {});

/// b(a, b) by quadrature of the given exactness (split at breakpoints).
Complex evaluate_b(const PairEvaluator& a, const PairEvaluator& b, const Mesh& mesh, double k, int exactness,
                   std::span<const double> breakpoints = {});

/// F(test) for the FOSLS functional.
Complex evaluate_F(const PairEvaluator& test, const WaveProblem& problem, const Mesh& mesh, int exactness);

/// Vector of b(pair, Phi_i) over all basis functions Phi_i of V_h x W_h,
/// assembled element by element with the assembly rule.
VectorXc fosls_load_from_pair(const PairEvaluator& pair, const FunctionSpace& v_space,
                              const FunctionSpace& w_space, double k, std::span<const double> breakpoints,
                              int quad_exactness = -1);

/// max_i |b((phi - phi_h, u - u_h), Phi_i)| / max_i |F(Phi_i)| for a solved
/// FOSLS system whose problem has an exact solution.
double galerkin_orthogonality_residual(const DiscreteSolution& sol, const AssembledSystem& system,
                                       const WaveProblem& problem);

} // namespace helmls

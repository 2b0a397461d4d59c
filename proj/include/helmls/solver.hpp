#pragma once

#include <string>
#include <vector>

#include "helmls/fosls.hpp"

namespace helmls {

enum class SolveMethod { Auto, Iterative, Direct };

struct SolveOptions {
    SolveMethod method = SolveMethod::Auto;
    double tolerance = 1e-10;
    /// Systems up to this size are factorized densely under Auto.
    int dense_limit = 2000;
};

struct SolveReport {
    VectorXc solution;
    int iterations = 0; ///< CG iterations; 0 for direct solves
    double relative_residual = 0.0;
    std::string method;
    std::vector<double> history; ///< CG relative residual per iteration
};

/// Solver for a linear system given as (matrix, rhs) pairs.
SolveReport solve_hpd(const CsrMatrix& matrix, const VectorXc& rhs, const SolveOptions& options = {});
SolveReport solve_general(const CsrMatrix& matrix, const VectorXc& rhs, const SolveOptions& options = {});

/// FOSLS systems only.
SolveReport solve_hpd(const AssembledSystem& system, const SolveOptions& options = {});
/// Classical FEM systems only.
SolveReport solve_general(const AssembledSystem& system, const SolveOptions& options = {});

double relative_residual(const CsrMatrix& matrix, const VectorXc& x, const VectorXc& rhs);

} // namespace helmls

#include "helmls/solver.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/SparseCholesky>
#include <Eigen/SparseLU>

namespace helmls {

namespace {

constexpr int kRefinementSteps = 3;

void check_shape(const CsrMatrix& a, const VectorXc& b)
{
    require(a.rows() == a.cols(), "solve: matrix must be square");
    require(a.rows() == b.size(), "solve: rhs length does not match the matrix");
}

/// Applies a factorization with a few steps of iterative refinement.
template <typename Factor>
VectorXc refine(const Factor& solve, const CsrMatrix& a, const VectorXc& b, double tol)
{
    VectorXc x = solve(b);
    for (int step = 0; step < kRefinementSteps; ++step) {
        const VectorXc r = b - a.multiply(x);
        if (r.norm() <= 0.1 * tol * b.norm()) {
            break;
        }
        x += solve(r);
    }
    return x;
}

SolveReport finish(const CsrMatrix& a, const VectorXc& b, VectorXc x, std::string method, const SolveOptions& opt)
{
    SolveReport rep;
    rep.relative_residual = relative_residual(a, x, b);
    rep.solution = std::move(x);
    rep.method = std::move(method);
    if (!(rep.relative_residual <= opt.tolerance)) {
        std::ostringstream msg;
        msg << rep.method << ": relative residual " << rep.relative_residual << " above " << opt.tolerance;
        throw SolverError(msg.str());
    }
    return rep;
}

bool cg_jacobi(const CsrMatrix& a, const VectorXc& b, double tol, SolveReport& rep)
{
    const int n = a.rows();
    const VectorXc diag = a.diagonal();
    VectorXc inv(n);
    for (int i = 0; i < n; ++i) {
        inv(i) = std::abs(diag(i)) > 0.0 ? 1.0 / diag(i).real() : 1.0;
    }
    const double bnorm = b.norm();
    VectorXc x = VectorXc::Zero(n);
    rep.history.clear();
    rep.iterations = 0;
    if (bnorm == 0.0) {
        rep.solution = x;
        return true;
    }
    VectorXc r = b;
    VectorXc z = inv.cwiseProduct(r);
    VectorXc d = z;
    Complex rz = r.dot(z);
    const int max_iter = 20 * n;
    for (int it = 1; it <= max_iter; ++it) {
        const VectorXc ad = a.multiply(d);
        const Complex dad = d.dot(ad);
        if (std::abs(dad) == 0.0) {
            break;
        }
        const Complex alpha = rz / dad;
        x += alpha * d;
        r -= alpha * ad;
        const double res = r.norm() / bnorm;
        rep.history.push_back(res);
        rep.iterations = it;
        if (res <= 0.1 * tol) {
            rep.solution = x;
            return true;
        }
        z = inv.cwiseProduct(r);
        const Complex rz_new = r.dot(z);
        d = z + (rz_new / rz) * d;
        rz = rz_new;
    }
    rep.solution = x;
    return false;
}

} // namespace

double relative_residual(const CsrMatrix& matrix, const VectorXc& x, const VectorXc& rhs)
{
    const double bn = rhs.norm();
    const double rn = (rhs - matrix.multiply(x)).norm();
    return bn > 0.0 ? rn / bn : rn;
}

SolveReport solve_hpd(const CsrMatrix& a, const VectorXc& b, const SolveOptions& opt)
{
    check_shape(a, b);
    const int n = a.rows();
    const bool dense = opt.method == SolveMethod::Direct ||
                       (opt.method == SolveMethod::Auto && n <= opt.dense_limit);
    if (dense) {
        const Eigen::LLT<MatrixXc> llt(a.to_dense());
        if (llt.info() != Eigen::Success) {
            throw SolverError("solve_hpd: matrix is not Hermitian positive definite");
        }
        VectorXc x = refine([&](const VectorXc& r) { VectorXc y = llt.solve(r); return y; }, a, b, opt.tolerance);
        return finish(a, b, std::move(x), "dense-cholesky", opt);
    }
    SolveReport cg;
    if (cg_jacobi(a, b, opt.tolerance, cg)) {
        SolveReport rep = finish(a, b, cg.solution, "cg-jacobi", opt);
        rep.iterations = cg.iterations;
        rep.history = std::move(cg.history);
        return rep;
    }
    if (opt.method == SolveMethod::Iterative) {
        std::ostringstream msg;
        msg << "solve_hpd: CG did not converge in " << cg.iterations << " iterations; residual history:";
        for (std::size_t i = 0; i < cg.history.size(); i += std::max<std::size_t>(1, cg.history.size() / 10)) {
            msg << ' ' << cg.history[i];
        }
        throw SolverError(msg.str());
    }
    const Eigen::SparseMatrix<Complex> sa = a.to_eigen();
    Eigen::SimplicialLLT<Eigen::SparseMatrix<Complex>> llt(sa);
    if (llt.info() != Eigen::Success) {
        throw SolverError("solve_hpd: sparse Cholesky failed after CG non-convergence");
    }
    VectorXc x = refine([&](const VectorXc& r) { VectorXc y = llt.solve(r); return y; }, a, b, opt.tolerance);
    SolveReport rep = finish(a, b, std::move(x), "sparse-cholesky", opt);
    rep.history = std::move(cg.history);
    return rep;
}

SolveReport solve_general(const CsrMatrix& a, const VectorXc& b, const SolveOptions& opt)
{
    check_shape(a, b);
    const int n = a.rows();
    if (opt.method != SolveMethod::Iterative && n <= opt.dense_limit) {
        const MatrixXc dense = a.to_dense();
        const Eigen::PartialPivLU<MatrixXc> lu(dense);
        if (!(lu.matrixLU().diagonal().cwiseAbs().minCoeff() > 0.0) || !(lu.rcond() > 1e-300)) {
            throw SolverError("solve_general: matrix is singular");
        }
        VectorXc x = refine([&](const VectorXc& r) { VectorXc y = lu.solve(r); return y; }, a, b, opt.tolerance);
        return finish(a, b, std::move(x), "dense-lu", opt);
    }
    Eigen::SparseMatrix<Complex> sa = a.to_eigen();
    sa.makeCompressed();
    Eigen::SparseLU<Eigen::SparseMatrix<Complex>> lu;
    lu.compute(sa);
    if (lu.info() != Eigen::Success) {
        throw SolverError("solve_general: sparse LU failed (" + lu.lastErrorMessage() + ")");
    }
    VectorXc x = refine([&](const VectorXc& r) { VectorXc y = lu.solve(r); return y; }, a, b, opt.tolerance);
    return finish(a, b, std::move(x), "sparse-lu", opt);
}

SolveReport solve_hpd(const AssembledSystem& system, const SolveOptions& options)
{
    require(system.kind == SystemKind::Fosls, "solve_hpd: FOSLS system required");
    return solve_hpd(system.matrix, system.rhs, options);
}

SolveReport solve_general(const AssembledSystem& system, const SolveOptions& options)
{
    require(system.kind == SystemKind::ClassicalFem, "solve_general: classical FEM system required");
    return solve_general(system.matrix, system.rhs, options);
}

} // namespace helmls

#pragma once

#include <vector>

#include "helmls/fosls.hpp"

namespace helmls {

/// Error of a discrete pair against the exact solution; e^phi = phi - phi_h,
/// e^u = u - u_h.
struct ErrorReport {
    double l2_rel = 0.0;   ///< ||e^u|| / ||u||
    double h1_err = 0.0;   ///< ||grad e^u||
    double bnd_l2 = 0.0;   ///< ||e^u|| on the boundary
    double e1 = 0.0;       ///< ||i k e^phi + grad e^u||
    double e2 = 0.0;       ///< ||i k e^u + div e^phi||
    double flux_l2 = 0.0;  ///< ||e^phi||
    double boundary_term = 0.0; ///< ||e^phi . n + e^u|| on the boundary
    /// Relative change of l2_rel when the error quadrature exactness is doubled.
    double quadrature_change = 0.0;
};

/// Error norms by element quadrature of exactness 2p + 8 (or `exactness`).
ErrorReport compute_errors(const DiscreteSolution& sol, const WaveProblem& problem, int exactness = -1);

double dofs_per_wavelength(double dofs, double k, double volume, int dim);

struct ConvergenceRow {
    double h = 0.0;
    int p = 1;
    double k = 1.0;
    int n_elems = 0;
    int dofs = 0;
    double n_lambda = 0.0;
    ErrorReport errors;
};

/// Rows at fixed (p, k) ordered by decreasing h.
struct ConvergenceTable {
    std::vector<ConvergenceRow> rows;
};

struct OrderEstimate {
    /// log(e_i / e_{i+1}) / log(h_i / h_{i+1}) per consecutive pair.
    std::vector<double> pairwise;
    /// Least-squares slope of log e against log h over the last 3 rows.
    double tail = 0.0;
};

OrderEstimate empirical_order(const std::vector<double>& h, const std::vector<double>& errors);
/// Orders of the given ErrorReport field.
OrderEstimate empirical_order(const ConvergenceTable& table, double ErrorReport::*field = &ErrorReport::l2_rel);

} // namespace helmls

#include "helmls/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

namespace helmls {

void gauss_jacobi(int n, double alpha, double beta, std::vector<double>& nodes,
                  std::vector<double>& weights)
{
    require(n >= 1, "gauss_jacobi: need at least one point");
    require(alpha > -1.0 && beta > -1.0, "gauss_jacobi: exponents must exceed -1");

    // Jacobi matrix of the monic three-term recurrence.
    MatrixXd J = MatrixXd::Zero(n, n);
    const double ab = alpha + beta;
    for (int i = 0; i < n; ++i) {
        const double two_i_ab = 2.0 * i + ab;
        if (i == 0) {
            J(0, 0) = (beta - alpha) / (ab + 2.0);
        } else {
            J(i, i) = (beta * beta - alpha * alpha) / (two_i_ab * (two_i_ab + 2.0));
        }
        if (i + 1 < n) {
            const double k = i + 1.0;
            const double t = 2.0 * k + ab;
            const double num = 4.0 * k * (k + alpha) * (k + beta) * (k + ab);
            const double den = t * t * (t + 1.0) * (t - 1.0);
            const double off = std::sqrt(num / den);
            J(i, i + 1) = off;
            J(i + 1, i) = off;
        }
    }
    Eigen::SelfAdjointEigenSolver<MatrixXd> eig(J);
    const double mu0 = std::pow(2.0, ab + 1.0) * std::tgamma(alpha + 1.0) * std::tgamma(beta + 1.0) /
                       std::tgamma(ab + 2.0);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return eig.eigenvalues()(a) < eig.eigenvalues()(b); });
    nodes.resize(n);
    weights.resize(n);
    for (int i = 0; i < n; ++i) {
        const int j = order[i];
        nodes[i] = eig.eigenvalues()(j);
        const double v0 = eig.eigenvectors()(0, j);
        weights[i] = mu0 * v0 * v0;
    }
}

QuadratureRule gauss_legendre_unit(int n)
{
    std::vector<double> t;
    std::vector<double> w;
    gauss_jacobi(n, 0.0, 0.0, t, w);
    QuadratureRule rule;
    rule.dim = 1;
    rule.exactness = 2 * n - 1;
    for (int i = 0; i < n; ++i) {
        rule.points.emplace_back(0.5 * (t[i] + 1.0), 0.0);
        rule.weights.push_back(0.5 * w[i]);
    }
    return rule;
}

QuadratureRule simplex_quadrature(int dim, int exactness)
{
    require(dim == 1 || dim == 2, "simplex_quadrature: d must be 1 or 2");
    require(exactness >= 0, "simplex_quadrature: exactness must be non-negative");
    const int n = gauss_points_for(exactness);
    if (dim == 1) {
        QuadratureRule rule = gauss_legendre_unit(n);
        rule.exactness = std::max(exactness, 2 * n - 1);
        return rule;
    }

    // (xi, eta) in [0,1]^2, x = xi (1 - eta), y = eta, dx dy = (1 - eta) dxi deta.
    std::vector<double> ta;
    std::vector<double> wa;
    std::vector<double> tb;
    std::vector<double> wb;
    gauss_jacobi(n, 0.0, 0.0, ta, wa);
    gauss_jacobi(n, 1.0, 0.0, tb, wb);
    QuadratureRule rule;
    rule.dim = 2;
    rule.exactness = std::max(exactness, 2 * n - 1);
    for (int j = 0; j < n; ++j) {
        const double eta = 0.5 * (tb[j] + 1.0);
        // (1 - t) = 2 (1 - eta), dt = 2 deta: Jacobi weight scales by 1/4.
        const double weta = 0.25 * wb[j];
        for (int i = 0; i < n; ++i) {
            const double xi = 0.5 * (ta[i] + 1.0);
            rule.points.emplace_back(xi * (1.0 - eta), eta);
            rule.weights.push_back(0.5 * wa[i] * weta);
        }
    }
    return rule;
}

} // namespace helmls

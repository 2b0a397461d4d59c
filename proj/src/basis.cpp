#include "helmls/basis.hpp"

#include "helmls/mesh.hpp"

namespace helmls {

void jacobi_values(int n, double a, double b, double t, std::vector<double>& values,
                   std::vector<double>* derivatives)
{
    values.assign(n + 1, 0.0);
    if (derivatives != nullptr) {
        derivatives->assign(n + 1, 0.0);
    }
    values[0] = 1.0;
    if (n == 0) {
        return;
    }
    values[1] = 0.5 * ((a + b + 2.0) * t + (a - b));
    if (derivatives != nullptr) {
        (*derivatives)[1] = 0.5 * (a + b + 2.0);
    }
    for (int k = 2; k <= n; ++k) {
        const double s = 2.0 * k + a + b;
        const double c1 = 2.0 * k * (k + a + b) * (s - 2.0);
        const double c2 = (s - 1.0) * s * (s - 2.0);
        const double c2b = (s - 1.0) * (a * a - b * b);
        const double c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
        values[k] = ((c2 * t + c2b) * values[k - 1] - c3 * values[k - 2]) / c1;
        if (derivatives != nullptr) {
            auto& d = *derivatives;
            d[k] = ((c2 * t + c2b) * d[k - 1] + c2 * values[k - 1] - c3 * d[k - 2]) / c1;
        }
    }
}

void shifted_legendre_values(int n, double s, std::vector<double>& values)
{
    jacobi_values(n, 0.0, 0.0, 2.0 * s - 1.0, values);
}

std::array<int, 2> reference_edge_vertices(int m)
{
    switch (m) {
    case 0: return {1, 2};
    case 1: return {0, 2};
    default: return {0, 1};
    }
}

Vec2 reference_edge_point(int m, double s)
{
    const auto ev = reference_edge_vertices(m);
    const auto& rv = reference_vertices();
    return (1.0 - s) * rv[ev[0]] + s * rv[ev[1]];
}

ScalarBasis::ScalarBasis(int dim, int degree) : dim_(dim), degree_(degree)
{
    require(dim == 1 || dim == 2, "ScalarBasis: d must be 1 or 2");
    require(degree >= 1, "ScalarBasis: the H1 basis needs p >= 1 (vertex functions)");
    for (int v = 0; v <= dim; ++v) {
        info_.push_back({DofClass::Vertex, v, 0});
    }
    if (dim == 1) {
        for (int j = 0; j + 2 <= degree; ++j) {
            info_.push_back({DofClass::Interior, 0, j});
        }
        return;
    }
    for (int m = 0; m < 3; ++m) {
        for (int j = 0; j + 2 <= degree; ++j) {
            info_.push_back({DofClass::Edge, m, j});
        }
    }
    int idx = 0;
    for (int total = 0; total + 3 <= degree; ++total) {
        for (int i = 0; i <= total; ++i) {
            info_.push_back({DofClass::Interior, 0, idx++});
        }
    }
}

namespace {

struct Barycentric {
    double lam[3];
    Vec2 grad[3];
};

Barycentric barycentric(int dim, const Vec2& xhat)
{
    Barycentric b{};
    const auto l = reference_barycentric(dim, xhat);
    for (int i = 0; i < 3; ++i) {
        b.lam[i] = l[i];
    }
    if (dim == 1) {
        b.grad[0] = Vec2(-1.0, 0.0);
        b.grad[1] = Vec2(1.0, 0.0);
        b.grad[2] = Vec2::Zero();
    } else {
        b.grad[0] = Vec2(-1.0, -1.0);
        b.grad[1] = Vec2(1.0, 0.0);
        b.grad[2] = Vec2(0.0, 1.0);
    }
    return b;
}

template <bool WithGrad>
void evaluate_impl(int dim, int p, const Vec2& xhat, double* vals, MatrixXd* grads)
{
    const Barycentric bc = barycentric(dim, xhat);
    int row = 0;
    auto put = [&](double v, const Vec2& g) {
        if constexpr (WithGrad) {
            grads->row(row) = g.transpose();
        } else {
            vals[row] = v;
        }
        ++row;
    };

    for (int v = 0; v <= dim; ++v) {
        put(bc.lam[v], bc.grad[v]);
    }
    if (p < 2) {
        return;
    }

    std::vector<double> k;
    std::vector<double> dk;
    auto edge_block = [&](int a, int b) {
        const double la = bc.lam[a];
        const double lb = bc.lam[b];
        jacobi_values(p - 2, 1.0, 1.0, lb - la, k, WithGrad ? &dk : nullptr);
        for (int j = 0; j + 2 <= p; ++j) {
            const double prod = la * lb;
            Vec2 g = Vec2::Zero();
            if constexpr (WithGrad) {
                g = (lb * bc.grad[a] + la * bc.grad[b]) * k[j] + prod * dk[j] * (bc.grad[b] - bc.grad[a]);
            }
            put(prod * k[j], g);
        }
    };

    if (dim == 1) {
        edge_block(0, 1);
        return;
    }
    for (int m = 0; m < 3; ++m) {
        const auto ev = reference_edge_vertices(m);
        edge_block(ev[0], ev[1]);
    }
    if (p < 3) {
        return;
    }

    // Bubbles lambda0 lambda1 lambda2 P_a(lambda1 - lambda0) P_b(2 lambda2 - 1), a + b <= p - 3.
    const double bub = bc.lam[0] * bc.lam[1] * bc.lam[2];
    const Vec2 gbub = bc.lam[1] * bc.lam[2] * bc.grad[0] + bc.lam[0] * bc.lam[2] * bc.grad[1] +
                      bc.lam[0] * bc.lam[1] * bc.grad[2];
    const double u = bc.lam[1] - bc.lam[0];
    const double w = 2.0 * bc.lam[2] - 1.0;
    const Vec2 gu = bc.grad[1] - bc.grad[0];
    const Vec2 gw = 2.0 * bc.grad[2];
    std::vector<double> pu;
    std::vector<double> dpu;
    std::vector<double> pw;
    std::vector<double> dpw;
    jacobi_values(p - 3, 0.0, 0.0, u, pu, WithGrad ? &dpu : nullptr);
    jacobi_values(p - 3, 0.0, 0.0, w, pw, WithGrad ? &dpw : nullptr);
    for (int total = 0; total + 3 <= p; ++total) {
        for (int i = 0; i <= total; ++i) {
            const int j = total - i;
            const double poly = pu[i] * pw[j];
            Vec2 g = Vec2::Zero();
            if constexpr (WithGrad) {
                g = gbub * poly + bub * (dpu[i] * pw[j] * gu + pu[i] * dpw[j] * gw);
            }
            put(bub * poly, g);
        }
    }
}

} // namespace

void ScalarBasis::evaluate(const Vec2& xhat, Eigen::Ref<VectorXd> values) const
{
    evaluate_impl<false>(dim_, degree_, xhat, values.data(), nullptr);
}

void ScalarBasis::evaluate_gradients(const Vec2& xhat, Eigen::Ref<MatrixXd> grads) const
{
    MatrixXd g(size(), 2);
    evaluate_impl<true>(dim_, degree_, xhat, nullptr, &g);
    grads = g;
}

VectorXd ScalarBasis::values(const Vec2& xhat) const
{
    VectorXd v(size());
    evaluate(xhat, v);
    return v;
}

MatrixXd ScalarBasis::gradients(const Vec2& xhat) const
{
    MatrixXd g(size(), 2);
    evaluate_impl<true>(dim_, degree_, xhat, nullptr, &g);
    return g;
}

} // namespace helmls

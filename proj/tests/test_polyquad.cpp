#include <cmath>

#include <gtest/gtest.h>

#include "helmls/basis.hpp"
#include "helmls/quadrature.hpp"
#include "test_util.hpp"

using namespace helmls;

namespace {

/// Exact integral of x^a y^b over the reference triangle: a! b! / (a + b + 2)!.
double triangle_monomial(int a, int b)
{
    return std::tgamma(a + 1.0) * std::tgamma(b + 1.0) / std::tgamma(a + b + 3.0);
}

double integrate(const QuadratureRule& r, const std::function<double(const Vec2&)>& f)
{
    double s = 0.0;
    for (int q = 0; q < r.size(); ++q) {
        s += r.weights[q] * f(r.points[q]);
    }
    return s;
}

} // namespace

TEST(Quadrature, Examples)
{
    const QuadratureRule r11 = simplex_quadrature(1, 1);
    EXPECT_NEAR(integrate(r11, [](const Vec2& x) { return x.x(); }), 0.5, 1e-15);
    const QuadratureRule r20 = simplex_quadrature(2, 0);
    double w = 0.0;
    for (double v : r20.weights) {
        w += v;
    }
    EXPECT_NEAR(w, 0.5, 1e-15);
    const QuadratureRule r24 = simplex_quadrature(2, 4);
    EXPECT_NEAR(integrate(r24, [](const Vec2& x) { return x.x() * x.x() * x.y() * x.y(); }), 1.0 / 180.0, 1e-14);
}

TEST(Quadrature, ExactnessSweep)
{
    for (int e = 0; e <= 20; ++e) {
        const QuadratureRule r1 = simplex_quadrature(1, e);
        for (int a = 0; a <= e; ++a) {
            EXPECT_NEAR(integrate(r1, [a](const Vec2& x) { return std::pow(x.x(), a); }), 1.0 / (a + 1), 1e-13)
                << "d=1 e=" << e << " a=" << a;
        }
        const QuadratureRule r2 = simplex_quadrature(2, e);
        for (int a = 0; a <= e; ++a) {
            for (int b = 0; a + b <= e; ++b) {
                EXPECT_NEAR(integrate(r2, [a, b](const Vec2& x) { return std::pow(x.x(), a) * std::pow(x.y(), b); }),
                            triangle_monomial(a, b), 1e-13)
                    << "d=2 e=" << e << " a=" << a << " b=" << b;
            }
        }
    }
}

TEST(Quadrature, GaussJacobiWeightMass)
{
    std::vector<double> x;
    std::vector<double> w;
    gauss_jacobi(6, 1.0, 0.0, x, w);
    double s = 0.0;
    for (double v : w) {
        s += v;
    }
    EXPECT_NEAR(s, 2.0, 1e-14); // int_{-1}^{1} (1 - t) dt
}

TEST(Basis, Counts)
{
    EXPECT_EQ(ScalarBasis(1, 1).size(), 2);
    EXPECT_EQ(ScalarBasis(2, 1).size(), 3);
    const ScalarBasis b23(2, 3);
    EXPECT_EQ(b23.size(), 10);
    EXPECT_EQ(b23.num_vertex(), 3);
    EXPECT_EQ(3 * b23.num_edge_per_edge(), 6);
    EXPECT_EQ(b23.num_interior(), 1);
    EXPECT_THROW(ScalarBasis(2, 0), InvalidArgument);
}

TEST(Basis, P1IsHat)
{
    const ScalarBasis b(1, 1);
    for (double x : {0.0, 0.3, 0.7, 1.0}) {
        const VectorXd v = b.values(Vec2(x, 0.0));
        EXPECT_NEAR(v(0), 1.0 - x, 1e-15);
        EXPECT_NEAR(v(1), x, 1e-15);
    }
}

TEST(Basis, VertexEdgeInteriorStructure)
{
    for (int p = 1; p <= 6; ++p) {
        const ScalarBasis b(2, p);
        const auto& rv = reference_vertices();
        for (int v = 0; v < 3; ++v) {
            const VectorXd val = b.values(rv[v]);
            for (int i = 0; i < b.size(); ++i) {
                const double expect = (i == v) ? 1.0 : 0.0;
                EXPECT_NEAR(val(i), expect, 1e-14);
            }
        }
        for (int m = 0; m < 3; ++m) {
            for (double s : {0.13, 0.5, 0.77}) {
                const VectorXd val = b.values(reference_edge_point(m, s));
                for (int i = 0; i < b.size(); ++i) {
                    const BasisFunctionInfo& inf = b.info(i);
                    if (inf.cls == DofClass::Interior || (inf.cls == DofClass::Edge && inf.entity != m)) {
                        EXPECT_NEAR(val(i), 0.0, 1e-14);
                    }
                }
            }
        }
    }
}

TEST(Basis, SpansPolynomials)
{
    for (int d = 1; d <= 2; ++d) {
        for (int p = 1; p <= 7; ++p) {
            const ScalarBasis b(d, p);
            const int n = b.size();
            const int expect = d == 1 ? p + 1 : (p + 1) * (p + 2) / 2;
            ASSERT_EQ(n, expect);
            MatrixXd vdm(2 * n, n);
            for (int r = 0; r < 2 * n; ++r) {
                vdm.row(r) = b.values(tu::random_reference_point(d)).transpose();
            }
            Eigen::JacobiSVD<MatrixXd> svd(vdm);
            EXPECT_GT(svd.singularValues()(n - 1), 1e-8) << "d=" << d << " p=" << p;
        }
    }
}

TEST(Basis, GradientsMatchFiniteDifferences)
{
    constexpr double step = 1e-6;
    for (int d = 1; d <= 2; ++d) {
        const ScalarBasis b(d, 5);
        for (int t = 0; t < 20; ++t) {
            const Vec2 x = tu::random_reference_point(d);
            const MatrixXd g = b.gradients(x);
            for (int c = 0; c < d; ++c) {
                Vec2 e = Vec2::Zero();
                e(c) = step;
                const VectorXd fd = (b.values(x + e) - b.values(x - e)) / (2 * step);
                for (int i = 0; i < b.size(); ++i) {
                    EXPECT_NEAR(fd(i), g(i, c), 1e-6 * std::max(1.0, std::abs(g(i, c))));
                }
            }
        }
    }
}

TEST(Basis, PartitionOfUnity)
{
    for (int d = 1; d <= 2; ++d) {
        const ScalarBasis b(d, 4);
        for (int t = 0; t < 20; ++t) {
            const VectorXd v = b.values(tu::random_reference_point(d));
            EXPECT_NEAR(v.head(d + 1).sum(), 1.0, 1e-14);
        }
    }
}

TEST(Basis, JacobiValues)
{
    std::vector<double> v;
    std::vector<double> dv;
    jacobi_values(3, 0.0, 0.0, 0.5, v, &dv);
    EXPECT_NEAR(v[2], 0.5 * (3 * 0.25 - 1), 1e-15);
    EXPECT_NEAR(dv[2], 3 * 0.5, 1e-15);
    std::vector<double> s;
    shifted_legendre_values(2, 1.0, s);
    EXPECT_NEAR(s[2], 1.0, 1e-15);
}

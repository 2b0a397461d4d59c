#pragma once

#include <random>

#include "helmls/fosls.hpp"

namespace helmls::tu {

inline std::mt19937& rng()
{
    static std::mt19937 gen(20240611u);
    return gen;
}

inline double uniform(double a = -1.0, double b = 1.0)
{
    return std::uniform_real_distribution<double>(a, b)(rng());
}

inline VectorXd random_vector(int n)
{
    VectorXd v(n);
    for (int i = 0; i < n; ++i) {
        v(i) = uniform();
    }
    return v;
}

inline VectorXc random_complex_vector(int n)
{
    VectorXc v(n);
    for (int i = 0; i < n; ++i) {
        v(i) = Complex(uniform(), uniform());
    }
    return v;
}

/// Random point strictly inside the reference simplex.
inline Vec2 random_reference_point(int dim)
{
    if (dim == 1) {
        return Vec2(uniform(0.02, 0.98), 0.0);
    }
    double a = uniform(0.0, 1.0);
    double b = uniform(0.0, 1.0);
    if (a + b > 1.0) {
        a = 1.0 - a;
        b = 1.0 - b;
    }
    return Vec2(0.01 + 0.97 * a, 0.01 + 0.97 * b);
}

/// Problem with zero data on a given dimension.
inline WaveProblem zero_problem(int dim, double k)
{
    WaveProblem pr;
    pr.name = "zero";
    pr.dim = dim;
    pr.k = k;
    pr.f = [](const Vec2&) { return Complex(0.0); };
    pr.g = [](const Vec2&, const Vec2&) { return Complex(0.0); };
    return pr;
}

} // namespace helmls::tu

#pragma once

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "slicepl/function.hpp"
#include "slicepl/quaternion.hpp"

namespace slicepl::test {

inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(0x5eed5eedULL + salt); }

inline double uniform(std::mt19937_64& g, double a, double b) {
    return std::uniform_real_distribution<double>(a, b)(g);
}

inline Quaternion random_quaternion(std::mt19937_64& g, double a = -10.0, double b = 10.0) {
    return {uniform(g, a, b), uniform(g, a, b), uniform(g, a, b), uniform(g, a, b)};
}

inline UnitImaginary random_axis(std::mt19937_64& g) {
    std::normal_distribution<double> n;
    for (;;) {
        const double x = n(g), y = n(g), z = n(g);
        if (x * x + y * y + z * z > 1e-6) return UnitImaginary::normalized(x, y, z);
    }
}

// Unit J orthogonal to I, uniformly around the great circle.
inline UnitImaginary random_orthogonal(std::mt19937_64& g, const UnitImaginary& I) {
    for (;;) {
        const UnitImaginary v = random_axis(g);
        const double d = dot(v, I);
        const double x = v.x() - d * I.x(), y = v.y() - d * I.y(), z = v.z() - d * I.z();
        if (x * x + y * y + z * z > 1e-4) return UnitImaginary::normalized(x, y, z);
    }
}

inline std::vector<Quaternion> random_coeffs(std::mt19937_64& g, std::size_t degree) {
    std::vector<Quaternion> c(degree + 1);
    for (auto& q : c) q = random_quaternion(g, -1.0, 1.0);
    return c;
}

// Product through the left-multiplication matrix of p, written out from the
// multiplication table independently of operator*.
inline Quaternion matrix_product(const Quaternion& p, const Quaternion& q) {
    const std::array<std::array<double, 4>, 4> L{{{p.w, -p.x, -p.y, -p.z},
                                                  {p.x, p.w, -p.z, p.y},
                                                  {p.y, p.z, p.w, -p.x},
                                                  {p.z, -p.y, p.x, p.w}}};
    const std::array<double, 4> v{q.w, q.x, q.y, q.z};
    std::array<double, 4> o{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) o[r] += L[r][c] * v[c];
    return {o[0], o[1], o[2], o[3]};
}

// sum_n q^n a_n by explicit powers (no Horner).
inline Quaternion series_by_powers(const std::vector<Quaternion>& a, const Quaternion& q) {
    Quaternion power(1.0), acc;
    for (const auto& c : a) {
        acc += matrix_product(power, c);
        power = matrix_product(power, q);
    }
    return acc;
}

// e^q from its Taylor series, summed until the terms vanish.
inline Quaternion exp_by_series(const Quaternion& q) {
    Quaternion term(1.0), acc(1.0);
    for (int n = 1; n < 200; ++n) {
        term = matrix_product(term, q) * (1.0 / n);
        acc += term;
        if (term.abs() < 1e-18 * acc.abs()) break;
    }
    return acc;
}

inline double rel(const Quaternion& a, const Quaternion& b) {
    return (a - b).abs() / std::max(1.0, std::max(a.abs(), b.abs()));
}

}  // namespace slicepl::test

#include "slicepl/sphere_grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace slicepl {

std::vector<UnitImaginary> axis_grid(std::size_t n) {
    std::vector<UnitImaginary> out;
    out.reserve(n);
    const UnitImaginary basis[] = {UnitImaginary::i(), UnitImaginary::j(), UnitImaginary::k()};
    for (std::size_t m = 0; m < n && m < 3; ++m) {
        out.push_back(basis[m]);
    }
    // Plastic number g solves g^3 = g + 1.
    constexpr double g = 1.32471795724474602596;
    constexpr double a1 = 1.0 / g;
    constexpr double a2 = 1.0 / (g * g);
    for (std::size_t m = 3; m < n; ++m) {
        const double k = static_cast<double>(m - 2);
        const double u = std::fmod(0.5 + a1 * k, 1.0);
        const double v = std::fmod(0.5 + a2 * k, 1.0);
        const double z = 1.0 - 2.0 * u;
        const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = 2.0 * std::numbers::pi * v;
        out.push_back(UnitImaginary::normalized(s * std::cos(phi), s * std::sin(phi), z));
    }
    return out;
}

std::vector<double> closed_grid(double a, double b, std::size_t n) {
    if (n == 0) {
        return {};
    }
    if (n == 1) {
        return {0.5 * (a + b)};
    }
    std::vector<double> out(n);
    const double step = (b - a) / static_cast<double>(n - 1);
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = a + step * static_cast<double>(k);
    }
    out.back() = b;
    return out;
}

std::vector<double> open_grid(double a, double b, std::size_t n) {
    std::vector<double> out(n);
    const double step = (b - a) / static_cast<double>(n + 1);
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = a + step * static_cast<double>(k + 1);
    }
    // Exact zero at the center of symmetric odd grids.
    if (n % 2 == 1 && a == -b) {
        out[n / 2] = 0.0;
    }
    return out;
}

std::vector<double> geometric_grid(double a, double b, std::size_t n) {
    if (n == 0) {
        return {};
    }
    if (n == 1) {
        return {b};
    }
    std::vector<double> out(n);
    // Base 2 keeps grids such as 2^0..2^10 exact.
    const double la = std::log2(a);
    const double step = (std::log2(b) - la) / static_cast<double>(n - 1);
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = std::exp2(la + step * static_cast<double>(k));
    }
    out.front() = a;
    out.back() = b;
    return out;
}

}  // namespace slicepl

#include "slicepl/quaternion.hpp"

#include <algorithm>
#include <numbers>

namespace slicepl {

Quaternion inverse(const Quaternion& q) {
    const double n2 = q.norm2();
    if (n2 == 0.0) {
        throw DomainError("inverse: zero has no inverse");
    }
    return q.conj() * (1.0 / n2);
}

double distance(const Quaternion& p, const Quaternion& q) { return (p - q).abs(); }

double relative_error(const Quaternion& p, const Quaternion& q) {
    const double scale = std::max({1.0, p.abs(), q.abs()});
    return distance(p, q) / scale;
}

UnitImaginary::UnitImaginary(double x, double y, double z) : x_(x), y_(y), z_(z) {
    const double n2 = x * x + y * y + z * z;
    if (!(std::abs(n2 - 1.0) <= 1e-12)) {
        throw InputError("unit imaginary: |(x, y, z)|^2 = " + std::to_string(n2) +
                         " is not 1");
    }
}

UnitImaginary UnitImaginary::normalized(double x, double y, double z) {
    const double n = std::hypot(x, std::hypot(y, z));
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw InputError("unit imaginary: cannot normalize a zero or non-finite vector");
    }
    return UnitImaginary(x / n, y / n, z / n, Unchecked{});
}

std::optional<UnitImaginary> UnitImaginary::direction_of(const Quaternion& q) {
    if (q.is_real()) {
        return std::nullopt;
    }
    return normalized(q.x, q.y, q.z);
}

UnitImaginary UnitImaginary::operator-() const { return {-x_, -y_, -z_, Unchecked{}}; }

Quaternion PolarForm::reconstruct() const {
    if (!axis) {
        return {r * std::cos(theta), 0.0, 0.0, 0.0};
    }
    return axis->polar_point(r, theta);
}

double slice_angle(const Quaternion& q) { return std::atan2(q.imag_abs(), q.w); }

PolarForm polar(const Quaternion& q) {
    PolarForm p;
    p.r = q.abs();
    p.axis = UnitImaginary::direction_of(q);
    if (p.axis) {
        p.theta = slice_angle(q);
    } else {
        p.theta = q.w < 0.0 ? std::numbers::pi : 0.0;
    }
    return p;
}

Quaternion qexp(const Quaternion& q) {
    return slice_lift(q, [](std::complex<double> z) { return std::exp(z); });
}

namespace {

bool on_closed_negative_axis(const Quaternion& q) { return q.is_real() && q.w <= 0.0; }
bool on_closed_positive_axis(const Quaternion& q) { return q.is_real() && q.w >= 0.0; }

}  // namespace

Quaternion principal_log(const Quaternion& q) {
    if (on_closed_negative_axis(q)) {
        throw DomainError("principal log: argument lies on the excluded half-line (-inf, 0]");
    }
    return slice_lift(q, [](std::complex<double> z) {
        return std::complex<double>(std::log(std::abs(z)), std::arg(z));
    });
}

Quaternion branch_log(const Quaternion& q) {
    if (on_closed_positive_axis(q)) {
        throw DomainError("branch log: argument lies on the excluded half-line [0, +inf)");
    }
    if (q.is_real()) {
        return {std::log(-q.w), 0.0, 0.0, 0.0};
    }
    return slice_lift(q, [](std::complex<double> z) {
        return std::complex<double>(std::log(std::abs(z)), std::arg(z) - std::numbers::pi);
    });
}

Quaternion qpow(const Quaternion& q, double gamma) {
    if (on_closed_negative_axis(q)) {
        throw DomainError("power: argument lies on the excluded half-line (-inf, 0]");
    }
    return slice_lift(q, [gamma](std::complex<double> z) {
        return std::polar(std::pow(std::abs(z), gamma), gamma * std::arg(z));
    });
}

}  // namespace slicepl

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

namespace slicepl {

// Raised when a point lies outside the natural domain of an operation
// (cut of a logarithm, inverse of zero, ...). Verifiers catch it and turn it
// into a report entry; it never aborts a run.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what, std::string node = {})
        : std::domain_error(what), node_(std::move(node)) {}

    // Name of the expression node that raised, empty for core operations.
    const std::string& node() const noexcept { return node_; }

private:
    std::string node_;
};

// Malformed user input: bad parameters, non-orthogonal axes, parse errors.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_ = 0.0, double y_ = 0.0, double z_ = 0.0)
        : w(w_), x(x_), y(y_), z(z_) {}

    static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
    static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
    static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

    constexpr double real() const { return w; }
    constexpr Quaternion imag() const { return {0.0, x, y, z}; }
    constexpr Quaternion conj() const { return {w, -x, -y, -z}; }

    constexpr double norm2() const { return w * w + x * x + y * y + z * z; }
    double abs() const { return std::hypot(std::hypot(w, x), std::hypot(y, z)); }
    double imag_abs() const { return std::hypot(x, std::hypot(y, z)); }

    constexpr bool is_real() const { return x == 0.0 && y == 0.0 && z == 0.0; }
    bool is_finite() const {
        return std::isfinite(w) && std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
    }

    constexpr std::array<double, 4> components() const { return {w, x, y, z}; }

    constexpr Quaternion& operator+=(const Quaternion& o) {
        w += o.w; x += o.x; y += o.y; z += o.z;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& o) {
        w -= o.w; x -= o.x; y -= o.y; z -= o.z;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) {
        w *= s; x *= s; y *= s; z *= s;
        return *this;
    }

    friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }

// Hamilton product: i^2 = j^2 = k^2 = -1, ij = k, jk = i, ki = j.
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
            p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
            p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
            p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

constexpr Quaternion mul(const Quaternion& p, const Quaternion& q) { return p * q; }

// Real inner product of R^4.
constexpr double dot(const Quaternion& p, const Quaternion& q) {
    return p.w * q.w + p.x * q.x + p.y * q.y + p.z * q.z;
}

// q^{-1} = conj(q) / |q|^2. Throws DomainError for q = 0.
Quaternion inverse(const Quaternion& q);

// Distance |p - q|.
double distance(const Quaternion& p, const Quaternion& q);

// max over components of |p - q| relative to max(1, |p|, |q|).
double relative_error(const Quaternion& p, const Quaternion& q);

// An element of the unit sphere S of purely imaginary quaternions. Every
// instance satisfies x^2 + y^2 + z^2 = 1 to 1e-12.
class UnitImaginary {
public:
    // i
    UnitImaginary() = default;

    // Validating constructor; throws InputError when the norm is off by more
    // than 1e-12.
    UnitImaginary(double x, double y, double z);

    // Normalizes (x, y, z); throws InputError for the zero vector.
    static UnitImaginary normalized(double x, double y, double z);
    // Direction of Im(q); nullopt when q is real.
    static std::optional<UnitImaginary> direction_of(const Quaternion& q);

    static UnitImaginary i() { return {}; }
    static UnitImaginary j() { return UnitImaginary(0.0, 1.0, 0.0); }
    static UnitImaginary k() { return UnitImaginary(0.0, 0.0, 1.0); }

    double x() const { return x_; }
    double y() const { return y_; }
    double z() const { return z_; }

    Quaternion quaternion() const { return {0.0, x_, y_, z_}; }
    UnitImaginary operator-() const;

    // Point a + b I of the slice L_I.
    Quaternion embed(std::complex<double> c) const {
        return {c.real(), c.imag() * x_, c.imag() * y_, c.imag() * z_};
    }
    // e^{I theta} scaled by r.
    Quaternion polar_point(double r, double theta) const {
        return embed(std::polar(r, theta));
    }

    // Components of q along {1, I}; q is assumed to lie in L_I.
    std::complex<double> coordinates(const Quaternion& q) const {
        return {q.w, q.x * x_ + q.y * y_ + q.z * z_};
    }

    friend bool operator==(const UnitImaginary&, const UnitImaginary&) = default;

private:
    struct Unchecked {};
    UnitImaginary(double x, double y, double z, Unchecked) : x_(x), y_(y), z_(z) {}

    double x_ = 1.0;
    double y_ = 0.0;
    double z_ = 0.0;
};

// Real inner product of the imaginary parts.
inline double dot(const UnitImaginary& a, const UnitImaginary& b) {
    return a.x() * b.x() + a.y() * b.y() + a.z() * b.z();
}

// Polar form q = r (cos theta + axis sin theta), theta in [0, pi]. For real q
// the axis is undefined and `axis` is empty; theta is then 0 or pi.
struct PolarForm {
    double r = 0.0;
    std::optional<UnitImaginary> axis;
    double theta = 0.0;

    bool on_real_axis() const { return !axis.has_value(); }
    Quaternion reconstruct() const;
};

PolarForm polar(const Quaternion& q);

// Slice-preserving lift of a holomorphic function h that is real on the real
// axis: writes q = a + I b with b = |Im q| >= 0 and returns Re h(a + ib) +
// I Im h(a + ib). Real q is mapped through the real line.
template <typename Holomorphic>
Quaternion slice_lift(const Quaternion& q, Holomorphic&& h) {
    const double b = q.imag_abs();
    const std::complex<double> v = h(std::complex<double>(q.w, b));
    if (b == 0.0) {
        return {v.real(), v.imag(), 0.0, 0.0};
    }
    const double s = v.imag() / b;
    return {v.real(), q.x * s, q.y * s, q.z * s};
}

// e^q = e^{Re q}(cos|Im q| + I sin|Im q|). Overflow yields non-finite
// components, which callers detect with is_finite().
Quaternion qexp(const Quaternion& q);

// Principal logarithm ln|q| + arccos(Re q/|q|) Im q/|Im q| on H \ (-inf, 0].
Quaternion principal_log(const Quaternion& q);

// Second branch ln|q| + [arccos(Re q/|q|) - pi] Im q/|Im q| on H \ [0, +inf),
// continuously extended to the negative reals (value ln|q| there).
Quaternion branch_log(const Quaternion& q);

// q^gamma = e^{gamma Log q} on H \ (-inf, 0].
Quaternion qpow(const Quaternion& q, double gamma);

// Principal argument in [0, pi] used by both logarithms; atan2 form of
// arccos(Re q/|q|).
double slice_angle(const Quaternion& q);

}  // namespace slicepl

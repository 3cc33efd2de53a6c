#include "slicepl/domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <tuple>

#include "slicepl/function.hpp"
#include "slicepl/sphere_grid.hpp"

namespace slicepl {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kProfileTol = 1e-9;
constexpr std::size_t kConsistencyAxes = 64;
constexpr int kMaxNudges = 64;

// Axis of q and its coordinates in L_axis with nonnegative imaginary part.
// Real q is placed on L_i.
std::pair<UnitImaginary, std::complex<double>> slice_coordinates(const Quaternion& q) {
    if (auto axis = UnitImaginary::direction_of(q)) {
        return {*axis, {q.w, q.imag_abs()}};
    }
    return {UnitImaginary::i(), {q.w, 0.0}};
}

double distance_to_line(std::complex<double> z, const SliceLine& line) {
    return std::abs((std::conj(line.direction) * (z - line.point)).imag());
}

std::complex<double> unit_normal(const SliceLine& line) {
    return line.direction * std::complex<double>(0.0, 1.0);
}

SliceLine normalized_line(SliceLine line) {
    const double n = std::abs(line.direction);
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw InputError("strip: line direction must be a nonzero finite vector");
    }
    line.direction /= n;
    return line;
}

// Moves the parameter away from the set while contains() is still true. The
// parametrized point is on the boundary up to rounding; a few ulps settle it.
template <typename PointAt>
Quaternion nudge_outside(const Domain& d, double param, double outward, PointAt&& point_at) {
    Quaternion q = point_at(param);
    const double target = outward > 0 ? std::numeric_limits<double>::infinity()
                                      : -std::numeric_limits<double>::infinity();
    for (int k = 0; k < kMaxNudges && contains(d, q); ++k) {
        param = std::nextafter(param, target);
        q = point_at(param);
    }
    return q;
}

std::vector<Quaternion> circle_line_intersections(const UnitImaginary& I, double r,
                                                  std::complex<double> p,
                                                  std::complex<double> u) {
    // |p + t u|^2 = r^2 with |u| = 1.
    const double b = (std::conj(u) * p).real();
    const double c = std::norm(p) - r * r;
    const double disc = b * b - c;
    if (disc < 0.0) {
        return {};
    }
    const double s = std::sqrt(disc);
    if (s == 0.0) {
        return {I.embed(p - b * u)};
    }
    return {I.embed(p + (-b - s) * u), I.embed(p + (-b + s) * u)};
}

std::vector<Quaternion> ball_boundary_at(const Domain& d, const Ball& ball, double r,
                                         std::size_t n_theta, std::size_t n_axis) {
    std::vector<Quaternion> out;
    const double cn = ball.center.abs();
    const auto axes = axis_grid(n_axis);
    if (cn == 0.0) {
        if (std::abs(r - ball.radius) > 1e-12 * ball.radius) {
            return out;
        }
        for (const auto& I : axes) {
            for (double theta : closed_grid(0.0, kPi, std::max<std::size_t>(n_theta, 2))) {
                out.push_back(nudge_outside(d, r, +1.0, [&](double s) {
                    return I.polar_point(s, theta);
                }));
            }
        }
        return out;
    }
    // {|q| = r} meets {|q - c| = R} in the 2-sphere alpha c^ + beta c^ u,
    // u over unit imaginaries (left multiplication by the unit c^ is an
    // isometry fixing the splitting 1 / imaginary).
    const double alpha = (r * r + cn * cn - ball.radius * ball.radius) / (2.0 * cn);
    if (std::abs(alpha) > r) {
        return out;
    }
    const double beta = std::sqrt(std::max(0.0, r * r - alpha * alpha));
    const Quaternion chat = ball.center * (1.0 / cn);
    for (const auto& I : axes) {
        const Quaternion dir = chat * I.quaternion();
        Quaternion q = chat * alpha + dir * beta;
        // Push radially away from the center onto the closed complement.
        for (int k = 0; k < kMaxNudges && contains(d, q); ++k) {
            q = ball.center + (q - ball.center) * (1.0 + 4.0 * std::numeric_limits<double>::epsilon());
        }
        out.push_back(q);
    }
    return out;
}

}  // namespace

Domain Domain::ball(const Quaternion& center, double radius) {
    if (!(radius > 0.0) || !std::isfinite(radius) || !center.is_finite()) {
        throw InputError("ball: radius must be positive and finite");
    }
    return Domain(Ball{center, radius});
}

Domain Domain::cone(double phi) {
    if (!(phi > 0.0 && phi < kTwoPi)) {
        throw InputError("cone: opening must satisfy 0 < phi < 2 pi");
    }
    return Domain(CircularCone{phi});
}

Domain Domain::angular(ScalarProfile zeta, ScalarProfile phi, std::string label) {
    if (!zeta || !phi) {
        throw InputError("angular domain: both profiles are required");
    }
    AngularDomain a{std::move(zeta), std::move(phi), std::move(label)};
    check_antipodal_consistency(a, kConsistencyAxes);
    return Domain(std::move(a));
}

Domain Domain::strip(LineProfile line, ScalarProfile gamma, std::string label) {
    if (!line || !gamma) {
        throw InputError("strip domain: line and width profiles are required");
    }
    StripDomain s{std::move(line), std::move(gamma), std::move(label)};
    check_antipodal_consistency(s, kConsistencyAxes);
    return Domain(std::move(s));
}

Domain Domain::whole_space() { return Domain(WholeSpace{}); }

std::string Domain::describe() const {
    std::ostringstream os;
    os.precision(17);
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Ball>) {
                os << "ball(center=[" << v.center.w << ',' << v.center.x << ',' << v.center.y
                   << ',' << v.center.z << "], radius=" << v.radius << ')';
            } else if constexpr (std::is_same_v<T, CircularCone>) {
                os << "cone(phi=" << v.phi << ')';
            } else if constexpr (std::is_same_v<T, AngularDomain>) {
                os << "angular(" << v.label << ')';
            } else if constexpr (std::is_same_v<T, StripDomain>) {
                os << "strip(" << v.label << ')';
            } else {
                os << "space";
            }
        },
        v_);
    return os.str();
}

void check_antipodal_consistency(const AngularDomain& d, std::size_t n_axis) {
    for (const auto& I : axis_grid(n_axis)) {
        const double phi = d.phi(I);
        const double phi_neg = d.phi(-I);
        if (!(phi > 0.0 && phi < kTwoPi)) {
            throw InputError("angular domain: opening profile must lie in (0, 2 pi)");
        }
        if (std::abs(phi - phi_neg) > kProfileTol * std::max(1.0, phi)) {
            throw InputError("angular domain: opening profile violates phi_{-I} = phi_I");
        }
        const double z = d.zeta(I);
        const double z_neg = d.zeta(-I);
        if (!std::isfinite(z) || std::abs(std::remainder(z + z_neg, kTwoPi)) > kProfileTol) {
            throw InputError(
                "angular domain: bisector profile violates zeta_{-I} = -zeta_I mod 2 pi "
                "(slices of I and -I must coincide)");
        }
    }
}

void check_antipodal_consistency(const StripDomain& d, std::size_t n_axis) {
    for (const auto& I : axis_grid(n_axis)) {
        const double g = d.gamma(I);
        const double g_neg = d.gamma(-I);
        if (!(g > 0.0) || !std::isfinite(g)) {
            throw InputError("strip domain: width profile must be positive");
        }
        if (std::abs(g - g_neg) > kProfileTol * std::max(1.0, g)) {
            throw InputError("strip domain: width profile violates gamma_{-I} = gamma_I");
        }
        const SliceLine a = normalized_line(d.line(I));
        const SliceLine b = normalized_line(d.line(-I));
        // Coordinates in L_{-I} are conjugate to those in L_I.
        const std::complex<double> bp = std::conj(b.point);
        const std::complex<double> bu = std::conj(b.direction);
        const bool parallel = std::abs((std::conj(a.direction) * bu).imag()) <= kProfileTol;
        const bool through = distance_to_line(bp, a) <= kProfileTol * std::max(1.0, std::abs(bp));
        if (!parallel || !through) {
            throw InputError("strip domain: line profile violates line_{-I} = line_I");
        }
    }
}

bool contains(const Domain& d, const Quaternion& q) {
    return std::visit(
        [&](const auto& v) -> bool {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Ball>) {
                return distance(q, v.center) < v.radius;
            } else if constexpr (std::is_same_v<T, CircularCone>) {
                return q.norm2() > 0.0 && slice_angle(q) < 0.5 * v.phi;
            } else if constexpr (std::is_same_v<T, AngularDomain>) {
                if (q.norm2() == 0.0) {
                    return false;
                }
                const auto [I, z] = slice_coordinates(q);
                const double dev = std::remainder(std::arg(z) - v.zeta(I), kTwoPi);
                return std::abs(dev) < 0.5 * v.phi(I);
            } else if constexpr (std::is_same_v<T, StripDomain>) {
                const auto [I, z] = slice_coordinates(q);
                return distance_to_line(z, normalized_line(v.line(I))) < 0.5 * v.gamma(I);
            } else {
                return true;
            }
        },
        d.variant());
}

std::vector<Quaternion> boundary_sample(const Domain& d, double r, std::size_t n_theta,
                                        std::size_t n_axis) {
    if (!(r > 0.0)) {
        throw InputError("boundary_sample: radius must be positive");
    }
    std::vector<Quaternion> out;
    const auto axes = axis_grid(n_axis);
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Ball>) {
                out = ball_boundary_at(d, v, r, n_theta, n_axis);
            } else if constexpr (std::is_same_v<T, CircularCone>) {
                for (const auto& I : axes) {
                    for (double side : {1.0, -1.0}) {
                        out.push_back(nudge_outside(d, side * 0.5 * v.phi, side, [&](double t) {
                            return I.polar_point(r, t);
                        }));
                    }
                }
            } else if constexpr (std::is_same_v<T, AngularDomain>) {
                for (const auto& I : axes) {
                    const double zeta = v.zeta(I);
                    const double half = 0.5 * v.phi(I);
                    for (double side : {1.0, -1.0}) {
                        out.push_back(nudge_outside(d, side * half, side, [&](double t) {
                            return I.polar_point(r, zeta + t);
                        }));
                    }
                }
            } else if constexpr (std::is_same_v<T, StripDomain>) {
                for (const auto& I : axes) {
                    const SliceLine line = normalized_line(v.line(I));
                    const auto n = unit_normal(line);
                    const double half = 0.5 * v.gamma(I);
                    for (double side : {1.0, -1.0}) {
                        const auto edge = line.point + side * half * n;
                        for (const auto& q : circle_line_intersections(I, r, edge, line.direction)) {
                            // Re-anchor along the normal so the point sits on
                            // the closed complement.
                            const auto z = I.coordinates(q);
                            const double along = (std::conj(line.direction) * (z - line.point)).real();
                            out.push_back(nudge_outside(d, half, 1.0, [&](double s) {
                                return I.embed(line.point + along * line.direction + side * s * n);
                            }));
                        }
                    }
                }
            }
        },
        d.variant());
    return out;
}

SupremumEstimate opening(const Domain& d, std::size_t n_axis) {
    if (const auto* c = d.get<CircularCone>()) {
        return {c->phi, c->phi, 1, 1};
    }
    const auto* a = d.get<AngularDomain>();
    if (!a) {
        throw InputError("opening: defined for cones and angular domains only");
    }
    SupremumEstimate s;
    s.n_coarse = std::max<std::size_t>(n_axis, 1);
    s.n_fine = 4 * s.n_coarse;
    const auto axes = axis_grid(s.n_fine);
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t m = 0; m < axes.size(); ++m) {
        best = std::max(best, a->phi(axes[m]));
        if (m + 1 == s.n_coarse) {
            s.coarse = best;
        }
    }
    s.value = best;
    return s;
}

SupremumEstimate width(const Domain& d, std::size_t n_axis) {
    const auto* st = d.get<StripDomain>();
    if (!st) {
        throw InputError("width: defined for strip domains only");
    }
    SupremumEstimate s;
    s.n_coarse = std::max<std::size_t>(n_axis, 1);
    s.n_fine = 4 * s.n_coarse;
    const auto axes = axis_grid(s.n_fine);
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t m = 0; m < axes.size(); ++m) {
        best = std::max(best, st->gamma(axes[m]));
        if (m + 1 == s.n_coarse) {
            s.coarse = best;
        }
    }
    s.value = best;
    return s;
}

SliceDomainCheck is_slice_domain(const Domain& d, std::size_t resolution, std::size_t n_axis) {
    SliceDomainCheck out;
    std::vector<double> candidates{0.0};
    for (int k = -6; k <= 10; ++k) {
        candidates.push_back(std::ldexp(1.0, k));
        candidates.push_back(-std::ldexp(1.0, k));
    }
    double box = 4.0;
    if (const auto* b = d.get<Ball>()) {
        candidates.push_back(b->center.w);
        box = b->center.abs() + b->radius;
    }
    if (const auto* s = d.get<StripDomain>()) {
        const SliceLine line = normalized_line(s->line(UnitImaginary::i()));
        candidates.push_back(line.point.real());
        box = std::max(box, 2.0 * (std::abs(line.point) + s->gamma(UnitImaginary::i())));
    }
    for (double t : candidates) {
        if (contains(d, Quaternion(t))) {
            out.real_point = t;
            break;
        }
    }

    const std::size_t n = std::max<std::size_t>(resolution, 3);
    const double h = 2.0 * box / static_cast<double>(n);
    std::vector<int> label(n * n);
    std::vector<std::size_t> stack;
    for (const auto& I : axis_grid(n_axis)) {
        ++out.slices_checked;
        for (std::size_t iy = 0; iy < n; ++iy) {
            for (std::size_t ix = 0; ix < n; ++ix) {
                const std::complex<double> z(-box + (static_cast<double>(ix) + 0.5) * h,
                                             -box + (static_cast<double>(iy) + 0.5) * h);
                label[iy * n + ix] = contains(d, I.embed(z)) ? -1 : 0;
            }
        }
        int components = 0;
        for (std::size_t start = 0; start < label.size(); ++start) {
            if (label[start] != -1) {
                continue;
            }
            ++components;
            stack.assign(1, start);
            label[start] = components;
            while (!stack.empty()) {
                const std::size_t c = stack.back();
                stack.pop_back();
                const auto cx = static_cast<long>(c % n);
                const auto cy = static_cast<long>(c / n);
                for (long dy = -1; dy <= 1; ++dy) {
                    for (long dx = -1; dx <= 1; ++dx) {
                        const long x = cx + dx, y = cy + dy;
                        if (x < 0 || y < 0 || x >= static_cast<long>(n) || y >= static_cast<long>(n)) {
                            continue;
                        }
                        const std::size_t idx = static_cast<std::size_t>(y) * n + static_cast<std::size_t>(x);
                        if (label[idx] == -1) {
                            label[idx] = components;
                            stack.push_back(idx);
                        }
                    }
                }
            }
        }
        if (components != 1) {
            ++out.disconnected_slices;
        }
    }
    out.verdict = out.real_point.has_value() && out.disconnected_slices == 0;
    return out;
}

HalflineWitness real_halfline_witness(const ScalarProfile& zeta, const ScalarProfile& phi,
                                      std::size_t n_axis, double tol) {
    check_antipodal_consistency(AngularDomain{zeta, phi, "witness"}, std::min<std::size_t>(n_axis, 512));

    // Signed distance of zeta_I to pi Z; odd under I -> -I for consistent
    // profiles, so it changes sign along any path from J to -J.
    auto signed_gap = [&](const UnitImaginary& I) { return std::remainder(zeta(I), kPi); };

    HalflineWitness w;
    w.distance = std::numeric_limits<double>::infinity();
    for (const auto& I : axis_grid(std::max<std::size_t>(n_axis, 1))) {
        const double g = std::abs(signed_gap(I));
        if (g < w.distance) {
            w.distance = g;
            w.best = I;
        }
    }
    if (w.distance > tol) {
        const UnitImaginary J = w.best;
        const UnitImaginary K = orthogonal_unit(J);
        auto path = [&](double t) {
            const double c = std::cos(kPi * t), s = std::sin(kPi * t);
            return UnitImaginary::normalized(c * J.x() + s * K.x(), c * J.y() + s * K.y(),
                                             c * J.z() + s * K.z());
        };
        double lo = 0.0, hi = 1.0;
        const double g_lo = signed_gap(path(lo));
        for (int it = 0; it < 80; ++it) {
            const double mid = 0.5 * (lo + hi);
            if ((signed_gap(path(mid)) > 0.0) == (g_lo > 0.0)) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        for (double t : {lo, hi}) {
            const UnitImaginary I = path(t);
            const double g = std::abs(signed_gap(I));
            if (g < w.distance) {
                w.distance = g;
                w.best = I;
            }
        }
    }
    if (w.distance <= tol) {
        w.axis = w.best;
    }
    return w;
}

std::vector<SamplePoint> shell_points(const Domain& d, double r, std::size_t n_theta,
                                      std::size_t n_axis) {
    std::vector<SamplePoint> out;
    const auto axes = axis_grid(n_axis);
    auto push = [&](const Quaternion& q, double param, std::size_t axis, std::size_t index) {
        out.push_back({q, r, param, 0, axis, index});
    };
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, CircularCone>) {
                const auto thetas = closed_grid(-0.5 * v.phi, 0.5 * v.phi, n_theta);
                push(Quaternion(r), 0.0, 0, n_theta);
                for (std::size_t a = 0; a < axes.size(); ++a) {
                    for (std::size_t k = 0; k < thetas.size(); ++k) {
                        push(axes[a].polar_point(r, thetas[k]), thetas[k], a, k);
                    }
                }
            } else if constexpr (std::is_same_v<T, AngularDomain>) {
                for (double t : {r, -r}) {
                    if (contains(d, Quaternion(t))) {
                        push(Quaternion(t), 0.0, 0, n_theta + (t < 0 ? 1 : 0));
                    }
                }
                for (std::size_t a = 0; a < axes.size(); ++a) {
                    const double zeta = v.zeta(axes[a]);
                    const double half = 0.5 * v.phi(axes[a]);
                    const auto thetas = closed_grid(-half, half, n_theta);
                    for (std::size_t k = 0; k < thetas.size(); ++k) {
                        push(axes[a].polar_point(r, zeta + thetas[k]), thetas[k], a, k);
                    }
                }
            } else if constexpr (std::is_same_v<T, StripDomain>) {
                const auto thetas = closed_grid(-kPi, kPi, n_theta);
                for (std::size_t a = 0; a < axes.size(); ++a) {
                    const UnitImaginary& I = axes[a];
                    const SliceLine line = normalized_line(v.line(I));
                    const double half = 0.5 * v.gamma(I);
                    for (std::size_t k = 0; k < thetas.size(); ++k) {
                        const auto z = std::polar(r, thetas[k]);
                        if (distance_to_line(z, line) <= half) {
                            push(I.embed(z), thetas[k], a, k);
                        }
                    }
                    std::size_t extra = thetas.size();
                    const auto n = unit_normal(line);
                    for (double side : {1.0, -1.0}) {
                        for (const auto& q :
                             circle_line_intersections(I, r, line.point + side * half * n, line.direction)) {
                            push(q, std::arg(I.coordinates(q)), a, extra++);
                        }
                    }
                }
            } else if constexpr (std::is_same_v<T, Ball>) {
                const auto thetas = closed_grid(0.0, kPi, n_theta);
                for (std::size_t a = 0; a < axes.size(); ++a) {
                    for (std::size_t k = 0; k < thetas.size(); ++k) {
                        const Quaternion q = axes[a].polar_point(r, thetas[k]);
                        if (distance(q, v.center) <= v.radius) {
                            push(q, thetas[k], a, k);
                        }
                    }
                }
                const auto rim = ball_boundary_at(d, v, r, n_theta, n_axis);
                for (std::size_t m = 0; m < rim.size(); ++m) {
                    push(rim[m], slice_angle(rim[m]), m % std::max<std::size_t>(axes.size(), 1),
                         thetas.size() + m);
                }
            } else {
                const auto thetas = closed_grid(0.0, kPi, n_theta);
                for (std::size_t a = 0; a < axes.size(); ++a) {
                    for (std::size_t k = 0; k < thetas.size(); ++k) {
                        push(axes[a].polar_point(r, thetas[k]), thetas[k], a, k);
                    }
                }
            }
        },
        d.variant());
    return out;
}

namespace {

// t-values of strip samples: shell 0 also carries t = 0.
struct StripStation {
    double t;
    std::size_t shell;
    std::size_t slot;
};

std::vector<StripStation> strip_stations(std::span<const double> radii) {
    std::vector<StripStation> out;
    for (std::size_t k = 0; k < radii.size(); ++k) {
        if (k == 0) {
            out.push_back({0.0, 0, 0});
        }
        out.push_back({-radii[k], k, 1});
        out.push_back({radii[k], k, 2});
    }
    return out;
}

}  // namespace

std::vector<SamplePoint> interior_points(const Domain& d, std::span<const double> radii,
                                         std::size_t n_theta, std::size_t n_axis) {
    std::vector<SamplePoint> out;
    const auto axes = axis_grid(n_axis);
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, CircularCone>) {
                const auto thetas = open_grid(-0.5 * v.phi, 0.5 * v.phi, n_theta);
                for (std::size_t s = 0; s < radii.size(); ++s) {
                    for (std::size_t a = 0; a < axes.size(); ++a) {
                        for (std::size_t k = 0; k < thetas.size(); ++k) {
                            out.push_back({axes[a].polar_point(radii[s], thetas[k]), radii[s],
                                           thetas[k], s, a, k});
                        }
                    }
                }
            } else if constexpr (std::is_same_v<T, AngularDomain>) {
                std::vector<double> zeta(axes.size()), half(axes.size());
                for (std::size_t a = 0; a < axes.size(); ++a) {
                    zeta[a] = v.zeta(axes[a]);
                    half[a] = 0.5 * v.phi(axes[a]);
                }
                for (std::size_t s = 0; s < radii.size(); ++s) {
                    for (std::size_t a = 0; a < axes.size(); ++a) {
                        const auto thetas = open_grid(-half[a], half[a], n_theta);
                        for (std::size_t k = 0; k < thetas.size(); ++k) {
                            out.push_back({axes[a].polar_point(radii[s], zeta[a] + thetas[k]),
                                           radii[s], thetas[k], s, a, k});
                        }
                    }
                }
            } else if constexpr (std::is_same_v<T, StripDomain>) {
                const auto stations = strip_stations(radii);
                for (std::size_t a = 0; a < axes.size(); ++a) {
                    const UnitImaginary& I = axes[a];
                    const SliceLine line = normalized_line(v.line(I));
                    const auto n = unit_normal(line);
                    const double half = 0.5 * v.gamma(I);
                    const auto offsets = open_grid(-half, half, n_theta);
                    for (const auto& st : stations) {
                        for (std::size_t k = 0; k < offsets.size(); ++k) {
                            const auto z = line.point + st.t * line.direction + offsets[k] * n;
                            out.push_back({I.embed(z), std::abs(st.t), offsets[k], st.shell, a,
                                           st.slot * offsets.size() + k});
                        }
                    }
                }
            } else if constexpr (std::is_same_v<T, Ball>) {
                const auto thetas = closed_grid(0.0, kPi, n_theta);
                for (std::size_t s = 0; s < radii.size(); ++s) {
                    if (!(radii[s] < v.radius)) {
                        continue;
                    }
                    for (std::size_t a = 0; a < axes.size(); ++a) {
                        for (std::size_t k = 0; k < thetas.size(); ++k) {
                            out.push_back({v.center + axes[a].polar_point(radii[s], thetas[k]),
                                           radii[s], thetas[k], s, a, k});
                        }
                    }
                }
            } else {
                const auto thetas = closed_grid(0.0, kPi, n_theta);
                for (std::size_t s = 0; s < radii.size(); ++s) {
                    for (std::size_t a = 0; a < axes.size(); ++a) {
                        for (std::size_t k = 0; k < thetas.size(); ++k) {
                            out.push_back({axes[a].polar_point(radii[s], thetas[k]), radii[s],
                                           thetas[k], s, a, k});
                        }
                    }
                }
            }
        },
        d.variant());
    // Shell-major order for reproducible reductions.
    std::stable_sort(out.begin(), out.end(), [](const SamplePoint& x, const SamplePoint& y) {
        return std::tie(x.shell, x.axis, x.index) < std::tie(y.shell, y.axis, y.index);
    });
    return out;
}

std::vector<SamplePoint> boundary_points(const Domain& d, std::span<const double> radii,
                                         std::size_t n_axis, double inward_offset) {
    std::vector<SamplePoint> out;
    const auto axes = axis_grid(n_axis);
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, CircularCone>) {
                const double edge = 0.5 * v.phi - inward_offset;
                for (std::size_t s = 0; s < radii.size(); ++s) {
                    for (std::size_t a = 0; a < axes.size(); ++a) {
                        out.push_back({axes[a].polar_point(radii[s], edge), radii[s], edge, s, a, 0});
                        out.push_back({axes[a].polar_point(radii[s], -edge), radii[s], -edge, s, a, 1});
                    }
                }
            } else if constexpr (std::is_same_v<T, AngularDomain>) {
                for (std::size_t a = 0; a < axes.size(); ++a) {
                    const double zeta = v.zeta(axes[a]);
                    const double edge = 0.5 * v.phi(axes[a]) - inward_offset;
                    for (std::size_t s = 0; s < radii.size(); ++s) {
                        out.push_back({axes[a].polar_point(radii[s], zeta + edge), radii[s], edge, s, a, 0});
                        out.push_back({axes[a].polar_point(radii[s], zeta - edge), radii[s], -edge, s, a, 1});
                    }
                }
            } else if constexpr (std::is_same_v<T, StripDomain>) {
                const auto stations = strip_stations(radii);
                for (std::size_t a = 0; a < axes.size(); ++a) {
                    const UnitImaginary& I = axes[a];
                    const SliceLine line = normalized_line(v.line(I));
                    const auto n = unit_normal(line);
                    const double half = 0.5 * v.gamma(I);
                    for (const auto& st : stations) {
                        const double edge = half - inward_offset * std::max(1.0, std::abs(st.t));
                        for (std::size_t side = 0; side < 2; ++side) {
                            const double s = side == 0 ? edge : -edge;
                            const auto z = line.point + st.t * line.direction + s * n;
                            out.push_back({I.embed(z), std::abs(st.t), s, st.shell, a, 2 * st.slot + side});
                        }
                    }
                }
            } else if constexpr (std::is_same_v<T, Ball>) {
                const auto thetas = closed_grid(0.0, kPi, std::max<std::size_t>(n_axis, 2));
                const double rho = v.radius * (1.0 - inward_offset);
                for (std::size_t a = 0; a < axes.size(); ++a) {
                    for (std::size_t k = 0; k < thetas.size(); ++k) {
                        out.push_back({v.center + axes[a].polar_point(rho, thetas[k]), rho, thetas[k], 0, a, k});
                    }
                }
            }
        },
        d.variant());
    std::stable_sort(out.begin(), out.end(), [](const SamplePoint& x, const SamplePoint& y) {
        return std::tie(x.shell, x.axis, x.index) < std::tie(y.shell, y.axis, y.index);
    });
    return out;
}

}  // namespace slicepl

#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "slicepl/quaternion.hpp"

namespace slicepl {

// Real-valued profile I -> value on the sphere S (opening, bisector, width).
using ScalarProfile = std::function<double(const UnitImaginary&)>;

// A line of L_I in slice coordinates (basis {1, I}); direction has unit length.
struct SliceLine {
    std::complex<double> point;
    std::complex<double> direction{1.0, 0.0};
};
using LineProfile = std::function<SliceLine(const UnitImaginary&)>;

struct Ball {
    Quaternion center;
    double radius = 1.0;
};

// C(phi) = { r e^{I theta} : r > 0, |theta| < phi/2, I in S }.
struct CircularCone {
    double phi = 0.0;
};

// Omega_I = { r e^{I(zeta_I + theta)} : r > 0, |theta| < phi_I/2 }.
struct AngularDomain {
    ScalarProfile zeta;
    ScalarProfile phi;
    std::string label;
};

// Omega_I = { z in L_I : dist(z, line_I) < gamma_I/2 }.
struct StripDomain {
    LineProfile line;
    ScalarProfile gamma;
    std::string label;
};

// All of H; used for growth of entire functions.
struct WholeSpace {};

class Domain {
public:
    using Variant = std::variant<Ball, CircularCone, AngularDomain, StripDomain, WholeSpace>;

    static Domain ball(const Quaternion& center, double radius);
    // 0 < phi < 2 pi.
    static Domain cone(double phi);
    // Profiles are checked for 0 < phi_I < 2 pi and for the antipodal
    // consistency Omega_I = Omega_{-I} (phi_{-I} = phi_I,
    // zeta_{-I} = -zeta_I mod 2 pi) on a sphere grid.
    static Domain angular(ScalarProfile zeta, ScalarProfile phi, std::string label = "custom");
    // gamma_I > 0 and line_{-I} equal to the reflection of line_I.
    static Domain strip(LineProfile line, ScalarProfile gamma, std::string label = "custom");
    static Domain whole_space();

    const Variant& variant() const { return v_; }
    template <typename T>
    const T* get() const { return std::get_if<T>(&v_); }

    bool bounded() const { return std::holds_alternative<Ball>(v_); }
    std::string describe() const;

private:
    explicit Domain(Variant v) : v_(std::move(v)) {}
    Variant v_;
};

// Strict membership in the open set. Real points of angular and strip domains
// are tested on the slice L_i; valid domains agree on every slice there.
bool contains(const Domain& d, const Quaternion& q);

// Parametrized boundary points at modulus r: r e^{I(zeta_I +- phi_I/2)} for
// cones and angular domains over n_axis directions, the intersections of
// |q| = r with the two edges of each slice strip, and the intersection of the
// boundary sphere of a ball with |q| = r. Points are nudged by at most a few
// ulps onto the closed complement so that contains() is false for each.
std::vector<Quaternion> boundary_sample(const Domain& d, double r, std::size_t n_theta,
                                        std::size_t n_axis);

// Grid estimate of a supremum over the sphere at two nested densities.
struct SupremumEstimate {
    double value = 0.0;   // fine grid (includes the coarse one)
    double coarse = 0.0;
    std::size_t n_coarse = 0;
    std::size_t n_fine = 0;
};

// sup_I phi_I for angular domains (exact phi for cones); fine grid has 4x the
// directions of the coarse one.
SupremumEstimate opening(const Domain& d, std::size_t n_axis = 512);
// sup_I gamma_I for strip domains.
SupremumEstimate width(const Domain& d, std::size_t n_axis = 512);

struct SliceDomainCheck {
    bool verdict = false;
    std::optional<double> real_point;
    std::size_t slices_checked = 0;
    std::size_t disconnected_slices = 0;
    // Always "grid-certified": flood fill at finite resolution.
    std::string certification = "grid-certified";
};

// (a) some real point belongs to d; (b) on n_axis slices the member cells of
// a resolution x resolution grid form a single 8-connected component.
SliceDomainCheck is_slice_domain(const Domain& d, std::size_t resolution = 65,
                                 std::size_t n_axis = 16);

struct HalflineWitness {
    std::optional<UnitImaginary> axis;  // set when distance <= tol
    UnitImaginary best;
    double distance = 0.0;  // dist(zeta_best, pi Z)
};

// Searches for J with zeta_J in {0, pi} mod 2 pi, i.e. a slice whose angle
// contains a real half-line. Grid search followed by bisection along the great
// semicircle from the best grid point to its antipode. Throws InputError when
// the profiles violate antipodal consistency on the grid.
HalflineWitness real_halfline_witness(const ScalarProfile& zeta, const ScalarProfile& phi,
                                      std::size_t n_axis = 512, double tol = 1e-9);

// Throws InputError when Omega_I != Omega_{-I} on the grid.
void check_antipodal_consistency(const AngularDomain& d, std::size_t n_axis);
void check_antipodal_consistency(const StripDomain& d, std::size_t n_axis);

// Sample point bookkeeping shared by growth and the verifiers. Indices give
// the deterministic (shell, axis, param) order used for tie-breaking.
struct SamplePoint {
    Quaternion q;
    double r = 0.0;       // shell radius (|t| for strips, distance to center for balls)
    double param = 0.0;   // angle from the bisector, or signed offset across a strip
    std::size_t shell = 0;
    std::size_t axis = 0;
    std::size_t index = 0;
};

// Samples of closure(d) on the sphere |q| = r, including boundary rays and the
// positive real point when it belongs to the closure. Nested under
// (n_theta, n_axis) -> (2 n_theta - 1, m >= n_axis).
std::vector<SamplePoint> shell_points(const Domain& d, double r, std::size_t n_theta,
                                      std::size_t n_axis);

// Interior samples: for cones and angular domains q = r e^{I(zeta_I + theta)}
// with theta strictly inside the opening; for strips q = p + t u + s n with
// t in {0, +-radii}, s strictly inside the width; for balls c + s e^{I theta}
// with s = radii (< radius); for the whole space r e^{I theta}, theta in
// [0, pi].
std::vector<SamplePoint> interior_points(const Domain& d, std::span<const double> radii,
                                         std::size_t n_theta, std::size_t n_axis);

// Boundary samples on the same shells, moved inward by `inward_offset`
// (radians of angle, or offset * max(1, |t|) across strips); offset 0 gives
// the parametrized boundary itself.
std::vector<SamplePoint> boundary_points(const Domain& d, std::span<const double> radii,
                                         std::size_t n_axis, double inward_offset);

}  // namespace slicepl

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "slicepl/domain.hpp"
#include "slicepl/function.hpp"

namespace slicepl {

struct SamplerConfig {
    std::size_t n_theta = 101;
    std::size_t n_axis = 64;
    // Also evaluate the refined grid (2 n_theta - 1, 2 n_axis) and report the
    // increase of the maximum.
    bool refine = true;
    unsigned workers = 0;
};

struct MaxModulus {
    double value = 0.0;          // grid maximum of |f|
    double log_value = 0.0;      // its logarithm, computed without overflow
    Quaternion witness;
    double refined = 0.0;        // maximum on the refined grid (>= value)
    double delta = 0.0;          // refined - value
    std::size_t samples = 0;
    std::size_t skipped = 0;     // points outside the natural domain of f
};

// Maximum of |f| over the closure of d on |q| = r (theta grid x axis grid,
// boundary rays included). A lower bound of the true maximum. Ties keep the
// first point in (axis, theta) order. Throws InputError when no sample of the
// intersection lies in the domain of f.
MaxModulus max_modulus(const Function& f, const Domain& d, double r, const SamplerConfig& cfg = {});

struct RadiusGrid {
    std::vector<double> radii;
    double requested_max = 0.0;
    bool clipped = false;  // |f| overflowed beyond radii.back()
};

// n geometric radii from r_min to r_max; when M_f overflows at r_max the top
// is lowered by bisection (in ln r) to the largest finite radius found, and
// the grid is regenerated with the same count.
RadiusGrid growth_radius_grid(const Function& f, const Domain& d, double r_min, double r_max,
                              std::size_t n, const SamplerConfig& cfg = {});

struct GrowthConfig {
    double r_min = 8.0;
    // 2^200: at smaller radii the double-log slope of a polynomial is still
    // biased upward by about 1/ln r.
    double r_max = 0x1p200;
    std::size_t n_r = 16;
    SamplerConfig sampler{101, 64, true, 0};
};

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0;  // root mean square
    double slope_stderr = 0.0;
};

struct GrowthEstimate {
    double order_est = 0.0;
    std::optional<double> type_est;
    std::optional<double> rho;          // order input for the type estimate
    std::vector<double> r_grid;
    std::vector<double> m_values;
    std::vector<double> log_m;          // ln M_f, finite even where M_f is large
    std::vector<double> statistic;      // lnp(lnp M)/ln r, or lnp M / r^rho
    std::vector<std::size_t> envelope_points;
    LineFit raw_fit;
    LineFit envelope_fit;
    double trend = 0.0;                 // type: change of the statistic over the envelope
    double max_refinement_delta = 0.0;
    bool degenerate = false;            // every M_f <= 1
    bool clipped = false;
    double requested_r_max = 0.0;
    bool non_canonical = false;         // strips have no defined order/type
};

// ln+ x = max(ln x, 0), with ln+ 0 = 0.
double lnp(double x);

// Order: least-squares slope of lnp lnp M_f against ln r, then refit on the
// points on or above the first line (upper envelope). order_est is the
// envelope slope clamped at 0. Requires >= 8 strictly increasing radii.
GrowthEstimate estimate_order(const Function& f, const Domain& d, std::span<const double> r_grid,
                              const SamplerConfig& cfg = {});
GrowthEstimate estimate_order(const Function& f, const Domain& d, const GrowthConfig& cfg = {});

// Type: maximum of lnp M_f / r^rho over the top quarter of the radii (at
// least two), with the trend over those radii. rho > 0.
GrowthEstimate estimate_type(const Function& f, const Domain& d, double rho,
                             std::span<const double> r_grid, const SamplerConfig& cfg = {});
GrowthEstimate estimate_type(const Function& f, const Domain& d, double rho,
                             const GrowthConfig& cfg = {});

// CSV with columns r,M_f,<statistic>,envelope_flag; the statistic column is
// lnp_lnp_M_over_ln_r for order sweeps and lnp_M_over_r_rho for type sweeps.
std::string growth_csv(const GrowthEstimate& g);
std::string format_growth(const GrowthEstimate& g);

}  // namespace slicepl

#include "slicepl/growth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "slicepl/format.hpp"
#include "slicepl/parallel.hpp"
#include "slicepl/sphere_grid.hpp"

namespace slicepl {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct GridMax {
    double log_value = -std::numeric_limits<double>::infinity();
    Quaternion witness;
    std::size_t samples = 0;
    std::size_t skipped = 0;
};

GridMax grid_max(const Function& f, const std::vector<SamplePoint>& pts, unsigned workers) {
    std::vector<double> lm(pts.size());
    parallel_for(pts.size(), workers, [&](std::size_t i) {
        try {
            lm[i] = log_modulus(f, pts[i].q);
        } catch (const DomainError&) {
            lm[i] = kNaN;
        }
    });
    GridMax out;
    bool found = false;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (std::isnan(lm[i])) {
            ++out.skipped;
            continue;
        }
        ++out.samples;
        if (!found || lm[i] > out.log_value) {
            out.log_value = lm[i];
            out.witness = pts[i].q;
            found = true;
        }
    }
    return out;
}

void check_grid(std::span<const double> r) {
    if (r.size() < 8) {
        throw InputError("growth: need at least 8 radii");
    }
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (!(r[i] > 0.0) || !std::isfinite(r[i]) || (i > 0 && !(r[i] > r[i - 1]))) {
            throw InputError("growth: radii must be positive, finite and strictly increasing");
        }
    }
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y,
                 const std::vector<std::size_t>& idx) {
    LineFit fit;
    const auto n = static_cast<double>(idx.size());
    double mx = 0.0, my = 0.0;
    for (auto i : idx) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (auto i : idx) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    fit.slope = sxx > 0.0 ? sxy / sxx : 0.0;
    fit.intercept = my - fit.slope * mx;
    double ssr = 0.0;
    for (auto i : idx) {
        const double e = y[i] - (fit.intercept + fit.slope * x[i]);
        ssr += e * e;
    }
    fit.residual = std::sqrt(ssr / n);
    fit.slope_stderr = (idx.size() > 2 && sxx > 0.0) ? std::sqrt(ssr / (n - 2.0) / sxx) : 0.0;
    return fit;
}

void sweep(const Function& f, const Domain& d, std::span<const double> r_grid,
           const SamplerConfig& cfg, GrowthEstimate& g) {
    check_grid(r_grid);
    g.r_grid.assign(r_grid.begin(), r_grid.end());
    g.non_canonical = d.get<StripDomain>() != nullptr;
    for (double r : r_grid) {
        const MaxModulus m = max_modulus(f, d, r, cfg);
        g.m_values.push_back(m.value);
        g.log_m.push_back(m.log_value);
        if (std::isfinite(m.delta)) {
            g.max_refinement_delta = std::max(g.max_refinement_delta, m.delta);
        }
        if (std::isnan(m.log_value) || m.log_value == std::numeric_limits<double>::infinity()) {
            throw InputError("growth: ln M_f is not finite at r = " + shortest(r));
        }
    }
    g.requested_r_max = r_grid.back();
}

}  // namespace

double lnp(double x) { return x > 1.0 ? std::log(x) : 0.0; }

MaxModulus max_modulus(const Function& f, const Domain& d, double r, const SamplerConfig& cfg) {
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw InputError("max_modulus: radius must be positive and finite");
    }
    const auto pts = shell_points(d, r, cfg.n_theta, cfg.n_axis);
    if (pts.empty()) {
        throw InputError("max_modulus: the sphere |q| = " + shortest(r) + " misses the closure of the domain");
    }
    const GridMax g = grid_max(f, pts, cfg.workers);
    if (g.samples == 0) {
        throw InputError("max_modulus: no sample at |q| = " + shortest(r) + " lies in the domain of f");
    }
    MaxModulus out;
    out.log_value = g.log_value;
    out.value = std::exp(g.log_value);
    out.witness = g.witness;
    out.samples = g.samples;
    out.skipped = g.skipped;
    out.refined = out.value;
    if (cfg.refine) {
        const auto fine = shell_points(d, r, 2 * cfg.n_theta - 1, 2 * cfg.n_axis);
        const GridMax h = grid_max(f, fine, cfg.workers);
        // The coarse grid is nested in the fine one up to rounding of the
        // angles; keep the refined value monotone.
        out.refined = std::max(out.value, std::exp(h.log_value));
        out.delta = out.refined == out.value ? 0.0 : out.refined - out.value;
    }
    return out;
}

RadiusGrid growth_radius_grid(const Function& f, const Domain& d, double r_min, double r_max,
                              std::size_t n, const SamplerConfig& cfg) {
    if (!(r_min > 0.0) || !(r_max > r_min) || !std::isfinite(r_max)) {
        throw InputError("growth: need 0 < r_min < r_max < inf");
    }
    SamplerConfig coarse = cfg;
    coarse.refine = false;
    auto finite_at = [&](double r) { return std::isfinite(max_modulus(f, d, r, coarse).value); };
    RadiusGrid out;
    out.requested_max = r_max;
    if (finite_at(r_max)) {
        out.radii = geometric_grid(r_min, r_max, n);
        return out;
    }
    if (!finite_at(r_min)) {
        throw InputError("growth: M_f overflows already at r_min = " + shortest(r_min));
    }
    double lo = std::log(r_min), hi = std::log(r_max);
    for (int it = 0; it < 64 && hi - lo > 1e-12 * std::max(1.0, std::abs(hi)); ++it) {
        const double mid = 0.5 * (lo + hi);
        (finite_at(std::exp(mid)) ? lo : hi) = mid;
    }
    const double top = std::exp(lo);
    if (!(top > r_min * (1.0 + 1e-9))) {
        throw InputError("growth: M_f overflows just above r_min = " + shortest(r_min));
    }
    out.radii = geometric_grid(r_min, top, n);
    out.clipped = true;
    return out;
}

GrowthEstimate estimate_order(const Function& f, const Domain& d, std::span<const double> r_grid,
                              const SamplerConfig& cfg) {
    GrowthEstimate g;
    sweep(f, d, r_grid, cfg, g);
    const std::size_t n = g.r_grid.size();
    std::vector<double> x(n), y(n);
    bool any_large = false;
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = std::log(g.r_grid[i]);
        const double lnp_m = std::max(g.log_m[i], 0.0);
        any_large = any_large || g.log_m[i] > 0.0;
        y[i] = lnp(lnp_m);
        g.statistic.push_back(x[i] != 0.0 ? y[i] / x[i] : 0.0);
    }
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    g.raw_fit = fit_line(x, y, all);
    if (!any_large) {
        g.degenerate = true;
        g.envelope_fit = g.raw_fit;
        g.envelope_points = all;
        g.order_est = 0.0;
        return g;
    }
    const double scale = std::max(1.0, *std::max_element(y.begin(), y.end()));
    for (std::size_t i = 0; i < n; ++i) {
        if (y[i] >= g.raw_fit.intercept + g.raw_fit.slope * x[i] - 1e-12 * scale) {
            g.envelope_points.push_back(i);
        }
    }
    if (g.envelope_points.size() < 2) {
        g.envelope_points = all;
    }
    g.envelope_fit = fit_line(x, y, g.envelope_points);
    g.order_est = std::max(0.0, g.envelope_fit.slope);
    return g;
}

GrowthEstimate estimate_order(const Function& f, const Domain& d, const GrowthConfig& cfg) {
    const RadiusGrid grid = growth_radius_grid(f, d, cfg.r_min, cfg.r_max, cfg.n_r, cfg.sampler);
    GrowthEstimate g = estimate_order(f, d, grid.radii, cfg.sampler);
    g.clipped = grid.clipped;
    g.requested_r_max = grid.requested_max;
    return g;
}

GrowthEstimate estimate_type(const Function& f, const Domain& d, double rho,
                             std::span<const double> r_grid, const SamplerConfig& cfg) {
    if (!(rho > 0.0) || !std::isfinite(rho)) {
        throw InputError("estimate_type: rho must be positive");
    }
    GrowthEstimate g;
    g.rho = rho;
    sweep(f, d, r_grid, cfg, g);
    const std::size_t n = g.r_grid.size();
    bool any_large = false;
    for (std::size_t i = 0; i < n; ++i) {
        const double lnp_m = std::max(g.log_m[i], 0.0);
        any_large = any_large || lnp_m > 0.0;
        g.statistic.push_back(lnp_m > 0.0 ? std::exp(std::log(lnp_m) - rho * std::log(g.r_grid[i])) : 0.0);
    }
    g.degenerate = !any_large;
    const std::size_t top = std::max<std::size_t>(2, n / 4);
    double best = 0.0;
    for (std::size_t i = n - top; i < n; ++i) {
        g.envelope_points.push_back(i);
        best = std::max(best, g.statistic[i]);
    }
    g.type_est = best;
    g.trend = g.statistic.back() - g.statistic[n - top];
    return g;
}

GrowthEstimate estimate_type(const Function& f, const Domain& d, double rho, const GrowthConfig& cfg) {
    const RadiusGrid grid = growth_radius_grid(f, d, cfg.r_min, cfg.r_max, cfg.n_r, cfg.sampler);
    GrowthEstimate g = estimate_type(f, d, rho, grid.radii, cfg.sampler);
    g.clipped = grid.clipped;
    g.requested_r_max = grid.requested_max;
    return g;
}

std::string growth_csv(const GrowthEstimate& g) {
    std::ostringstream os;
    os << "r,M_f," << (g.rho ? "lnp_M_over_r_rho" : "lnp_lnp_M_over_ln_r") << ",envelope_flag\n";
    for (std::size_t i = 0; i < g.r_grid.size(); ++i) {
        const bool env = std::find(g.envelope_points.begin(), g.envelope_points.end(), i) !=
                         g.envelope_points.end();
        os << shortest(g.r_grid[i]) << ',' << shortest(g.m_values[i]) << ','
           << shortest(g.statistic[i]) << ',' << (env ? 1 : 0) << '\n';
    }
    return os.str();
}

std::string format_growth(const GrowthEstimate& g) {
    std::ostringstream os;
    if (g.type_est) {
        os << "type_est: " << shortest(*g.type_est) << '\n';
        os << "rho: " << shortest(*g.rho) << '\n';
        os << "trend: " << shortest(g.trend) << '\n';
    } else {
        os << "order_est: " << shortest(g.order_est) << '\n';
        os << "raw_fit: slope=" << shortest(g.raw_fit.slope) << " intercept=" << shortest(g.raw_fit.intercept)
           << " rms_residual=" << shortest(g.raw_fit.residual) << " slope_stderr="
           << shortest(g.raw_fit.slope_stderr) << '\n';
        os << "envelope_fit: slope=" << shortest(g.envelope_fit.slope) << " intercept="
           << shortest(g.envelope_fit.intercept) << " rms_residual=" << shortest(g.envelope_fit.residual)
           << " slope_stderr=" << shortest(g.envelope_fit.slope_stderr) << '\n';
    }
    os << "envelope_points:";
    for (auto i : g.envelope_points) os << ' ' << i;
    os << '\n';
    os << "radii: " << g.r_grid.size() << " from " << shortest(g.r_grid.front()) << " to "
       << shortest(g.r_grid.back()) << '\n';
    if (g.clipped) {
        os << "clipped: M_f overflows below the requested r_max " << shortest(g.requested_r_max) << '\n';
    }
    os << "max_refinement_delta: " << shortest(g.max_refinement_delta) << '\n';
    if (g.degenerate) {
        os << "degenerate: every sampled M_f <= 1, ln+ collapses\n";
    }
    if (g.non_canonical) {
        os << "non_canonical: order and type are not defined for strip domains\n";
    }
    return os.str();
}

}  // namespace slicepl

#include "slicepl/verify.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <cmath>
#include <limits>
#include <numbers>
#include <tuple>

#include "slicepl/format.hpp"
#include "slicepl/parallel.hpp"
#include "slicepl/sphere_grid.hpp"

namespace slicepl {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();
// ln of the largest double: beyond it |f| itself overflows.
const double kLogMax = std::log(std::numeric_limits<double>::max());

std::vector<double> log_moduli(const Function& f, const std::vector<SamplePoint>& pts, unsigned workers) {
    std::vector<double> lm(pts.size());
    parallel_for(pts.size(), workers, [&](std::size_t i) {
        try {
            lm[i] = log_modulus(f, pts[i].q);
        } catch (const DomainError&) {
            lm[i] = kNaN;
        }
    });
    return lm;
}

std::size_t count_nan(const std::vector<double>& v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](double x) { return std::isnan(x); }));
}

std::vector<double> shell_radii(const VerifyConfig& cfg) {
    std::vector<double> r = cfg.radii.empty() ? geometric_grid(cfg.r_min, cfg.r_max, cfg.n_r) : cfg.radii;
    if (r.empty()) {
        throw InputError("verify: at least one shell radius is required");
    }
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (!(r[i] > 0.0) || !std::isfinite(r[i]) || (i > 0 && !(r[i] > r[i - 1]))) {
            throw InputError("verify: radii must be positive, finite and strictly increasing");
        }
    }
    return r;
}

void check_config(const VerifyConfig& cfg) {
    if (cfg.n_theta < 1 || cfg.n_axis < 1) {
        throw InputError("verify: sample counts must be at least 1");
    }
    if (!(cfg.conclusion_tol > 0.0) || !(cfg.premise_tol > 0.0) || !(cfg.algebra_tol > 0.0)) {
        throw InputError("verify: tolerances must be positive");
    }
    if (cfg.radii.empty() && !(cfg.r_min > 0.0 && cfg.r_min < cfg.r_max)) {
        throw InputError("verify: need 0 < r_min < r_max");
    }
    if (cfg.inward_offset && !(*cfg.inward_offset >= 0.0)) {
        throw InputError("verify: inward offset must be nonnegative");
    }
}

// Evaluated samples restricted to the shells below the first one on which
// |f| overflows.
struct Sweep {
    std::vector<SamplePoint> pts;
    std::vector<double> lm;
    std::size_t kept_shells = 0;
};

Sweep sweep(const Function& f, std::vector<SamplePoint> pts, std::size_t n_shells, unsigned workers) {
    Sweep s;
    s.lm = log_moduli(f, pts, workers);
    std::size_t first_bad = n_shells;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (s.lm[i] > kLogMax) {
            first_bad = std::min(first_bad, pts[i].shell);
        }
    }
    s.kept_shells = first_bad;
    std::vector<SamplePoint> kept;
    std::vector<double> kept_lm;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].shell < first_bad) {
            kept.push_back(pts[i]);
            kept_lm.push_back(s.lm[i]);
        }
    }
    s.pts = std::move(kept);
    s.lm = std::move(kept_lm);
    return s;
}

struct Sampled {
    Sweep interior;
    Sweep boundary;
    std::vector<double> radii;
    bool clipped = false;
    double clipped_at = 0.0;
};

Sampled sample(const Function& f, const Domain& d, const VerifyConfig& cfg, double offset,
               VerificationReport& rep) {
    Sampled s;
    const auto radii = shell_radii(cfg);
    s.interior = sweep(f, interior_points(d, radii, cfg.n_theta, cfg.n_axis), radii.size(), cfg.workers);
    s.boundary = sweep(f, boundary_points(d, radii, cfg.n_axis, offset), radii.size(), cfg.workers);
    const std::size_t kept = std::min(s.interior.kept_shells, s.boundary.kept_shells);
    if (kept == 0) {
        throw InputError("verify: |f| overflows already on the innermost shell r = " + shortest(radii.front()));
    }
    auto trim = [&](Sweep& w) {
        std::vector<SamplePoint> p;
        std::vector<double> l;
        for (std::size_t i = 0; i < w.pts.size(); ++i) {
            if (w.pts[i].shell < kept) {
                p.push_back(w.pts[i]);
                l.push_back(w.lm[i]);
            }
        }
        w.pts = std::move(p);
        w.lm = std::move(l);
    };
    trim(s.interior);
    trim(s.boundary);
    s.radii.assign(radii.begin(), radii.begin() + static_cast<std::ptrdiff_t>(kept));
    if (kept < radii.size()) {
        s.clipped = true;
        s.clipped_at = radii[kept];
        rep.notes.push_back("shells with r >= " + shortest(radii[kept]) + " dropped: |f| overflows there");
    }
    rep.radii = s.radii;
    rep.interior_samples = s.interior.pts.size();
    rep.boundary_samples = s.boundary.pts.size();
    rep.skipped = count_nan(s.interior.lm) + count_nan(s.boundary.lm);
    if (rep.skipped > 0) {
        rep.notes.push_back(std::to_string(rep.skipped) + " samples outside the domain of f were skipped");
    }
    return s;
}

bool worse(const Witness& a, const Witness& b) {
    if (a.slack != b.slack) return a.slack > b.slack;
    return std::tie(a.shell, a.axis, a.index) < std::tie(b.shell, b.axis, b.index);
}

// The cap applies to distinct points: the real point of a cone shell, for
// instance, is sampled once per axis.
std::vector<Witness> select(std::vector<Witness> all, std::size_t cap) {
    std::sort(all.begin(), all.end(), worse);
    std::vector<Witness> out;
    std::set<std::array<double, 4>> seen;
    for (const auto& w : all) {
        if (out.size() >= cap) break;
        if (seen.insert(w.q.components()).second) out.push_back(w);
    }
    return out;
}

Witness make_witness(const SamplePoint& p, double modulus, double bound) {
    return {p.q, p.r, modulus, bound, modulus - bound, p.shell, p.axis, p.index};
}

// Points with |f| > M (1 + tol).
std::vector<Witness> exceeding(const Sweep& s, double M, double tol) {
    std::vector<Witness> out;
    for (std::size_t i = 0; i < s.pts.size(); ++i) {
        if (std::isnan(s.lm[i])) continue;
        const double m = std::exp(s.lm[i]);
        if (m > M * (1.0 + tol)) {
            out.push_back(make_witness(s.pts[i], m, M));
        }
    }
    return out;
}

// Per-shell maxima of ln|f| in shell order (NaN-free shells only).
std::vector<std::pair<double, double>> shell_maxima(const Sweep& s, const std::vector<double>& radii) {
    std::vector<double> best(radii.size(), -kInf);
    for (std::size_t i = 0; i < s.pts.size(); ++i) {
        if (!std::isnan(s.lm[i])) best[s.pts[i].shell] = std::max(best[s.pts[i].shell], s.lm[i]);
    }
    std::vector<std::pair<double, double>> out;
    for (std::size_t k = 0; k < radii.size(); ++k) {
        if (best[k] > -kInf) out.emplace_back(radii[k], best[k]);
    }
    return out;
}

// Sampled maxima read as unbounded: strictly increasing over the outer half
// and ln max |f| growing at least like unbounded_slope * ln r there.
bool looks_unbounded(const std::vector<std::pair<double, double>>& maxima, double slope_min,
                     double* slope_out) {
    if (maxima.size() < 2) return false;
    const std::size_t start = std::min(maxima.size() / 2, maxima.size() - 2);
    for (std::size_t k = start + 1; k < maxima.size(); ++k) {
        if (!(maxima[k].second > maxima[k - 1].second)) return false;
    }
    const auto& a = maxima[start];
    const auto& b = maxima.back();
    const double growth = b.second - a.second;
    const double slope = growth / (std::log(b.first) - std::log(a.first));
    if (slope_out) *slope_out = slope;
    return slope >= slope_min;
}

Premise boundedness_premise(const Sampled& s, const VerifyConfig& cfg) {
    Premise p{"f bounded on the domain (sampled)", PremiseStatus::FalsifiableOnlyPass, ""};
    if (s.clipped) {
        p.status = PremiseStatus::CheckedFail;
        p.evidence = "|f| overflows on the shell r = " + shortest(s.clipped_at);
        return p;
    }
    const auto maxima = shell_maxima(s.interior, s.radii);
    double slope = 0.0;
    if (looks_unbounded(maxima, cfg.unbounded_slope, &slope)) {
        p.status = PremiseStatus::CheckedFail;
        p.evidence = "shell maxima of |f| increase strictly with ln-ln slope " + shortest(slope) +
                     " >= " + shortest(cfg.unbounded_slope) + "; max |f| = " +
                     shortest(std::exp(maxima.back().second)) + " at r = " + shortest(maxima.back().first);
        return p;
    }
    double m = -kInf;
    for (const auto& [r, v] : maxima) m = std::max(m, v);
    p.evidence = "max sampled |f| = " + shortest(std::exp(m)) + " up to r = " + shortest(s.radii.back());
    return p;
}

Premise boundary_premise(const Sampled& s, double M, double tol, double offset, VerificationReport& rep) {
    Premise p{"boundary bound |f| <= M", PremiseStatus::FalsifiableOnlyPass, ""};
    double hi = -kInf, lo = kInf;
    for (double v : s.boundary.lm) {
        if (std::isnan(v)) continue;
        hi = std::max(hi, v);
        lo = std::min(lo, v);
    }
    if (hi > -kInf) {
        rep.boundary_max = std::exp(hi);
        rep.boundary_min = std::exp(lo);
    }
    const auto bad = select(exceeding(s.boundary, M, tol), 1);
    std::string where = offset == 0.0 ? "on the parametrized boundary"
                                      : "at inward offset " + shortest(offset);
    if (!bad.empty()) {
        p.status = PremiseStatus::CheckedFail;
        p.evidence = "|f| = " + shortest(bad[0].modulus) + " > M = " + shortest(M) + " at " +
                     format_quaternion17(bad[0].q) + " " + where;
    } else {
        p.evidence = "max boundary |f| = " + shortest(rep.boundary_max.value_or(0.0)) + " " + where +
                     " over " + std::to_string(s.boundary.pts.size()) + " samples";
    }
    return p;
}

bool any_failed(const VerificationReport& r) {
    return std::any_of(r.premises.begin(), r.premises.end(),
                       [](const Premise& p) { return p.status == PremiseStatus::CheckedFail; });
}

// Interior conclusion |f| <= M(1 + tol), or its diagnostic variant when a
// premise failed.
void conclude_bounded(const Sampled& s, double M, const VerifyConfig& cfg, VerificationReport& rep) {
    auto all = exceeding(s.interior, M, cfg.conclusion_tol);
    const std::size_t n = all.size();
    auto chosen = select(std::move(all), cfg.max_witnesses);
    if (any_failed(rep)) {
        rep.conclusion = Conclusion::NotEvaluated;
        rep.diagnostic_count = n;
        rep.diagnostics = std::move(chosen);
        return;
    }
    rep.violation_count = n;
    rep.violations = std::move(chosen);
    rep.conclusion = n == 0 ? Conclusion::Pass : Conclusion::Violated;
}

void echo_config(const VerifyConfig& cfg, double offset, VerificationReport& rep) {
    auto& c = rep.config;
    c.emplace_back("conclusion_tol", shortest(cfg.conclusion_tol));
    c.emplace_back("premise_tol", shortest(cfg.premise_tol));
    c.emplace_back("algebra_tol", shortest(cfg.algebra_tol));
    c.emplace_back("n_theta", std::to_string(cfg.n_theta));
    c.emplace_back("n_axis", std::to_string(cfg.n_axis));
    if (cfg.radii.empty()) {
        c.emplace_back("r_min", shortest(cfg.r_min));
        c.emplace_back("r_max", shortest(cfg.r_max));
        c.emplace_back("n_r", std::to_string(cfg.n_r));
    } else {
        c.emplace_back("radii", std::to_string(cfg.radii.size()) + " from " + shortest(cfg.radii.front()) +
                                    " to " + shortest(cfg.radii.back()));
    }
    c.emplace_back("inward_offset", shortest(offset));
    c.emplace_back("order_margin", shortest(cfg.order_margin));
    c.emplace_back("type_tol", shortest(cfg.type_tol));
    c.emplace_back("unbounded_slope", shortest(cfg.unbounded_slope));
    c.emplace_back("max_witnesses", std::to_string(cfg.max_witnesses));
    c.emplace_back("growth_r_min", shortest(cfg.growth.r_min));
    c.emplace_back("growth_r_max", shortest(cfg.growth.r_max));
    c.emplace_back("growth_n_r", std::to_string(cfg.growth.n_r));
    c.emplace_back("growth_n_theta", std::to_string(cfg.growth.sampler.n_theta));
    c.emplace_back("growth_n_axis", std::to_string(cfg.growth.sampler.n_axis));
    c.emplace_back("seed", std::to_string(cfg.seed));
}

GrowthConfig growth_config(const VerifyConfig& cfg) {
    GrowthConfig g = cfg.growth;
    g.sampler.workers = cfg.workers;
    return g;
}

std::string describe_growth(const GrowthEstimate& g) {
    std::string s = "r in [" + shortest(g.r_grid.front()) + ", " + shortest(g.r_grid.back()) + "]";
    if (g.clipped) s += " (clipped: M_f overflows beyond)";
    if (g.degenerate) s += " (degenerate: M_f <= 1 throughout)";
    return s;
}

Premise order_below(const Function& f, const Domain& d, double limit, bool strict, const VerifyConfig& cfg,
                    const std::string& name, double* estimate = nullptr) {
    Premise p{name, PremiseStatus::FalsifiableOnlyPass, ""};
    const GrowthEstimate g = estimate_order(f, d, growth_config(cfg));
    const double margin = std::max(cfg.order_margin, g.envelope_fit.slope_stderr);
    const bool ok = strict ? g.order_est < limit - margin : g.order_est <= limit + margin;
    if (estimate) *estimate = g.order_est;
    p.evidence = "order_est = " + shortest(g.order_est) + ", margin = " + shortest(margin) +
                 (strict ? ", required < " : ", required <= ") + shortest(limit) + (strict ? " - margin; " : " + margin; ") +
                 describe_growth(g);
    if (!ok) p.status = PremiseStatus::CheckedFail;
    return p;
}

Premise type_below(const Function& f, const Domain& d, double rho, double limit, const VerifyConfig& cfg,
                   const std::string& name) {
    Premise p{name, PremiseStatus::FalsifiableOnlyPass, ""};
    const GrowthEstimate g = estimate_type(f, d, rho, growth_config(cfg));
    const double margin = cfg.type_tol;
    p.evidence = "type_est = " + shortest(*g.type_est) + " at rho = " + shortest(rho) + ", required <= " +
                 shortest(limit) + " + " + shortest(margin) + "; trend " + shortest(g.trend) + "; " + describe_growth(g);
    if (!(*g.type_est <= limit + margin)) p.status = PremiseStatus::CheckedFail;
    return p;
}

Premise slice_domain_premise(const Domain& d) {
    Premise p{"slice domain with a real point", PremiseStatus::CheckedPass, ""};
    if (d.get<CircularCone>() || d.get<WholeSpace>()) {
        p.evidence = "supported family";
        return p;
    }
    const SliceDomainCheck c = is_slice_domain(d);
    p.evidence = std::string(c.certification) + ": " + std::to_string(c.slices_checked) + " slices, " +
                 std::to_string(c.disconnected_slices) + " disconnected, real point " +
                 (c.real_point ? shortest(*c.real_point) : std::string("none found"));
    p.status = c.verdict ? PremiseStatus::FalsifiableOnlyPass : PremiseStatus::CheckedFail;
    return p;
}

void require_nonnegative(double v, const char* name) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
        throw InputError(std::string("verify: ") + name + " must be finite and nonnegative");
    }
}

}  // namespace

Quaternion omega_r(const Quaternion& q, double r) { return inverse(q) * r; }

Quaternion omega_r_delta(const Quaternion& q, double r, double delta) {
    return qexp(principal_log(omega_r(q, r)) * delta);
}

Quaternion exp_damp(const Quaternion& q, double delta, double gamma) {
    return qexp(qpow(q, gamma) * -delta);
}

Function omega_r_delta_function(double r, double delta) {
    if (!(r > 0.0) || !(delta > 0.0)) {
        throw InputError("omega_r_delta: r and delta must be positive");
    }
    return Function::exp(Function::shift(delta * std::log(r),
                                          Function::negate(Function::right_scale(Function::log(), delta))));
}

Function exp_damp_function(double delta, double gamma) {
    if (!(delta > 0.0) || !(gamma > 0.0)) {
        throw InputError("exp_damp: delta and gamma must be positive");
    }
    return Function::exp(Function::negate(Function::right_scale(Function::pow(gamma), delta)));
}

const char* to_string(PremiseStatus s) {
    switch (s) {
        case PremiseStatus::CheckedPass: return "checked-pass";
        case PremiseStatus::CheckedFail: return "checked-fail";
        case PremiseStatus::FalsifiableOnlyPass: return "falsifiable-only-pass";
    }
    return "?";
}

const char* to_string(Conclusion c) {
    switch (c) {
        case Conclusion::Pass: return "pass";
        case Conclusion::Violated: return "violated";
        case Conclusion::NotEvaluated: return "not-evaluated";
    }
    return "?";
}

VerificationReport verify_bounded_pl(const Function& f, const Domain& d, double M, const VerifyConfig& cfg) {
    if (d.bounded()) {
        throw InputError("verify bounded: the domain is bounded; use the maximum-modulus test instead");
    }
    check_config(cfg);
    require_nonnegative(M, "M");
    const double offset = cfg.inward_offset.value_or(1e-6);
    VerificationReport rep;
    rep.theorem = "bounded";
    rep.function = f.describe();
    rep.domain = d.describe();
    echo_config(cfg, offset, rep);
    const Sampled s = sample(f, d, cfg, offset, rep);
    rep.premises.push_back(slice_domain_premise(d));
    if (!d.get<CircularCone>() && !d.get<WholeSpace>()) {
        rep.notes.push_back("slice-domain hypothesis for this domain is grid-checked only");
    }
    rep.premises.push_back(boundedness_premise(s, cfg));
    rep.premises.push_back(boundary_premise(s, M, cfg.conclusion_tol, offset, rep));
    conclude_bounded(s, M, cfg, rep);
    return rep;
}

VerificationReport verify_cone_pl(const Function& f, double alpha, double M, const VerifyConfig& cfg,
                                  const std::optional<Domain>& dom) {
    if (!(alpha > 0.5) || !std::isfinite(alpha)) {
        throw InputError("verify cone: alpha must exceed 1/2 so that C(pi/alpha) is a proper cone");
    }
    check_config(cfg);
    require_nonnegative(M, "M");
    const Domain d = dom ? *dom : Domain::cone(kPi / alpha);
    if (!d.get<CircularCone>() && !d.get<AngularDomain>()) {
        throw InputError("verify cone: the domain must be a circular cone or an angular domain");
    }
    const double offset = cfg.inward_offset.value_or(0.0);
    VerificationReport rep;
    rep.theorem = "cone";
    rep.function = f.describe();
    rep.domain = d.describe();
    echo_config(cfg, offset, rep);
    rep.config.emplace_back("alpha", shortest(alpha));
    rep.config.emplace_back("M", shortest(M));

    const SupremumEstimate op = opening(d);
    Premise open{"opening <= pi/alpha", d.get<CircularCone>() ? PremiseStatus::CheckedPass
                                                             : PremiseStatus::FalsifiableOnlyPass,
                 "opening = " + shortest(op.value) + ", pi/alpha = " + shortest(kPi / alpha)};
    if (!(op.value <= (kPi / alpha) * (1.0 + 1e-12))) open.status = PremiseStatus::CheckedFail;
    rep.premises.push_back(open);
    rep.premises.push_back(order_below(f, d, alpha, true, cfg, "order of f < alpha"));
    const Sampled s = sample(f, d, cfg, offset, rep);
    rep.premises.push_back(boundary_premise(s, M, cfg.premise_tol, offset, rep));
    conclude_bounded(s, M, cfg, rep);
    return rep;
}

VerificationReport verify_sharp_bound(const Function& f, const Domain& d, double M, double rho, double sigma,
                                      const VerifyConfig& cfg) {
    if (!d.get<CircularCone>() && !d.get<AngularDomain>()) {
        throw InputError("verify sharp: the domain must be a circular cone or an angular domain");
    }
    if (!(rho > 0.0) || !std::isfinite(rho)) {
        throw InputError("verify sharp: rho must be positive");
    }
    check_config(cfg);
    require_nonnegative(M, "M");
    require_nonnegative(sigma, "sigma");
    const double offset = cfg.inward_offset.value_or(0.0);
    VerificationReport rep;
    rep.theorem = "sharp";
    rep.function = f.describe();
    rep.domain = d.describe();
    rep.logarithmic = true;
    echo_config(cfg, offset, rep);
    rep.config.emplace_back("M", shortest(M));
    rep.config.emplace_back("rho", shortest(rho));
    rep.config.emplace_back("sigma", shortest(sigma));

    const SupremumEstimate op = opening(d);
    Premise open{"opening <= pi/rho", d.get<CircularCone>() ? PremiseStatus::CheckedPass
                                                           : PremiseStatus::FalsifiableOnlyPass,
                 "opening = " + shortest(op.value) + ", pi/rho = " + shortest(kPi / rho)};
    if (!(op.value <= (kPi / rho) * (1.0 + 1e-12))) open.status = PremiseStatus::CheckedFail;
    rep.premises.push_back(open);
    const Sampled s = sample(f, d, cfg, offset, rep);
    rep.premises.push_back(boundary_premise(s, M, cfg.premise_tol, offset, rep));
    rep.premises.push_back(order_below(f, d, rho, false, cfg, "order of f <= rho"));
    rep.premises.push_back(type_below(f, d, rho, sigma, cfg, "type of f <= sigma"));

    const double log_m = std::log(M);
    std::vector<Witness> bad;
    double max_slack = -kInf, max_abs = 0.0;
    for (std::size_t i = 0; i < s.interior.pts.size(); ++i) {
        const double v = s.interior.lm[i];
        if (std::isnan(v)) continue;
        const SamplePoint& p = s.interior.pts[i];
        const double bound = log_m + sigma * std::pow(p.r, rho) * std::cos(rho * p.param);
        const double slack = v - bound;
        max_slack = std::max(max_slack, slack);
        if (std::isfinite(slack)) max_abs = std::max(max_abs, std::abs(slack));
        if (slack > cfg.conclusion_tol) bad.push_back(make_witness(p, v, bound));
    }
    rep.max_slack = max_slack;
    rep.max_abs_slack = max_abs;
    const std::size_t n = bad.size();
    auto chosen = select(std::move(bad), cfg.max_witnesses);
    if (any_failed(rep)) {
        rep.conclusion = Conclusion::NotEvaluated;
        rep.diagnostic_count = n;
        rep.diagnostics = std::move(chosen);
    } else {
        rep.violation_count = n;
        rep.violations = std::move(chosen);
        rep.conclusion = n == 0 ? Conclusion::Pass : Conclusion::Violated;
    }
    return rep;
}

VerificationReport verify_strip_pl(const Function& f, const Domain& d, double M, double N, double k,
                                   const VerifyConfig& cfg) {
    if (!d.get<StripDomain>()) {
        throw InputError("verify strip: the domain must be a strip domain");
    }
    if (!(N > 0.0) || !(k > 0.0) || !std::isfinite(N) || !std::isfinite(k)) {
        throw InputError("verify strip: N and k must be positive");
    }
    check_config(cfg);
    require_nonnegative(M, "M");
    const double offset = cfg.inward_offset.value_or(0.0);
    VerificationReport rep;
    rep.theorem = "strip";
    rep.function = f.describe();
    rep.domain = d.describe();
    echo_config(cfg, offset, rep);
    rep.config.emplace_back("M", shortest(M));
    rep.config.emplace_back("N", shortest(N));
    rep.config.emplace_back("k", shortest(k));

    const SupremumEstimate w = width(d);
    Premise kp{"k < pi/gamma", PremiseStatus::CheckedPass,
               "k = " + shortest(k) + ", gamma = " + shortest(w.value) + ", pi/gamma = " + shortest(kPi / w.value)};
    if (!(k < kPi / w.value)) kp.status = PremiseStatus::CheckedFail;

    const Sampled s = sample(f, d, cfg, offset, rep);
    Premise growth{"|f| <= N exp(e^{k|q|}) (sampled)", PremiseStatus::FalsifiableOnlyPass, ""};
    double worst = -kInf;
    Quaternion worst_q;
    for (const Sweep* sw : {&s.interior, &s.boundary}) {
        for (std::size_t i = 0; i < sw->pts.size(); ++i) {
            if (std::isnan(sw->lm[i])) continue;
            const double excess = sw->lm[i] - (std::log(N) + std::exp(k * sw->pts[i].q.abs()));
            if (excess > worst) {
                worst = excess;
                worst_q = sw->pts[i].q;
            }
        }
    }
    if (worst > cfg.premise_tol) {
        growth.status = PremiseStatus::CheckedFail;
        growth.evidence = "ln|f| exceeds ln N + e^{k|q|} by " + shortest(worst) + " at " + format_quaternion17(worst_q);
    } else {
        growth.evidence = "max of ln|f| - ln N - e^{k|q|} = " + shortest(worst);
    }
    rep.premises.push_back(growth);
    rep.premises.push_back(kp);
    rep.premises.push_back(boundary_premise(s, M, cfg.premise_tol, offset, rep));
    conclude_bounded(s, M, cfg, rep);
    return rep;
}

VerificationReport verify_liouville(const Function& f, const UnitImaginary& I, const SliceLine& line_in,
                                    const VerifyConfig& cfg) {
    if (!f.entire()) {
        throw InputError("verify liouville: f must be entire (no log or pow nodes)");
    }
    check_config(cfg);
    const double n = std::abs(line_in.direction);
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw InputError("verify liouville: line direction must be nonzero");
    }
    const SliceLine line{line_in.point, line_in.direction / n};
    const Domain space = Domain::whole_space();
    VerificationReport rep;
    rep.theorem = "liouville";
    rep.function = f.describe();
    rep.domain = "space; line " + format_quaternion17(I.embed(line.point)) + " + t " +
                 format_quaternion17(I.embed(line.direction));
    echo_config(cfg, 0.0, rep);

    rep.premises.push_back(order_below(f, space, 1.0, false, cfg, "order of f <= 1"));
    rep.premises.push_back(type_below(f, space, 1.0, 0.0, cfg, "type of f = 0 at order 1"));

    // |f| along the line, both directions.
    const auto radii = shell_radii(cfg);
    Premise lp{"|f| bounded on the line (sampled)", PremiseStatus::FalsifiableOnlyPass, ""};
    double line_max = -kInf;
    for (double side : {1.0, -1.0}) {
        std::vector<SamplePoint> pts;
        for (std::size_t s = 0; s < radii.size(); ++s) {
            pts.push_back({I.embed(line.point + side * radii[s] * line.direction), radii[s], side, s, 0, 0});
        }
        const Sweep sw = sweep(f, pts, radii.size(), cfg.workers);
        if (sw.kept_shells < radii.size()) {
            lp.status = PremiseStatus::CheckedFail;
            lp.evidence = "|f| overflows on the line at t = " + shortest(side * radii[sw.kept_shells]);
            break;
        }
        std::vector<std::pair<double, double>> maxima;
        for (std::size_t i = 0; i < sw.pts.size(); ++i) {
            maxima.emplace_back(sw.pts[i].r, sw.lm[i]);
            line_max = std::max(line_max, sw.lm[i]);
        }
        double slope = 0.0;
        if (looks_unbounded(maxima, cfg.unbounded_slope, &slope)) {
            lp.status = PremiseStatus::CheckedFail;
            lp.evidence = "|f| grows along the line (t -> " + std::string(side > 0 ? "+" : "-") +
                          "inf) with ln-ln slope " + shortest(slope) + "; |f| = " +
                          shortest(std::exp(maxima.back().second)) + " at |t| = " + shortest(maxima.back().first);
            break;
        }
    }
    if (lp.status != PremiseStatus::CheckedFail) {
        lp.evidence = "max |f| on the line = " + shortest(std::exp(line_max)) + " for |t| <= " + shortest(radii.back());
    }
    rep.premises.push_back(lp);

    // Constancy: deviation from f(0) over the whole-space grid and of the
    // split components on L_I.
    const Quaternion f0 = eval(f, Quaternion(0.0));
    const double scale = std::max(1.0, f0.abs());
    auto pts = interior_points(space, radii, cfg.n_theta, cfg.n_axis);
    std::vector<double> dev(pts.size());
    parallel_for(pts.size(), cfg.workers, [&](std::size_t i) { dev[i] = (eval(f, pts[i].q) - f0).abs(); });
    rep.interior_samples = pts.size();
    std::vector<Witness> bad;
    const double bound = cfg.conclusion_tol * scale;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!(dev[i] <= bound)) bad.push_back(make_witness(pts[i], dev[i], bound));
    }
    const UnitImaginary J = orthogonal_unit(I);
    const SplitPair s0 = split(f, I, J, {0.0, 0.0});
    double split_dev = 0.0;
    for (double r : radii) {
        for (double t : closed_grid(-kPi, kPi, cfg.n_theta)) {
            const SplitPair s = split(f, I, J, std::polar(r, t));
            split_dev = std::max({split_dev, std::abs(s.F - s0.F), std::abs(s.G - s0.G)});
        }
    }
    rep.max_slack = split_dev;
    rep.notes.push_back("witness modulus is |f(q) - f(0)|; split components F, G on L_I deviate by at most " +
                        shortest(split_dev));
    const std::size_t count = bad.size();
    auto chosen = select(std::move(bad), cfg.max_witnesses);
    if (any_failed(rep)) {
        rep.conclusion = Conclusion::NotEvaluated;
        rep.diagnostic_count = count;
        rep.diagnostics = std::move(chosen);
    } else {
        rep.violation_count = count;
        rep.violations = std::move(chosen);
        rep.conclusion = count == 0 && split_dev <= bound ? Conclusion::Pass : Conclusion::Violated;
        if (count == 0 && split_dev > bound) {
            rep.notes.push_back("split components are not constant although sampled values are");
        }
    }
    return rep;
}

MaxModulusComparison verify_max_modulus(const Function& f, const Domain& ball, double tol, std::size_t n_axis,
                                        std::size_t n_theta, std::size_t density, unsigned workers) {
    const Ball* b = ball.get<Ball>();
    if (!b) {
        throw InputError("verify_max_modulus: the domain must be a ball");
    }
    if (n_axis < 1 || n_theta < 2 || density < 1) {
        throw InputError("verify_max_modulus: sample counts too small");
    }
    std::vector<double> radii;
    for (int k = 1; k <= 9; ++k) radii.push_back(0.1 * k * b->radius);
    const auto inner = interior_points(ball, radii, n_theta, n_axis);
    std::vector<SamplePoint> rim;
    const auto axes = axis_grid(density * n_axis);
    const auto thetas = closed_grid(0.0, kPi, density * n_theta);
    for (std::size_t a = 0; a < axes.size(); ++a) {
        for (std::size_t k = 0; k < thetas.size(); ++k) {
            rim.push_back({b->center + axes[a].polar_point(b->radius, thetas[k]), b->radius, thetas[k], 0, a, k});
        }
    }
    auto grid_max = [&](const std::vector<SamplePoint>& pts, Quaternion& where) {
        std::vector<double> v(pts.size());
        parallel_for(pts.size(), workers, [&](std::size_t i) { v[i] = eval(f, pts[i].q).abs(); });
        double best = -kInf;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (v[i] > best) {
                best = v[i];
                where = pts[i].q;
            }
        }
        return best;
    };
    MaxModulusComparison out;
    out.interior_max = grid_max(inner, out.interior_witness);
    out.boundary_max = grid_max(rim, out.boundary_witness);
    out.interior_samples = inner.size();
    out.boundary_samples = rim.size();
    out.pass = out.interior_max <= out.boundary_max + tol;
    return out;
}

double damped_shell_max(const Function& f, const Domain& d, double r, double delta, double gamma,
                        const SamplerConfig& cfg) {
    SamplerConfig c = cfg;
    c.refine = false;
    return max_modulus(product(exp_damp_function(delta, gamma), f), d, r, c).value;
}

}  // namespace slicepl

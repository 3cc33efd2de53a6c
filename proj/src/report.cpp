#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "slicepl/format.hpp"
#include "slicepl/verify.hpp"

namespace slicepl {

std::string shortest(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) return "0";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string digits17(double v) {
    if (v == 0.0) v = 0.0;  // drops the sign of -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_quaternion17(const Quaternion& q) {
    return "[" + digits17(q.w) + "," + digits17(q.x) + "," + digits17(q.y) + "," + digits17(q.z) + "]";
}

namespace {

// The text report lists the worst few; the CSV carries every kept witness.
constexpr std::size_t kListed = 10;

void list(std::ostringstream& os, const char* title, const std::vector<Witness>& w, std::size_t total) {
    const std::size_t shown = std::min(kListed, w.size());
    os << title << ": " << total;
    if (total > shown) os << " (showing " << shown << ")";
    os << '\n';
    for (std::size_t i = 0; i < shown; ++i) {
        const Witness& x = w[i];
        os << "  " << format_quaternion17(x.q) << " r=" << shortest(x.r) << " modulus=" << shortest(x.modulus)
           << " bound=" << shortest(x.bound) << " slack=" << shortest(x.slack) << '\n';
    }
}

}  // namespace

std::string format_report(const VerificationReport& r) {
    std::ostringstream os;
    os << "theorem: " << r.theorem << '\n';
    os << "function: " << r.function << '\n';
    os << "domain: " << r.domain << '\n';
    for (const auto& p : r.premises) {
        os << "premise: " << p.name << ": " << to_string(p.status) << " | " << p.evidence << '\n';
    }
    os << "conclusion: " << to_string(r.conclusion) << '\n';
    if (r.logarithmic) os << "scale: logarithmic (modulus and bound are ln values)\n";
    list(os, "violations", r.violations, r.violation_count);
    if (r.diagnostic_count > 0 || r.conclusion == Conclusion::NotEvaluated) {
        list(os, "diagnostics", r.diagnostics, r.diagnostic_count);
    }
    os << "samples: interior=" << r.interior_samples << " boundary=" << r.boundary_samples
       << " skipped=" << r.skipped << '\n';
    if (!r.radii.empty()) {
        os << "radii: " << r.radii.size() << " from " << shortest(r.radii.front()) << " to "
           << shortest(r.radii.back()) << '\n';
    }
    if (r.max_slack) os << "max_slack: " << shortest(*r.max_slack) << '\n';
    if (r.max_abs_slack) os << "max_abs_slack: " << shortest(*r.max_abs_slack) << '\n';
    if (r.boundary_max) {
        os << "boundary_modulus: min=" << shortest(*r.boundary_min) << " max=" << shortest(*r.boundary_max) << '\n';
    }
    for (const auto& n : r.notes) os << "note: " << n << '\n';
    for (const auto& [k, v] : r.config) os << "config: " << k << '=' << v << '\n';
    return os.str();
}

std::string violations_csv(const VerificationReport& r) {
    std::ostringstream os;
    os << "point_w,point_x,point_y,point_z,modulus,bound,slack\n";
    const auto& rows = r.violations.empty() ? r.diagnostics : r.violations;
    for (const auto& w : rows) {
        os << shortest(w.q.w) << ',' << shortest(w.q.x) << ',' << shortest(w.q.y) << ',' << shortest(w.q.z) << ','
           << shortest(w.modulus) << ',' << shortest(w.bound) << ',' << shortest(w.slack) << '\n';
    }
    return os.str();
}

int exit_code(const VerificationReport& r) {
    for (const auto& p : r.premises) {
        if (p.status == PremiseStatus::CheckedFail) return 2;
    }
    return r.conclusion == Conclusion::Violated ? 1 : 0;
}

}  // namespace slicepl

#include "slicepl/function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace slicepl {

const char* to_string(NodeKind kind) {
    switch (kind) {
        case NodeKind::PowerSeries: return "power_series";
        case NodeKind::Identity: return "identity";
        case NodeKind::RealConstant: return "real_constant";
        case NodeKind::QuatConstant: return "constant";
        case NodeKind::Negate: return "negate";
        case NodeKind::ShiftByReal: return "shift";
        case NodeKind::PrincipalLog: return "log";
        case NodeKind::BranchLog: return "branch_log";
        case NodeKind::Exp: return "exp";
        case NodeKind::Pow: return "pow";
        case NodeKind::Sum: return "sum";
        case NodeKind::RightScale: return "right_scale";
        case NodeKind::Product: return "product";
        case NodeKind::Compose: return "compose";
        case NodeKind::ConjugateTestOnly: return "conjugate(test-only)";
    }
    return "?";
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool all_of_children(const FunctionNode& n, bool (Function::*flag)() const) {
    return std::all_of(n.children.begin(), n.children.end(),
                       [flag](const Function& c) { return (c.*flag)(); });
}

void require_slice_preserving_argument(const char* what, const Function& arg) {
    if (!arg.slice_preserving()) {
        throw CompositionError(std::string("composition rule: ") + what +
                               "(f) is slice regular only for slice-preserving f; got " +
                               arg.describe());
    }
}

std::string format_quaternion(const Quaternion& q) {
    std::ostringstream os;
    os << '(' << q.w << ',' << q.x << ',' << q.y << ',' << q.z << ')';
    return os.str();
}

template <typename Op>
Quaternion guarded(NodeKind kind, Op&& op) {
    try {
        return op();
    } catch (const DomainError& e) {
        if (!e.node().empty()) {
            throw;
        }
        throw DomainError(e.what(), to_string(kind));
    }
}

const Function& only_child(const FunctionNode& n) { return n.children.front(); }

Quaternion horner(std::span<const Quaternion> coeffs, const Quaternion& q) {
    if (coeffs.empty()) {
        return {};
    }
    Quaternion acc = coeffs.back();
    for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it) {
        acc = q * acc + *it;
    }
    return acc;
}

}  // namespace

Function::Function() : Function(identity()) {}

Function Function::make(FunctionNode node) {
    return Function(std::make_shared<const FunctionNode>(std::move(node)));
}

Function Function::power_series(std::vector<Quaternion> coeffs, std::optional<GeometricTail> tail) {
    if (coeffs.empty()) {
        throw InputError("power series: at least one coefficient is required");
    }
    for (const auto& c : coeffs) {
        if (!c.is_finite()) {
            throw InputError("power series: non-finite coefficient");
        }
    }
    if (tail && (!(tail->constant >= 0.0) || !(tail->ratio >= 0.0))) {
        throw InputError("power series: tail constant and ratio must be nonnegative");
    }
    FunctionNode n;
    n.kind = NodeKind::PowerSeries;
    n.slice_preserving =
        std::all_of(coeffs.begin(), coeffs.end(), [](const Quaternion& c) { return c.is_real(); });
    n.coeffs = std::move(coeffs);
    n.tail = tail;
    return make(std::move(n));
}

Function Function::identity() {
    static const Function id = [] {
        FunctionNode n;
        n.kind = NodeKind::Identity;
        n.slice_preserving = true;
        return make(std::move(n));
    }();
    return id;
}

Function Function::real_constant(double t) {
    FunctionNode n;
    n.kind = NodeKind::RealConstant;
    n.scalar = t;
    n.slice_preserving = true;
    return make(std::move(n));
}

Function Function::constant(const Quaternion& c) {
    FunctionNode n;
    n.kind = NodeKind::QuatConstant;
    n.coeffs = {c};
    n.slice_preserving = c.is_real();
    return make(std::move(n));
}

Function Function::negate(Function arg) {
    FunctionNode n;
    n.kind = NodeKind::Negate;
    n.slice_preserving = arg.slice_preserving();
    n.regular = arg.regular();
    n.entire = arg.entire();
    n.children = {std::move(arg)};
    return make(std::move(n));
}

Function Function::shift(double t, Function arg) {
    FunctionNode n;
    n.kind = NodeKind::ShiftByReal;
    n.scalar = t;
    n.slice_preserving = arg.slice_preserving();
    n.regular = arg.regular();
    n.entire = arg.entire();
    n.children = {std::move(arg)};
    return make(std::move(n));
}

Function Function::elementary(NodeKind kind, const char* name, Function arg, double scalar,
                              bool keeps_entire) {
    require_slice_preserving_argument(name, arg);
    FunctionNode n;
    n.kind = kind;
    n.scalar = scalar;
    n.slice_preserving = true;
    n.regular = true;
    n.entire = keeps_entire && arg.entire();
    n.children = {std::move(arg)};
    return make(std::move(n));
}

Function Function::log(Function arg) {
    return elementary(NodeKind::PrincipalLog, "log", std::move(arg), 0.0, false);
}

Function Function::branch_log(Function arg) {
    return elementary(NodeKind::BranchLog, "branch_log", std::move(arg), 0.0, false);
}

Function Function::exp(Function arg) {
    return elementary(NodeKind::Exp, "exp", std::move(arg), 0.0, true);
}

Function Function::pow(double gamma, Function arg) {
    if (!std::isfinite(gamma)) {
        throw InputError("pow: exponent must be finite");
    }
    return elementary(NodeKind::Pow, "pow", std::move(arg), gamma, false);
}

Function Function::sum(std::vector<Function> terms) {
    if (terms.empty()) {
        throw InputError("sum: at least one term is required");
    }
    FunctionNode n;
    n.kind = NodeKind::Sum;
    n.children = std::move(terms);
    n.slice_preserving = all_of_children(n, &Function::slice_preserving);
    n.regular = all_of_children(n, &Function::regular);
    n.entire = all_of_children(n, &Function::entire);
    return make(std::move(n));
}

Function Function::right_scale(Function arg, const Quaternion& c) {
    if (!c.is_finite()) {
        throw InputError("right_scale: non-finite constant");
    }
    FunctionNode n;
    n.kind = NodeKind::RightScale;
    n.coeffs = {c};
    n.slice_preserving = arg.slice_preserving() && c.is_real();
    n.regular = arg.regular();
    n.entire = arg.entire();
    n.children = {std::move(arg)};
    return make(std::move(n));
}

Function product(const Function& f, const Function& g) {
    if (!f.slice_preserving()) {
        throw CompositionError(
            "product rule: f*g is slice regular only for a slice-preserving left factor f; got " +
            f.describe());
    }
    FunctionNode n;
    n.kind = NodeKind::Product;
    n.children = {f, g};
    n.slice_preserving = g.slice_preserving();
    n.regular = g.regular();
    n.entire = f.entire() && g.entire();
    return Function::make(std::move(n));
}

Function compose(const Function& g, const Function& f) {
    if (!f.slice_preserving()) {
        throw CompositionError(
            "composition rule: g(f) is slice regular only for a slice-preserving inner "
            "function f; got " +
            f.describe());
    }
    FunctionNode n;
    n.kind = NodeKind::Compose;
    n.children = {g, f};
    n.slice_preserving = g.slice_preserving();
    n.regular = g.regular();
    n.entire = g.entire() && f.entire();
    return Function::make(std::move(n));
}

namespace testing {

Function conjugate() {
    FunctionNode n;
    n.kind = NodeKind::ConjugateTestOnly;
    n.slice_preserving = false;
    n.regular = false;
    n.entire = false;
    return Function::make(std::move(n));
}

}  // namespace testing

std::string Function::describe() const {
    const FunctionNode& n = *node_;
    auto arg = [&](std::size_t i = 0) { return n.children[i].describe(); };
    std::ostringstream os;
    switch (n.kind) {
        case NodeKind::PowerSeries:
            os << "series[";
            for (std::size_t i = 0; i < n.coeffs.size(); ++i) {
                os << (i ? "," : "") << format_quaternion(n.coeffs[i]);
            }
            os << ']';
            break;
        case NodeKind::Identity: os << 'q'; break;
        case NodeKind::RealConstant: os << n.scalar; break;
        case NodeKind::QuatConstant: os << format_quaternion(n.coeffs[0]); break;
        case NodeKind::Negate: os << "-(" << arg() << ')'; break;
        case NodeKind::ShiftByReal: os << '(' << arg() << " + " << n.scalar << ')'; break;
        case NodeKind::PrincipalLog: os << "log(" << arg() << ')'; break;
        case NodeKind::BranchLog: os << "branch_log(" << arg() << ')'; break;
        case NodeKind::Exp: os << "exp(" << arg() << ')'; break;
        case NodeKind::Pow: os << "pow(" << arg() << ", " << n.scalar << ')'; break;
        case NodeKind::Sum:
            os << '(';
            for (std::size_t i = 0; i < n.children.size(); ++i) {
                os << (i ? " + " : "") << arg(i);
            }
            os << ')';
            break;
        case NodeKind::RightScale: os << '(' << arg() << ")*" << format_quaternion(n.coeffs[0]); break;
        case NodeKind::Product: os << '(' << arg(0) << ")*(" << arg(1) << ')'; break;
        case NodeKind::Compose: os << arg(0) << " o " << arg(1); break;
        case NodeKind::ConjugateTestOnly: os << "conj(q)"; break;
    }
    return os.str();
}

Quaternion Function::operator()(const Quaternion& q) const { return eval(*this, q); }

Quaternion eval(const Function& f, const Quaternion& q) {
    const FunctionNode& n = f.node();
    switch (n.kind) {
        case NodeKind::PowerSeries: return horner(n.coeffs, q);
        case NodeKind::Identity: return q;
        case NodeKind::RealConstant: return {n.scalar};
        case NodeKind::QuatConstant: return n.coeffs[0];
        case NodeKind::Negate: return -eval(only_child(n), q);
        case NodeKind::ShiftByReal: return eval(only_child(n), q) + Quaternion(n.scalar);
        case NodeKind::PrincipalLog:
            return guarded(n.kind, [&] { return principal_log(eval(only_child(n), q)); });
        case NodeKind::BranchLog:
            return guarded(n.kind, [&] { return branch_log(eval(only_child(n), q)); });
        case NodeKind::Exp: return qexp(eval(only_child(n), q));
        case NodeKind::Pow:
            return guarded(n.kind, [&] { return qpow(eval(only_child(n), q), n.scalar); });
        case NodeKind::Sum: {
            Quaternion acc;
            for (const auto& c : n.children) {
                acc += eval(c, q);
            }
            return acc;
        }
        case NodeKind::RightScale: return eval(only_child(n), q) * n.coeffs[0];
        case NodeKind::Product: return eval(n.children[0], q) * eval(n.children[1], q);
        case NodeKind::Compose: return eval(n.children[0], eval(n.children[1], q));
        case NodeKind::ConjugateTestOnly: return q.conj();
    }
    return {};
}

double log_modulus(const Function& f, const Quaternion& q) {
    const FunctionNode& n = f.node();
    switch (n.kind) {
        case NodeKind::Exp: return eval(only_child(n), q).w;
        case NodeKind::Negate: return log_modulus(only_child(n), q);
        case NodeKind::RightScale: return log_modulus(only_child(n), q) + std::log(n.coeffs[0].abs());
        case NodeKind::Product:
            return log_modulus(n.children[0], q) + log_modulus(n.children[1], q);
        case NodeKind::Compose: return log_modulus(n.children[0], eval(n.children[1], q));
        case NodeKind::Pow: {
            const Quaternion v = eval(only_child(n), q);
            if (v.is_real() && v.w <= 0.0) {
                throw DomainError("power: argument lies on the excluded half-line (-inf, 0]",
                                  to_string(n.kind));
            }
            return n.scalar * std::log(v.abs());
        }
        default: return std::log(eval(f, q).abs());
    }
}

double truncation_error_bound(const Function& f, const Quaternion& q) {
    const FunctionNode& n = f.node();
    switch (n.kind) {
        case NodeKind::PowerSeries: {
            if (!n.tail) {
                return 0.0;
            }
            const double x = q.abs() * n.tail->ratio;
            if (x >= 1.0) {
                return kInf;
            }
            const auto degree = static_cast<double>(n.coeffs.size() - 1);
            return n.tail->constant * std::pow(x, degree + 1.0) / (1.0 - x);
        }
        case NodeKind::Identity:
        case NodeKind::RealConstant:
        case NodeKind::QuatConstant:
        case NodeKind::ConjugateTestOnly: return 0.0;
        case NodeKind::Negate:
        case NodeKind::ShiftByReal: return truncation_error_bound(only_child(n), q);
        case NodeKind::RightScale: return truncation_error_bound(only_child(n), q) * n.coeffs[0].abs();
        case NodeKind::Sum: {
            double total = 0.0;
            for (const auto& c : n.children) {
                total += truncation_error_bound(c, q);
            }
            return total;
        }
        case NodeKind::Product: {
            const double el = truncation_error_bound(n.children[0], q);
            const double er = truncation_error_bound(n.children[1], q);
            if (el == 0.0 && er == 0.0) {
                return 0.0;
            }
            const double l = eval(n.children[0], q).abs();
            const double r = eval(n.children[1], q).abs();
            return l * er + r * el + el * er;
        }
        default: {
            // Error propagation through transcendental nodes is not tracked.
            for (const auto& c : n.children) {
                if (truncation_error_bound(c, q) != 0.0) {
                    return kInf;
                }
            }
            return 0.0;
        }
    }
}

Quaternion SplitPair::reconstruct() const {
    return I.embed(F) + I.embed(G) * J.quaternion();
}

SplitPair split(const Function& f, const UnitImaginary& I, const UnitImaginary& J,
                std::complex<double> z) {
    if (std::abs(dot(I, J)) > 1e-12) {
        throw InputError("split: J must be orthogonal to I");
    }
    const Quaternion v = eval(f, I.embed(z));
    const Quaternion IJ = I.quaternion() * J.quaternion();
    const Quaternion im = v.imag();
    SplitPair s{{v.w, dot(im, I.quaternion())}, {dot(im, J.quaternion()), dot(im, IJ)}, I, J};
    return s;
}

double cr_residual(const Function& f, const UnitImaginary& I, std::complex<double> z, double h) {
    if (!(h > 0.0)) {
        throw InputError("cr_residual: step must be positive");
    }
    auto at = [&](std::complex<double> p) { return eval(f, I.embed(p)); };
    const std::complex<double> dx(h, 0.0);
    const std::complex<double> dy(0.0, h);
    const Quaternion ddx = (at(z + dx) - at(z - dx)) * (0.5 / h);
    const Quaternion ddy = (at(z + dy) - at(z - dy)) * (0.5 / h);
    return ((ddx + I.quaternion() * ddy) * 0.5).abs();
}

CrCheck cr_check(const Function& f, const UnitImaginary& I, std::complex<double> z, double h,
                 double tol) {
    CrCheck c;
    c.residual = cr_residual(f, I, z, h);
    c.residual_coarse = cr_residual(f, I, z, 2.0 * h);
    for (const auto& p : {z, z + h, z - h, z + std::complex<double>(0, h),
                          z - std::complex<double>(0, h)}) {
        c.scale = std::max(c.scale, eval(f, I.embed(p)).abs());
    }
    const double unit = std::max(1.0, c.scale);
    const bool roundoff_level = c.residual <= 1e-10 * unit;
    const bool shrinking = c.residual_coarse >= 2.0 * c.residual;
    c.regular = c.residual <= tol * unit && (roundoff_level || shrinking);
    return c;
}

SlicePreservationCheck is_slice_preserving(const Function& f, std::span<const SliceSample> samples,
                                           double tol) {
    SlicePreservationCheck out;
    out.structural = f.slice_preserving();
    for (const auto& s : samples) {
        const Quaternion v = eval(f, s.I.embed(s.z));
        const Quaternion im = v.imag();
        const Quaternion along = s.I.quaternion() * dot(im, s.I.quaternion());
        const double off = (im - along).abs();
        if (off > tol * std::max(1.0, v.abs())) {
            out.sampled = false;
            out.witnesses.push_back({s, v, off});
        }
    }
    return out;
}

UnitImaginary orthogonal_unit(const UnitImaginary& I) {
    // Cross I with the coordinate axis it is least aligned with.
    const double ax = std::abs(I.x()), ay = std::abs(I.y()), az = std::abs(I.z());
    double ex = 0, ey = 0, ez = 0;
    if (ax <= ay && ax <= az) {
        ex = 1;
    } else if (ay <= az) {
        ey = 1;
    } else {
        ez = 1;
    }
    return UnitImaginary::normalized(I.y() * ez - I.z() * ey, I.z() * ex - I.x() * ez,
                                     I.x() * ey - I.y() * ex);
}

namespace {

// Bjorck-Pereyra solve of the Vandermonde system sum_n c_n x_m^n = v_m.
std::vector<std::complex<double>> solve_vandermonde(std::span<const std::complex<double>> x,
                                                    std::vector<std::complex<double>> c) {
    const std::size_t n = x.size() - 1;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = n; i > k; --i) {
            c[i] = (c[i] - c[i - 1]) / (x[i] - x[i - k - 1]);
        }
    }
    for (std::size_t k = n; k-- > 0;) {
        for (std::size_t i = k; i < n; ++i) {
            c[i] -= x[k] * c[i + 1];
        }
    }
    return c;
}

}  // namespace

CoefficientRecovery recover_coefficients(const Function& f, const UnitImaginary& I,
                                         const UnitImaginary& J,
                                         std::span<const std::complex<double>> nodes,
                                         std::size_t degree) {
    if (nodes.size() < degree + 1) {
        throw InputError("recover_coefficients: need at least degree + 1 nodes");
    }
    std::vector<std::complex<double>> F(degree + 1), G(degree + 1);
    for (std::size_t m = 0; m <= degree; ++m) {
        const SplitPair s = split(f, I, J, nodes[m]);
        F[m] = s.F;
        G[m] = s.G;
    }
    const auto interp = nodes.first(degree + 1);
    F = solve_vandermonde(interp, std::move(F));
    G = solve_vandermonde(interp, std::move(G));

    CoefficientRecovery out;
    out.coeffs.reserve(degree + 1);
    for (std::size_t k = 0; k <= degree; ++k) {
        out.coeffs.push_back(I.embed(F[k]) + I.embed(G[k]) * J.quaternion());
    }
    for (std::size_t m = degree + 1; m < nodes.size(); ++m) {
        const Quaternion q = I.embed(nodes[m]);
        out.max_residual = std::max(out.max_residual, distance(eval(f, q), horner(out.coeffs, q)));
    }
    return out;
}

}  // namespace slicepl

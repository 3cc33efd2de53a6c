#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slicepl/domain.hpp"
#include "slicepl/function.hpp"
#include "slicepl/growth.hpp"

namespace slicepl {

// Auxiliary functions of the Phragmen-Lindelof arguments.
// omega_r(q) = q^{-1} r; |omega_r(q)| = r/|q|.
Quaternion omega_r(const Quaternion& q, double r);
// e^{delta Log(q^{-1} r)}; |.| = (r/|q|)^delta. q off (-inf, 0].
Quaternion omega_r_delta(const Quaternion& q, double r, double delta);
// e^{-delta q^gamma}; |exp_damp(r e^{I theta})| = e^{-delta r^gamma cos(gamma theta)}.
Quaternion exp_damp(const Quaternion& q, double delta, double gamma);

// The same maps as slice-preserving expression trees, usable as left factors
// of products: exp(delta ln r - delta Log q) and exp(-(q^gamma) delta).
Function omega_r_delta_function(double r, double delta);
Function exp_damp_function(double delta, double gamma);

enum class PremiseStatus { CheckedPass, CheckedFail, FalsifiableOnlyPass };
enum class Conclusion { Pass, Violated, NotEvaluated };

const char* to_string(PremiseStatus s);
const char* to_string(Conclusion c);

struct Premise {
    std::string name;
    PremiseStatus status = PremiseStatus::FalsifiableOnlyPass;
    std::string evidence;
};

struct Witness {
    Quaternion q;
    double r = 0.0;
    double modulus = 0.0;  // |f(q)|, or ln|f(q)| in logarithmic reports
    double bound = 0.0;
    double slack = 0.0;    // modulus - bound
    std::size_t shell = 0;
    std::size_t axis = 0;
    std::size_t index = 0;
};

struct VerificationReport {
    std::string theorem;
    std::string function;
    std::string domain;
    std::vector<Premise> premises;
    Conclusion conclusion = Conclusion::NotEvaluated;
    // Worst violations (largest slack, ties by (shell, axis, index)), at most
    // max_witnesses of them; violation_count is the full number.
    std::vector<Witness> violations;
    std::size_t violation_count = 0;
    // Interior points exceeding the bound recorded while premises failed.
    std::vector<Witness> diagnostics;
    std::size_t diagnostic_count = 0;
    bool logarithmic = false;  // modulus and bound are logarithms
    std::size_t interior_samples = 0;
    std::size_t boundary_samples = 0;
    std::size_t skipped = 0;
    std::optional<double> max_slack;
    std::optional<double> max_abs_slack;
    std::optional<double> boundary_max;
    std::optional<double> boundary_min;
    std::vector<double> radii;
    std::vector<std::string> notes;
    std::vector<std::pair<std::string, std::string>> config;
};

struct VerifyConfig {
    double conclusion_tol = 1e-6;
    double premise_tol = 1e-9;
    double algebra_tol = 1e-12;
    std::size_t n_theta = 101;
    std::size_t n_axis = 64;
    double r_min = 1.0;
    double r_max = 1024.0;
    std::size_t n_r = 11;
    // Explicit shell radii; replace the geometric (r_min, r_max, n_r) grid.
    std::vector<double> radii;
    // Inward offset of boundary samples. Unset: 1e-6 for the bounded test
    // (boundary limsup), 0 where the theorem assumes continuity up to the
    // boundary.
    std::optional<double> inward_offset;
    double order_margin = 0.05;
    double type_tol = 0.05;
    // Shell maxima strictly increasing over the outer half with log-log slope
    // at least this count as unbounded.
    double unbounded_slope = 0.5;
    std::size_t max_witnesses = 64;
    GrowthConfig growth;
    unsigned workers = 0;
    std::uint64_t seed = 0;
};

// Unbounded domains only; balls go to verify_max_modulus.
VerificationReport verify_bounded_pl(const Function& f, const Domain& d, double M,
                                     const VerifyConfig& cfg = {});
// Domain defaults to C(pi/alpha); an explicit cone or angular domain must have
// opening <= pi/alpha.
VerificationReport verify_cone_pl(const Function& f, double alpha, double M, const VerifyConfig& cfg = {},
                                  const std::optional<Domain>& d = std::nullopt);
// ln|f(r e^{I(zeta_I + theta)})| <= ln M + sigma r^rho cos(rho theta) + tol.
VerificationReport verify_sharp_bound(const Function& f, const Domain& d, double M, double rho,
                                      double sigma, const VerifyConfig& cfg = {});
VerificationReport verify_strip_pl(const Function& f, const Domain& d, double M, double N, double k,
                                   const VerifyConfig& cfg = {});
VerificationReport verify_liouville(const Function& f, const UnitImaginary& I, const SliceLine& line,
                                    const VerifyConfig& cfg = {});

struct MaxModulusComparison {
    double interior_max = 0.0;
    double boundary_max = 0.0;
    Quaternion interior_witness;
    Quaternion boundary_witness;
    std::size_t interior_samples = 0;
    std::size_t boundary_samples = 0;
    bool pass = false;  // interior_max <= boundary_max + tol
};

// Interior grid (radii 0.1..0.9 of the radius, n_axis x n_theta directions)
// against a boundary grid `density` times denser in each angular direction.
MaxModulusComparison verify_max_modulus(const Function& f, const Domain& ball, double tol = 1e-6,
                                        std::size_t n_axis = 16, std::size_t n_theta = 16,
                                        std::size_t density = 10, unsigned workers = 0);

// max |exp_damp(q) f(q)| over the closure of d on |q| = r, in log form to
// stay finite.
double damped_shell_max(const Function& f, const Domain& d, double r, double delta, double gamma,
                        const SamplerConfig& cfg = {});

// Text report; byte-identical for identical inputs.
std::string format_report(const VerificationReport& r);
// point_w,point_x,point_y,point_z,modulus,bound,slack
std::string violations_csv(const VerificationReport& r);
// 0 pass, 1 violated, 2 a premise checked-fail.
int exit_code(const VerificationReport& r);

}  // namespace slicepl

#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "slicepl/quaternion.hpp"

namespace slicepl {

// Construction rejected because a product or composition would not be slice
// regular (left factor / inner function not slice-preserving).
class CompositionError : public InputError {
public:
    using InputError::InputError;
};

enum class NodeKind {
    PowerSeries,
    Identity,
    RealConstant,
    QuatConstant,
    Negate,
    ShiftByReal,
    PrincipalLog,
    BranchLog,
    Exp,
    Pow,
    Sum,
    RightScale,
    Product,
    Compose,
    // q -> conj(q). Not slice regular; only reachable through
    // slicepl::testing::conjugate() as a guaranteed-nonzero target for
    // Cauchy-Riemann residuals.
    ConjugateTestOnly,
};

const char* to_string(NodeKind kind);

// Declared geometric decay |a_n| <= constant * ratio^n for the discarded tail
// n > degree of a truncated power series.
struct GeometricTail {
    double constant = 0.0;
    double ratio = 0.0;
};

class Function;

namespace testing {
// q -> conj(q), a non-regular node for residual tests.
Function conjugate();
}  // namespace testing

struct FunctionNode {
    NodeKind kind = NodeKind::Identity;
    // PowerSeries coefficients a_0..a_N (right-multiplied); QuatConstant and
    // RightScale keep their quaternion in coeffs[0].
    std::vector<Quaternion> coeffs;
    // RealConstant t, ShiftByReal t, Pow gamma.
    double scalar = 0.0;
    std::optional<GeometricTail> tail;
    std::vector<Function> children;

    bool slice_preserving = false;
    bool regular = true;
    bool entire = true;
};

// Immutable handle to an expression tree describing a slice regular function.
// Copies share the tree; evaluation is pure and thread-safe.
class Function {
public:
    // Identity.
    Function();

    static Function power_series(std::vector<Quaternion> coeffs,
                                 std::optional<GeometricTail> tail = std::nullopt);
    static Function identity();
    static Function real_constant(double t);
    static Function constant(const Quaternion& c);
    // -arg(q)
    static Function negate(Function arg = identity());
    // arg(q) + t
    static Function shift(double t, Function arg = identity());
    // Log(arg(q)); arg must be slice-preserving.
    static Function log(Function arg = identity());
    // Second logarithm branch of arg(q); arg must be slice-preserving.
    static Function branch_log(Function arg = identity());
    // e^{arg(q)}; arg must be slice-preserving.
    static Function exp(Function arg = identity());
    // arg(q)^gamma; arg must be slice-preserving.
    static Function pow(double gamma, Function arg = identity());
    static Function sum(std::vector<Function> terms);
    // arg(q) * c
    static Function right_scale(Function arg, const Quaternion& c);

    const FunctionNode& node() const { return *node_; }
    NodeKind kind() const { return node_->kind; }

    // Structural flags: sound but incomplete.
    bool slice_preserving() const { return node_->slice_preserving; }
    bool regular() const { return node_->regular; }
    bool entire() const { return node_->entire; }

    // Compact human-readable form, e.g. "exp(pow(q, 2))".
    std::string describe() const;

    Quaternion operator()(const Quaternion& q) const;

private:
    explicit Function(std::shared_ptr<const FunctionNode> node) : node_(std::move(node)) {}
    static Function make(FunctionNode node);
    static Function elementary(NodeKind kind, const char* name, Function arg, double scalar,
                               bool keeps_entire);

    friend Function product(const Function&, const Function&);
    friend Function compose(const Function&, const Function&);
    friend Function testing::conjugate();

    std::shared_ptr<const FunctionNode> node_;
};

// f(q) * g(q); f must be structurally slice-preserving.
Function product(const Function& f, const Function& g);
// g(f(q)); f (inner) must be structurally slice-preserving.
Function compose(const Function& g, const Function& f);

// Recursive evaluation. Power series use Horner's scheme with powers of q on
// the left of the coefficients. Domain violations throw DomainError naming the
// offending node.
Quaternion eval(const Function& f, const Quaternion& q);

// ln|f(q)| computed without forming |f(q)| where the tree allows it
// (exponentials, products, scalings), so that magnitudes far beyond the
// double range stay representable. Returns -inf where f(q) = 0.
double log_modulus(const Function& f, const Quaternion& q);

// Bound on the discarded tail of a truncated power series at q; +inf when no
// tail is declared for a series or the declared ratio does not converge at
// |q|. Zero for trees without power series.
double truncation_error_bound(const Function& f, const Quaternion& q);

// f_I(z) = F(z) + G(z) J with F, G valued in L_I, stored as coordinates in
// the basis {1, I}.
struct SplitPair {
    std::complex<double> F;
    std::complex<double> G;
    UnitImaginary I;
    UnitImaginary J;

    Quaternion reconstruct() const;
};

// Splitting of f at z in L_I. Throws InputError when J is not orthogonal to I
// (|<I, J>| > 1e-12).
SplitPair split(const Function& f, const UnitImaginary& I, const UnitImaginary& J,
                std::complex<double> z);

// |(1/2)(d/dx + I d/dy) f_I(x + yI)| by central differences with step h.
double cr_residual(const Function& f, const UnitImaginary& I, std::complex<double> z,
                   double h = 1e-4);

struct CrCheck {
    double residual = 0.0;         // step h
    double residual_coarse = 0.0;  // step 2h
    double scale = 0.0;            // max |f| over the stencil
    bool regular = false;
};

// Residual at h and 2h. The verdict is "regular" when the residual at h is
// below tol * max(1, scale) and it shrinks under halving of the step (ratio
// >= 2), or when it sits at roundoff level.
CrCheck cr_check(const Function& f, const UnitImaginary& I, std::complex<double> z,
                 double h = 1e-4, double tol = 1e-6);

struct SliceSample {
    UnitImaginary I;
    std::complex<double> z;
};

struct SliceWitness {
    SliceSample sample;
    Quaternion value;
    double off_slice = 0.0;  // length of the component orthogonal to L_I
};

struct SlicePreservationCheck {
    bool sampled = true;  // falsification only: true means no witness found
    bool structural = false;
    std::vector<SliceWitness> witnesses;
};

SlicePreservationCheck is_slice_preserving(const Function& f, std::span<const SliceSample> samples,
                                           double tol = 1e-10);

struct CoefficientRecovery {
    std::vector<Quaternion> coeffs;
    // max |f(z) - reconstructed(z)| over the nodes not used for interpolation
    double max_residual = 0.0;
};

// Recovers a_0..a_degree of a power series from its values on nodes of a
// single slice L_I: splits each value and solves the two complex Vandermonde
// systems on the first degree + 1 nodes; the remaining nodes measure
// agreement.
CoefficientRecovery recover_coefficients(const Function& f, const UnitImaginary& I,
                                         const UnitImaginary& J,
                                         std::span<const std::complex<double>> nodes,
                                         std::size_t degree);

// Some unit J orthogonal to I.
UnitImaginary orthogonal_unit(const UnitImaginary& I);

}  // namespace slicepl

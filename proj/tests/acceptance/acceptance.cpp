// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include "../support.hpp"
#include "slicepl/growth.hpp"
#include "slicepl/sphere_grid.hpp"
#include "slicepl/verify.hpp"

using namespace slicepl;

namespace {
constexpr double pi = std::numbers::pi;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (pass) detail << (detail.str().empty() ? "" : "; ") << what;
            pass = false;
        }
    }
};

int failures = 0;

void criterion(int id, const char* title, double time_limit, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (time_limit > 0) o.require(secs < time_limit, "runtime over " + std::to_string(time_limit) + " s");
    if (!o.pass) ++failures;
    const std::string detail = o.detail.str();
    std::printf("%s %2d %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", id, title, secs, detail.empty() ? "" : ": ",
                detail.c_str());
    std::fflush(stdout);
}

Function exp_pow(double rho) { return Function::exp(Function::pow(rho)); }

VerifyConfig sharp_config(unsigned workers) {
    VerifyConfig c;
    c.radii = geometric_grid(0.1, 20.0, 100);
    c.n_axis = 64;
    c.n_theta = 101;
    c.workers = workers;
    return c;
}

VerifyConfig cone_config(unsigned workers) {
    VerifyConfig c;
    c.n_r = 21;  // 21 shells x 64 axes x 99 angles > 1e5 interior samples
    c.workers = workers;
    return c;
}

const double sharp_rhos[] = {0.75, 1.0, 2.0};
const double counter_rhos[] = {1.0, 1.5, 2.0};

std::string sharp_reports(unsigned workers) {
    std::string all;
    for (double rho : sharp_rhos)
        all += format_report(verify_sharp_bound(exp_pow(rho), Domain::cone(pi / rho), 1.0, rho, 1.0,
                                                sharp_config(workers)));
    return all;
}

std::string cone_report(unsigned workers) {
    return format_report(verify_cone_pl(Function::exp(Function::negate()), 2.0, 1.0, cone_config(workers)));
}

std::string counter_reports(unsigned workers) {
    std::string all;
    VerifyConfig c;
    c.workers = workers;
    for (double rho : counter_rhos) all += format_report(verify_cone_pl(exp_pow(rho), rho, 1.0, c));
    return all;
}

const Premise* premise(const VerificationReport& r, const std::string& prefix) {
    for (const auto& p : r.premises)
        if (p.name.rfind(prefix, 0) == 0) return &p;
    return nullptr;
}
}  // namespace

int main() {
    criterion(1, "boundary modulus of exp(q^rho) on the edges of C(pi/rho)", 1.0, [](Outcome& o) {
        double worst = 0.0;
        const auto axes = axis_grid(16);
        for (double rho : {0.5, 1.0, 2.0}) {
            const Function f = exp_pow(rho);
            for (double r : {0.1, 1.0, 10.0, 50.0})
                for (const auto& I : axes)
                    for (double s : {-1.0, 1.0})
                        worst = std::max(worst, std::abs(f(I.polar_point(r, s * pi / (2 * rho))).abs() - 1.0));
        }
        o.detail << "max deviation " << worst;
        o.require(worst <= 1e-9, "deviation above 1e-9");
    });

    criterion(2, "sharp bound is attained by exp(q^rho) on C(pi/rho)", 10.0, [](Outcome& o) {
        for (double rho : sharp_rhos) {
            const auto r = verify_sharp_bound(exp_pow(rho), Domain::cone(pi / rho), 1.0, rho, 1.0, sharp_config(0));
            o.require(r.conclusion == Conclusion::Pass && exit_code(r) == 0, "rho " + std::to_string(rho) + " not pass");
            o.require(r.max_abs_slack && *r.max_abs_slack <= 1e-9,
                      "rho " + std::to_string(rho) + " slack " + std::to_string(r.max_abs_slack.value_or(-1)));
        }
    });

    criterion(3, "order and type recovery", 30.0, [](Outcome& o) {
        const double oe = estimate_order(Function::exp(), Domain::cone(pi / 2)).order_est;
        const double te = *estimate_type(Function::exp(), Domain::cone(pi / 2), 1.0).type_est;
        auto g = test::rng(3);
        const double op =
            estimate_order(Function::power_series(test::random_coeffs(g, 5)), Domain::whole_space()).order_est;
        const double o2 = estimate_order(exp_pow(2.0), Domain::whole_space()).order_est;
        o.require(oe >= 0.95 && oe <= 1.05, "order of e^q " + std::to_string(oe));
        o.require(te >= 0.9 && te <= 1.1, "type of e^q " + std::to_string(te));
        o.require(op <= 0.05, "order of a quintic " + std::to_string(op));
        o.require(o2 >= 1.9 && o2 <= 2.1, "order of e^{q^2} " + std::to_string(o2));
    });

    criterion(4, "exp(-q) satisfies the cone principle on C(pi/2)", 10.0, [](Outcome& o) {
        const auto r = verify_cone_pl(Function::exp(Function::negate()), 2.0, 1.0, cone_config(0));
        o.require(exit_code(r) == 0, "exit " + std::to_string(exit_code(r)));
        o.require(r.violation_count == 0, "violations present");
        o.require(r.interior_samples >= 100000, "only " + std::to_string(r.interior_samples) + " interior samples");
    });

    criterion(5, "exp(q^rho) on C(pi/rho) is caught by the order premise", 0.0, [](Outcome& o) {
        for (double rho : counter_rhos) {
            const std::string tag = "rho " + std::to_string(rho) + ": ";
            VerifyConfig c;
            const auto r = verify_cone_pl(exp_pow(rho), rho, 1.0, c);
            const Premise* p = premise(r, "order");
            o.require(exit_code(r) == 2, tag + "exit " + std::to_string(exit_code(r)));
            o.require(p && p->status == PremiseStatus::CheckedFail, tag + "order premise did not fail");
            const double est = estimate_order(exp_pow(rho), Domain::cone(pi / rho), c.growth).order_est;
            o.require(std::abs(est - rho) <= 0.1, tag + "order estimate " + std::to_string(est));
            o.require(!r.diagnostics.empty() && r.diagnostics.front().modulus > 10, tag + "no witness above 10");
        }
    });

    criterion(6, "exp(e^q) on the strip of width pi is caught by k < pi/gamma", 0.0, [](Outcome& o) {
        const Domain d = Domain::strip([](const UnitImaginary&) { return SliceLine{}; },
                                       [](const UnitImaginary&) { return pi; }, "real-axis strip");
        const auto r = verify_strip_pl(Function::exp(Function::exp()), d, 1.0, 1.0, 1.0);
        const Premise* p = premise(r, "k < pi/gamma");
        o.require(exit_code(r) == 2, "exit " + std::to_string(exit_code(r)));
        o.require(p && p->status == PremiseStatus::CheckedFail, "k premise did not fail");
        o.require(r.boundary_max && r.boundary_min && std::abs(*r.boundary_max - 1) <= 1e-9 &&
                      std::abs(*r.boundary_min - 1) <= 1e-9,
                  "boundary modulus away from 1");
        bool real = false;
        for (const auto& w : r.diagnostics) real = real || (w.q.is_real() && w.modulus > 1e3);
        o.require(real, "no real-axis witness above 1e3");
    });

    criterion(7, "splitting roundtrip", 5.0, [](Outcome& o) {
        auto g = test::rng(7);
        std::uniform_int_distribution<std::size_t> deg(0, 8);
        double worst = 0.0;
        for (int n = 0; n < 1000; ++n) {
            const Function f = Function::power_series(test::random_coeffs(g, deg(g)));
            const UnitImaginary I = test::random_axis(g);
            const UnitImaginary J = test::random_orthogonal(g, I);
            for (int m = 0; m < 100; ++m) {
                const double rad = std::sqrt(test::uniform(g, 0, 1)), t = test::uniform(g, -pi, pi);
                const std::complex<double> z = std::polar(rad, t);
                const SplitPair s = split(f, I, J, z);
                worst = std::max(worst, distance(s.reconstruct(), f(I.embed(z))));
            }
        }
        o.detail << "max residual " << worst;
        o.require(worst <= 1e-11, "residual above 1e-11");
    });

    criterion(8, "Cauchy-Riemann residuals", 0.0, [](Outcome& o) {
        auto g = test::rng(8);
        double series = 0.0, logs = 0.0, conj_dev = 0.0;
        std::uniform_int_distribution<std::size_t> deg(0, 8);
        for (int n = 0; n < 1000; ++n) {
            // Coefficients in the unit ball of H, points in the unit disk.
            auto a = test::random_coeffs(g, deg(g));
            for (auto& c : a) c = c * 0.5;
            const Function f = Function::power_series(std::move(a));
            const UnitImaginary I = test::random_axis(g);
            const std::complex<double> z = std::polar(test::uniform(g, 0, 1), test::uniform(g, -pi, pi));
            series = std::max(series, cr_residual(f, I, z, 1e-4));
            // Log at least 0.2 radians away from the cut (-inf, 0].
            const std::complex<double> w = std::polar(test::uniform(g, 0.5, 5), test::uniform(g, -pi + 0.2, pi - 0.2));
            logs = std::max(logs, cr_residual(Function::log(), I, w, 1e-4));
            conj_dev = std::max(conj_dev, std::abs(cr_residual(testing::conjugate(), I, z, 1e-4) - 1.0));
        }
        o.detail << "series " << series << ", Log " << logs << ", conjugate |r - 1| " << conj_dev;
        o.require(series <= 1e-6 && logs <= 1e-6, "residual above 1e-6");
        o.require(conj_dev <= 1e-3, "conjugate residual not 1");
    });

    criterion(9, "quaternion algebra identities", 0.0, [](Outcome& o) {
        auto g = test::rng(9);
        double worst = 0.0;
        auto rel = [](const Quaternion& a, const Quaternion& b, double scale) { return distance(a, b) / scale; };
        for (int n = 0; n < 100000; ++n) {
            const Quaternion p = test::random_quaternion(g), q = test::random_quaternion(g),
                             r = test::random_quaternion(g);
            const double pq = p.abs() * q.abs();
            worst = std::max(worst, std::abs((p * q).abs() - pq) / pq);
            worst = std::max(worst, rel(p * q, test::matrix_product(p, q), pq));
            worst = std::max(worst, rel((p * q) * r, p * (q * r), pq * r.abs()));
            worst = std::max(worst, rel((p * q).conj(), q.conj() * p.conj(), pq));
            worst = std::max(worst, rel(p * inverse(p), Quaternion(1.0), 1.0));
            worst = std::max(worst, rel(inverse(p * q), inverse(q) * inverse(p), 1.0 / pq));
        }
        o.detail << "max relative error " << worst;
        o.require(worst <= 1e-12, "identity off by more than 1e-12");
    });

    criterion(10, "maximum modulus on the unit ball", 0.0, [](Outcome& o) {
        auto g = test::rng(10);
        std::uniform_int_distribution<std::size_t> deg(0, 5);
        int bad = 0;
        for (int n = 0; n < 100; ++n) {
            const Function f = Function::power_series(test::random_coeffs(g, deg(g)));
            if (!verify_max_modulus(f, Domain::ball(Quaternion(), 1.0)).pass) ++bad;
        }
        o.require(bad == 0, std::to_string(bad) + " of 100 failed");
    });

    criterion(11, "damped exp(q) vanishes on C(pi/2) at r = 1000", 0.0, [](Outcome& o) {
        const double m = damped_shell_max(Function::exp(), Domain::cone(pi / 2), 1000.0, 1.0, 1.5);
        o.detail << "shell max " << m;
        o.require(m < 1e-6, "not below 1e-6");
    });

    criterion(12, "reports are identical across worker counts", 0.0, [](Outcome& o) {
        const std::function<std::string(unsigned)> runs[] = {sharp_reports, cone_report, counter_reports};
        const char* names[] = {"criterion 2", "criterion 4", "criterion 5"};
        for (int k = 0; k < 3; ++k) {
            const std::string one = runs[k](1);
            for (unsigned w : {2u, 4u}) o.require(runs[k](w) == one, std::string(names[k]) + " differs");
        }
    });

    std::printf("%s\n", failures == 0 ? "all criteria passed" : "some criteria failed");
    return failures == 0 ? 0 : 1;
}

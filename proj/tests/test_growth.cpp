#include <doctest.h>

#include <numbers>

#include "slicepl/growth.hpp"
#include "slicepl/sphere_grid.hpp"
#include "support.hpp"

using namespace slicepl;

namespace {
constexpr double pi = std::numbers::pi;
const SamplerConfig kSmall{21, 16, true, 1};
}  // namespace

TEST_CASE("lnp") {
    CHECK(lnp(0.0) == 0.0);
    CHECK(lnp(0.5) == 0.0);
    CHECK(lnp(1.0) == 0.0);
    CHECK(lnp(std::exp(2.0)) == doctest::Approx(2.0));
}

TEST_CASE("max modulus examples") {
    const Quaternion c(1, -2, 0.5, 3);
    CHECK(max_modulus(Function::constant(c), Domain::cone(1.0), 5.0, kSmall).value ==
          doctest::Approx(c.abs()).epsilon(1e-15));
    const MaxModulus e = max_modulus(Function::exp(), Domain::cone(pi / 2), 3.0, kSmall);
    CHECK(e.value == doctest::Approx(std::exp(3.0)).epsilon(1e-15));
    CHECK(e.witness == Quaternion(3.0));
    CHECK_THROWS_AS(max_modulus(Function::exp(), Domain::ball(Quaternion(), 1.0), 3.0, kSmall), InputError);
    CHECK_THROWS_AS(max_modulus(Function::exp(), Domain::cone(1.0), -1.0, kSmall), InputError);
}

TEST_CASE("max modulus of exp(q^rho) matches the closed form") {
    for (double rho : {0.75, 1.0, 2.0, 3.0}) {
        const Function f = Function::exp(Function::pow(rho));
        for (double r : geometric_grid(0.1, 20.0, 12)) {
            if (std::pow(r, rho) > 700) continue;
            const double m = max_modulus(f, Domain::cone(pi / rho), r, kSmall).value;
            CHECK(m == doctest::Approx(std::exp(std::pow(r, rho))).epsilon(1e-9));
        }
    }
}

TEST_CASE("max modulus is monotone under refinement") {
    auto g = test::rng(30);
    const Domain d = Domain::cone(2.0);
    for (int n = 0; n < 10; ++n) {
        const Function f = Function::power_series(test::random_coeffs(g, 4));
        double prev = 0.0;
        for (std::size_t k : {5, 9, 17, 33}) {
            const MaxModulus m = max_modulus(f, d, 1.3, {k, 2 * k, true, 1});
            CHECK(m.value >= prev);
            CHECK(m.refined >= m.value);
            prev = m.value;
        }
    }
}

TEST_CASE("order estimates") {
    GrowthConfig cfg;
    cfg.sampler = {21, 16, true, 1};
    const GrowthEstimate e = estimate_order(Function::exp(), Domain::cone(pi / 2), cfg);
    CHECK(e.order_est == doctest::Approx(1.0).epsilon(0.05));
    CHECK(e.clipped);
    CHECK(e.r_grid.size() == 16);
    for (std::size_t i = 1; i < e.r_grid.size(); ++i) CHECK(e.r_grid[i] > e.r_grid[i - 1]);
    const GrowthEstimate p = estimate_order(
        Function::power_series({Quaternion(1), Quaternion(0, 1, 0, 0), Quaternion(), Quaternion(), Quaternion(),
                                Quaternion(0.5, 0, 0.5, 0)}),
        Domain::whole_space(), cfg);
    CHECK(p.order_est <= 0.05);
    CHECK_FALSE(p.clipped);
    const GrowthEstimate q2 = estimate_order(Function::exp(Function::pow(2.0)), Domain::cone(pi / 2), cfg);
    CHECK(q2.order_est == doctest::Approx(2.0).epsilon(0.05));
    const GrowthEstimate flat = estimate_order(Function::exp(Function::negate()), Domain::cone(pi / 2), cfg);
    CHECK(flat.degenerate);
    CHECK(flat.order_est == 0.0);
    CHECK(estimate_order(Function::exp(), Domain::strip([](const UnitImaginary&) { return SliceLine{}; },
                                                        [](const UnitImaginary&) { return 1.0; }),
                         cfg)
              .non_canonical);
    const std::vector<double> few{1, 2, 3};
    CHECK_THROWS_AS(estimate_order(Function::exp(), Domain::cone(1.0), few, cfg.sampler), InputError);
}

TEST_CASE("order is invariant under right scaling") {
    GrowthConfig cfg;
    cfg.sampler = {21, 16, false, 1};
    auto g = test::rng(31);
    const Function base = Function::exp(Function::pow(1.5));
    const double o = estimate_order(base, Domain::cone(pi / 1.5), cfg).order_est;
    for (int n = 0; n < 5; ++n) {
        const Quaternion c = test::random_quaternion(g, -3, 3);
        const double s = estimate_order(Function::right_scale(base, c), Domain::cone(pi / 1.5), cfg).order_est;
        CHECK(std::abs(s - o) <= 0.05);
    }
}

TEST_CASE("type estimates") {
    GrowthConfig cfg;
    cfg.sampler = {21, 16, true, 1};
    CHECK(*estimate_type(Function::exp(), Domain::whole_space(), 1.0, cfg).type_est ==
          doctest::Approx(1.0).epsilon(0.1));
    const Function e3 = compose(Function::exp(), Function::right_scale(Function::identity(), Quaternion(3.0)));
    CHECK(*estimate_type(e3, Domain::whole_space(), 1.0, cfg).type_est == doctest::Approx(3.0).epsilon(0.2 / 3));
    CHECK(*estimate_type(Function::power_series({Quaternion(2), Quaternion(1), Quaternion(0, 0, 1, 0)}),
                         Domain::whole_space(), 1.0, cfg)
               .type_est <= 0.05);
    CHECK_THROWS_AS(estimate_type(Function::exp(), Domain::whole_space(), 0.0, cfg), InputError);
}

TEST_CASE("growth csv") {
    GrowthConfig cfg;
    cfg.sampler = {5, 4, false, 1};
    const GrowthEstimate e = estimate_order(Function::exp(), Domain::cone(pi / 2), cfg);
    const std::string csv = growth_csv(e);
    CHECK(csv.rfind("r,M_f,lnp_lnp_M_over_ln_r,envelope_flag\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 17);
    const GrowthEstimate t = estimate_type(Function::exp(), Domain::cone(pi / 2), 1.0, cfg);
    CHECK(growth_csv(t).rfind("r,M_f,lnp_M_over_r_rho,envelope_flag\n", 0) == 0);
    CHECK(format_growth(e).find("clipped") != std::string::npos);
}

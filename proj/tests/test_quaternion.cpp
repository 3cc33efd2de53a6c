#include <doctest.h>

#include <numbers>

#include "slicepl/quaternion.hpp"
#include "support.hpp"

using namespace slicepl;
using slicepl::test::rel;

namespace {
constexpr double pi = std::numbers::pi;
const Quaternion I = Quaternion::i(), J = Quaternion::j(), K = Quaternion::k();
}  // namespace

TEST_CASE("multiplication table") {
    CHECK(I * J == K);
    CHECK(J * I == -K);
    CHECK(J * K == I);
    CHECK(K * I == J);
    CHECK(I * I == Quaternion(-1.0));
    CHECK(I * J * K == Quaternion(-1.0));
    const Quaternion q(1.5, -2.0, 0.25, 3.0);
    CHECK(Quaternion(1.0) * q == q);
    CHECK((I + J) * (I - J) == Quaternion(0, 0, 0, -2));
}

TEST_CASE("product agrees with the left-multiplication matrix") {
    auto g = test::rng(1);
    for (int n = 0; n < 1000; ++n) {
        const Quaternion p = test::random_quaternion(g), q = test::random_quaternion(g);
        CHECK(rel(p * q, test::matrix_product(p, q)) <= 1e-15);
    }
}

TEST_CASE("inverse") {
    CHECK(inverse(Quaternion(2.0)) == Quaternion(0.5));
    CHECK(inverse(I) == -I);
    CHECK(rel(inverse(Quaternion(1, 1, 1, 1)), Quaternion(0.25, -0.25, -0.25, -0.25)) <= 1e-16);
    CHECK_THROWS_AS(inverse(Quaternion()), DomainError);
}

TEST_CASE("polar form") {
    const PolarForm a = polar(Quaternion(1, 1, 0, 0));
    CHECK(a.r == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    REQUIRE(a.axis);
    CHECK(*a.axis == UnitImaginary::i());
    CHECK(a.theta == doctest::Approx(pi / 4).epsilon(1e-15));
    const PolarForm b = polar(Quaternion(5.0));
    CHECK(b.r == 5.0);
    CHECK(b.on_real_axis());
    CHECK(b.theta == 0.0);
    const PolarForm c = polar(Quaternion(-3.0));
    CHECK(c.r == 3.0);
    CHECK(c.on_real_axis());
    CHECK(c.theta == pi);
}

TEST_CASE("logarithms") {
    CHECK(rel(principal_log(Quaternion(std::numbers::e)), Quaternion(1.0)) <= 1e-16);
    CHECK(rel(principal_log(I), I * (pi / 2)) <= 1e-16);
    CHECK_THROWS_AS(principal_log(Quaternion(-1.0)), DomainError);
    CHECK_THROWS_AS(principal_log(Quaternion()), DomainError);
    CHECK(rel(branch_log(I), I * (-pi / 2)) <= 1e-16);
    CHECK(rel(branch_log(Quaternion(-2.0)), Quaternion(std::log(2.0))) <= 1e-16);
    CHECK_THROWS_AS(branch_log(Quaternion(3.0)), DomainError);
    CHECK_THROWS_AS(branch_log(Quaternion()), DomainError);
}

TEST_CASE("exponential and power") {
    CHECK(qexp(Quaternion()) == Quaternion(1.0));
    CHECK(rel(qexp(I * pi), Quaternion(-1.0)) <= 1e-15);
    CHECK(rel(qexp(Quaternion(1.0) + J * (pi / 2)), J * std::numbers::e) <= 1e-15);
    CHECK(rel(qpow(Quaternion(4.0), 0.5), Quaternion(2.0)) <= 1e-16);
    CHECK(rel(qpow(I, 2.0), Quaternion(-1.0)) <= 1e-15);
    CHECK_THROWS_AS(qpow(Quaternion(-4.0), 0.5), DomainError);
}

TEST_CASE("exponential matches its Taylor series") {
    auto g = test::rng(2);
    for (int n = 0; n < 500; ++n) {
        const Quaternion q = test::random_quaternion(g, -3.0, 3.0);
        CHECK(rel(qexp(q), test::exp_by_series(q)) <= 1e-12);
    }
}

TEST_CASE("power of a polar point") {
    auto g = test::rng(3);
    for (int n = 0; n < 500; ++n) {
        const UnitImaginary u = test::random_axis(g);
        const double r = test::uniform(g, 0.01, 10.0);
        const double theta = test::uniform(g, 0.0, 3.1);
        const double gamma = test::uniform(g, 0.1, 3.0);
        const Quaternion expected = u.polar_point(std::pow(r, gamma), gamma * theta);
        CHECK(rel(qpow(u.polar_point(r, theta), gamma), expected) <= 1e-12);
    }
}

TEST_CASE("slice-preserving lift stays on the slice") {
    const UnitImaginary u = UnitImaginary::normalized(1, 2, -2);
    const Quaternion q = u.polar_point(2.0, 1.0);
    const Quaternion e = qexp(q);
    const auto c = u.coordinates(e);
    CHECK(rel(u.embed(c), e) <= 1e-15);
}

TEST_CASE("unit imaginary validation") {
    CHECK_THROWS_AS(UnitImaginary(1.0, 1.0, 0.0), InputError);
    CHECK_THROWS_AS(UnitImaginary::normalized(0, 0, 0), InputError);
    CHECK_NOTHROW(UnitImaginary(0.6, 0.8, 0.0));
    const UnitImaginary u(0.6, 0.8, 0.0);
    CHECK(u.quaternion() * u.quaternion() == Quaternion(-1.0));
    CHECK(!UnitImaginary::direction_of(Quaternion(2.0)).has_value());
}

TEST_CASE("algebra properties on random inputs") {
    auto g = test::rng(4);
    for (int n = 0; n < 20000; ++n) {
        const Quaternion p = test::random_quaternion(g), q = test::random_quaternion(g),
                         s = test::random_quaternion(g);
        const double pq = (p * q).abs();
        CHECK(std::abs(pq - p.abs() * q.abs()) <= 1e-12 * pq);
        CHECK(rel((p * q) * s, p * (q * s)) <= 1e-12 * std::max(1.0, p.abs() * q.abs() * s.abs()));
        CHECK(rel((p * q).conj(), q.conj() * p.conj()) <= 1e-12 * std::max(1.0, pq));
        CHECK(rel(p * inverse(p), Quaternion(1.0)) <= 1e-12);
    }
}

TEST_CASE("roundtrips") {
    auto g = test::rng(5);
    for (int n = 0; n < 5000; ++n) {
        const Quaternion q = test::random_quaternion(g);
        CHECK(rel(polar(q).reconstruct(), q) <= 1e-10);
        CHECK(rel(qexp(principal_log(q)), q) <= 1e-10);
        CHECK(rel(qpow(q, 1.0), q) <= 1e-12);
        CHECK(rel(qpow(q, 0.0), Quaternion(1.0)) <= 1e-12);
    }
}

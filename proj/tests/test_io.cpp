#include <doctest.h>

#include "slicepl/domain_io.hpp"
#include "slicepl/function_io.hpp"
#include "support.hpp"

using namespace slicepl;

TEST_CASE("function specs parse and round-trip") {
    const char* text = R"({"type":"product",
        "left":{"type":"exp","arg":{"type":"negate","arg":{"type":"pow","gamma":1.5}}},
        "right":{"type":"sum","terms":[
            {"type":"power_series","coeffs":[[1,0,0,0],[0,1,2,3]],"tail":{"constant":1,"ratio":0.25}},
            {"type":"right_scale","c":[0,0,1,0],"arg":{"type":"shift","t":2,"arg":{"type":"log"}}},
            {"type":"compose","outer":{"type":"constant","c":5},"inner":{"type":"branch_log"}}]}})";
    const Function f = parse_function_json(text);
    const Function g = parse_function_json(function_to_json(f));
    CHECK(function_to_json(g) == function_to_json(f));
    auto rng = test::rng(20);
    for (int n = 0; n < 50; ++n) {
        const Quaternion q = test::random_quaternion(rng, 0.1, 2.0);
        CHECK(f(q) == g(q));
    }
}

TEST_CASE("function spec errors") {
    CHECK_THROWS_AS(parse_function_json("{"), InputError);
    CHECK_THROWS_AS(parse_function_json(R"({"type":"nope"})"), InputError);
    CHECK_THROWS_AS(parse_function_json(R"({"type":"pow"})"), InputError);
    CHECK_THROWS_AS(parse_function_json(R"({"type":"power_series","coeffs":[[1,2]]})"), InputError);
    const char* bad = R"({"type":"product","left":{"type":"power_series","coeffs":[[0,0,0,0],[0,0,1,0]]},"right":{"type":"identity"}})";
    try {
        parse_function_json(bad);
        FAIL("expected a CompositionError");
    } catch (const CompositionError& e) {
        const std::string what = e.what();
        CHECK(what.find("product rule") != std::string::npos);
        CHECK(what.find("$.") == std::string::npos);
    }
    CHECK_THROWS_AS(parse_function_json(
                        R"({"type":"compose","outer":{"type":"exp"},"inner":{"type":"power_series","coeffs":[[0,0,1,0]]}})"),
                    CompositionError);
    CHECK_THROWS_AS(load_function("/nonexistent/spec.json"), InputError);
}

TEST_CASE("domain specs") {
    const Domain c = parse_domain_json(R"({"type":"cone","phi":1.0})");
    REQUIRE(c.get<CircularCone>());
    CHECK(c.get<CircularCone>()->phi == 1.0);
    const Domain b = parse_domain_json(R"({"type":"ball","center":[0,1,0,0],"radius":0.5})");
    REQUIRE(b.get<Ball>());
    const Domain a = parse_domain_json(
        R"({"type":"angular","zeta":{"name":"odd_harmonic","amplitude":0.3,"axis":[1,0,0]},
            "phi":{"name":"even_harmonic","base":1.5,"amplitude":0.1,"axis":[0,0,1]}})");
    REQUIRE(a.get<AngularDomain>());
    CHECK(a.get<AngularDomain>()->phi(UnitImaginary::k()) == doctest::Approx(1.6));
    CHECK(a.get<AngularDomain>()->zeta(UnitImaginary::i()) == doctest::Approx(0.3));
    const Domain s = parse_domain_json(R"({"type":"strip","gamma":2,"line":"real_axis"})");
    REQUIRE(s.get<StripDomain>());
    CHECK(parse_domain_json(R"({"type":"space"})").get<WholeSpace>());
    // A constant nonzero bisector is not antipodally consistent.
    CHECK_THROWS_AS(parse_domain_json(R"({"type":"angular","zeta":0.5,"phi":1})"), InputError);
    // Neither is a line off the real axis, repeated on every slice.
    CHECK_THROWS_AS(parse_domain_json(R"({"type":"strip","gamma":1,"line":{"point":[0,1],"direction":[1,0]}})"),
                    InputError);
    CHECK_NOTHROW(parse_domain_json(R"({"type":"strip","gamma":1,"line":{"point":[2,0],"direction":[0,1]}})"));
    CHECK_THROWS_AS(parse_domain_json(R"({"type":"cone","phi":7})"), InputError);
    CHECK_THROWS_AS(parse_domain_json(R"({"type":"ball","center":[0,0,0,0],"radius":-1})"), InputError);
    CHECK_THROWS_AS(parse_domain_json(R"({"type":"hexagon"})"), InputError);
}

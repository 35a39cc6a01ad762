#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "ofrac/function_model.hpp"
#include "testing.hpp"

using namespace ofrac;
using ofrac_test::Rng;

namespace {
const Interval kUnit{0.0, 1.0};
}

TEST_CASE("power_at_b basics") {
    const ModelFunction one = make_power_at_b(1.0, 0.0, kUnit);
    CHECK(one.eval(0.3) == 1.0);
    CHECK(one.deriv(1, 0.3) == 0.0);
    CHECK(one.oracle_class() == OracleClass::Constant);

    const ModelFunction sq = make_power_at_b(1.0, 2.0, kUnit);
    CHECK(sq.deriv(1, 0.5) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(sq.deriv(3, 0.5) == 0.0); // integer beta, k > beta

    const ModelFunction frac = make_power_at_b(2.0, 1.5, kUnit);
    CHECK(frac.boundary(1) == 0.0);
    CHECK(frac.boundary(0) == 0.0);

    CHECK_THROWS_AS(make_power_at_b(1.0, -0.5, kUnit), std::domain_error);
}

TEST_CASE("boundary is exact and refuses unbounded derivatives") {
    const ModelFunction f = make_power_at_b(3.0, 2.0, kUnit);
    CHECK(f.boundary(2) == 6.0); // (-1)^2 * 3 * 2!
    const ModelFunction g = make_power_at_b(1.0, 1.5, kUnit);
    CHECK_THROWS_AS(g.boundary(2), std::domain_error);
}

TEST_CASE("corpus determinism") {
    const FractionalSetup setup = FractionalSetup::make(2.5);
    const Interval iv{0.0, 2.0};
    const auto c1 = sample_corpus(setup, iv, 100, 3);
    const auto c2 = sample_corpus(setup, iv, 100, 3);
    REQUIRE(c1.size() == 100);
    for (std::size_t i = 0; i < c1.size(); ++i)
        for (double t : {0.0, 0.7, 1.3, 1.999})
            CHECK(c1[i].eval(t) == c2[i].eval(t));
    const auto c3 = sample_corpus(setup, iv, 100, 4);
    bool any_different = false;
    for (std::size_t i = 0; i < c1.size(); ++i)
        any_different = any_different || c1[i].eval(0.7) != c3[i].eval(0.7);
    CHECK(any_different);
}

TEST_CASE("corpus satisfies the vanishing-derivative hypothesis exactly") {
    for (double alpha : {0.5, 1.5, 2.5}) {
        const FractionalSetup setup = FractionalSetup::make(alpha);
        const auto corpus = sample_corpus(setup, kUnit, 50, 11);
        for (const ModelFunction& f : corpus) {
            CHECK(f.deriv_order_max() == setup.m + 1);
            for (int k = 1; k <= setup.m - 1; ++k)
                CHECK(f.boundary(k) == 0.0);
        }
    }
}

TEST_CASE("derivative stack consistent with central differences") {
    Rng rng(5);
    for (double alpha : {0.5, 1.5, 2.5}) {
        const FractionalSetup setup = FractionalSetup::make(alpha);
        const auto corpus = sample_corpus(setup, kUnit, 20, 13);
        const double h = kUnit.length() * 1e-4;
        for (const ModelFunction& f : corpus) {
            for (int i = 0; i < 32; ++i) {
                // keep clear of b, where (b-t)^(beta-k) factors make the
                // higher derivatives entering the difference error blow up
                const double t =
                    rng.uniform(kUnit.a + 10.0 * h, kUnit.b - 0.1);
                for (int k = 1; k <= f.deriv_order_max(); ++k) {
                    const double fd =
                        (f.deriv(k - 1, t + h) - f.deriv(k - 1, t - h)) /
                        (2.0 * h);
                    CHECK(std::abs(f.deriv(k, t) - fd) <= 1e-5);
                }
            }
        }
    }
}

TEST_CASE("sums and scalar multiples preserve the analytic stack") {
    const ModelFunction f = make_power_at_b(1.5, 2.5, kUnit);
    const ModelFunction g = make_power_at_b(-0.5, 1.25, kUnit);
    const ModelFunction s = f.plus(g).scaled(2.0);
    CHECK(s.oracle_class() == OracleClass::SumOfTerms);
    for (double t : {0.1, 0.4, 0.9})
        CHECK(s.eval(t) ==
              doctest::Approx(2.0 * (f.eval(t) + g.eval(t))).epsilon(1e-14));
    for (double t : {0.1, 0.4, 0.9})
        CHECK(s.deriv(1, t) ==
              doctest::Approx(2.0 * (f.deriv(1, t) + g.deriv(1, t)))
                  .epsilon(1e-14));
}

TEST_CASE("mini-language parser") {
    const ModelFunction f =
        parse_function_spec("const:1; powb:c=-0.5,beta=1.5", kUnit);
    CHECK(f.eval(0.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(f.eval(1.0) == doctest::Approx(1.0).epsilon(1e-14));

    const ModelFunction c = parse_function_spec(" const:2.5e-1 ", kUnit);
    CHECK(c.oracle_class() == OracleClass::Constant);
    CHECK(c.eval(0.7) == 0.25);

    const ModelFunction p = parse_function_spec("powb:c=2,beta=3", kUnit);
    CHECK(p.oracle_class() == OracleClass::PowerAtB);

    CHECK_THROWS_AS(parse_function_spec("", kUnit), std::invalid_argument);
    CHECK_THROWS_AS(parse_function_spec("cost:1", kUnit),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_function_spec("powb:c=1", kUnit),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_function_spec("powb:c=1,beta=-2", kUnit),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_function_spec("const:1x", kUnit),
                    std::invalid_argument);
}

TEST_CASE("interval and setup validation") {
    CHECK_THROWS_AS(Interval(1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(FractionalSetup::make(0.0), std::domain_error);
    CHECK_THROWS_AS(FractionalSetup::make(0.5, 2.0), std::domain_error);
    const FractionalSetup s = FractionalSetup::make(0.6, 2.0);
    CHECK(s.m == 1);
    CHECK(*s.q == doctest::Approx(2.0));
    CHECK(FractionalSetup::make(3.0).m == 3);
    CHECK(FractionalSetup::make(2.5).m == 3);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "ofrac/fractional_ops.hpp"
#include "ofrac/special_functions.hpp"
#include "testing.hpp"

using namespace ofrac;
using ofrac_test::Rng;
using ofrac_test::brute_singular_integral;
using ofrac_test::rel_err;

namespace {

const Interval kUnit{0.0, 1.0};
const OpOptions kNoClosedForm{512, false};

// Definition-level brute force for the right Caputo derivative of the term
// family; independent of the library quadrature path.
double brute_caputo(const ModelFunction& f, double alpha, double x) {
    const int m = static_cast<int>(std::ceil(alpha));
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    const double mu = m - alpha;
    const double integral = brute_singular_integral(
        [&](double t) { return f.deriv(m, t); }, x, f.interval().b, mu);
    return sign * integral / gamma_fn(mu);
}

} // namespace

TEST_CASE("caputo power oracle against definition-level quadrature") {
    // constant in x when beta = alpha
    for (double alpha : {0.5, 1.5}) {
        for (double x : {0.0, 0.3, 0.9})
            CHECK(rel_err(caputo_oracle_power(1.0, alpha, alpha, kUnit, x),
                          gamma_fn(alpha + 1.0)) <= 1e-13);
    }
    // integer-order consistency: beta = alpha = 2 gives 2 everywhere
    CHECK(rel_err(caputo_oracle_power(1.0, 2.0, 2.0, kUnit, 0.4), 2.0) <=
          1e-13);
    // c=3, beta=1.5, alpha=0.5 at x=0.5: 3 Gamma(2.5)/Gamma(2) * 0.5
    const double want = 3.0 * gamma_fn(2.5) / gamma_fn(2.0) * 0.5;
    CHECK(rel_err(caputo_oracle_power(3.0, 1.5, 0.5, kUnit, 0.5), want) <=
          1e-13);
    const double brute =
        brute_caputo(make_power_at_b(3.0, 1.5, kUnit), 0.5, 0.5);
    CHECK(std::abs(brute - want) <= 1e-7);

    CHECK_THROWS_AS(caputo_oracle_power(1.0, 0.4, 1.5, kUnit, 0.5),
                    std::domain_error);
}

TEST_CASE("caputo_right closed form agrees with the oracle formula") {
    Rng rng(71);
    for (int i = 0; i < 40; ++i) {
        const double alpha = rng.uniform(0.1, 3.0);
        const int m = static_cast<int>(std::ceil(alpha));
        const double beta = rng.uniform(m + 0.06, m + 3.0);
        const double c = rng.uniform(-2.0, 2.0);
        const double x = rng.uniform(0.0, 1.0);
        const ModelFunction f = make_power_at_b(c, beta, kUnit);
        const FractionalSetup setup = FractionalSetup::make(alpha);
        const FractionalEvaluation e = caputo_right(f, setup, x);
        CHECK(e.method == EvalMethod::ClosedForm);
        CHECK(rel_err(e.value, caputo_oracle_power(c, beta, alpha, kUnit, x)) <=
              1e-12);
    }
}

TEST_CASE("caputo_right quadrature matches the closed form") {
    Rng rng(2718);
    for (int i = 0; i < 50; ++i) {
        const double alpha = rng.uniform(0.1, 3.0);
        const int m = static_cast<int>(std::ceil(alpha));
        double beta;
        do {
            beta = rng.uniform(m, m + 3.0);
        } while (std::abs(beta - std::round(beta)) < 0.05);
        const double c = rng.uniform(-2.0, 2.0);
        const ModelFunction f = make_power_at_b(c, beta, kUnit);
        const FractionalSetup setup = FractionalSetup::make(alpha);
        for (int j = 0; j < 10; ++j) {
            const double x = rng.uniform(0.0, 0.999);
            const FractionalEvaluation q =
                caputo_right(f, setup, x, kNoClosedForm);
            const double cf = caputo_oracle_power(c, beta, alpha, kUnit, x);
            CHECK(std::abs(q.value - cf) <=
                  std::max(1e-6, 3.0 * q.err_estimate));
        }
    }
}

TEST_CASE("caputo_right degenerate and convention cases") {
    const ModelFunction lin = make_power_at_b(1.0, 1.0, kUnit); // (1-t)
    // integer order: D^1 f = -f'
    FractionalSetup one = FractionalSetup::make(1.0);
    FractionalEvaluation e = caputo_right(lin, one, 0.3);
    CHECK(e.value == 1.0);
    CHECK(e.err_estimate == 0.0);
    // m = 2
    const ModelFunction sq = make_power_at_b(1.0, 2.0, kUnit);
    CHECK(caputo_right(sq, FractionalSetup::make(2.0), 0.3).value == 2.0);
    // constants have vanishing non-integer Caputo derivative
    const ModelFunction c = ModelFunction::constant(4.0, kUnit);
    CHECK(caputo_right(c, FractionalSetup::make(0.5), 0.2).value == 0.0);
    // (1-t), alpha = 0.5, x = 0: 2/sqrt(pi)
    CHECK(rel_err(caputo_right(lin, FractionalSetup::make(0.5), 0.0).value,
                  1.1283791670955126) <= 1e-12);
    // x > b convention
    CHECK(caputo_right(lin, FractionalSetup::make(0.5), 2.0).value == 0.0);
    // missing derivatives
    const ModelFunction opaque = ModelFunction::opaque(
        {[](double t) { return t; }}, kUnit);
    CHECK_THROWS_AS(caputo_right(opaque, FractionalSetup::make(0.5), 0.2),
                    std::domain_error);
}

TEST_CASE("rl integrals: identity order and first order") {
    const ModelFunction lin = make_power_at_b(1.0, 1.0, kUnit);
    FractionalEvaluation e = rl_integral_left(lin, 0.0, 0.4);
    CHECK(e.value == lin.eval(0.4));
    CHECK(e.method == EvalMethod::ClosedForm);
    e = rl_integral_right(lin, 0.0, 0.4);
    CHECK(e.value == lin.eval(0.4));

    const ModelFunction c = ModelFunction::constant(1.0, kUnit);
    CHECK(rel_err(rl_integral_left(c, 1.0, 0.7).value, 0.7) <= 1e-13);
    const ModelFunction c3 = ModelFunction::constant(3.0, kUnit);
    CHECK(rel_err(rl_integral_right(c3, 1.0, 0.25).value, 3.0 * 0.75) <=
          1e-13);
}

TEST_CASE("rl integrals against Beta-integral closed forms") {
    // J_{0+}^0.5 of f(t)=t at x=1: Gamma(2)/Gamma(2.5)
    const ModelFunction t_fn =
        parse_function_spec("const:1;powb:c=-1,beta=1", kUnit);
    const double want = gamma_fn(2.0) / gamma_fn(2.5);
    FractionalEvaluation cf = rl_integral_left(t_fn, 0.5, 1.0);
    CHECK(cf.method == EvalMethod::ClosedForm);
    CHECK(rel_err(cf.value, want) <= 1e-12);
    FractionalEvaluation q = rl_integral_left(t_fn, 0.5, 1.0, kNoClosedForm);
    CHECK(std::abs(q.value - want) <= std::max(1e-6, 3.0 * q.err_estimate));

    // J_{1-}^0.5 of (1-t) at x=0: B(0.5, 2)/Gamma(0.5) = (4/3)/sqrt(pi)
    const ModelFunction lin = make_power_at_b(1.0, 1.0, kUnit);
    const double want_r = (4.0 / 3.0) / std::sqrt(3.14159265358979323846);
    cf = rl_integral_right(lin, 0.5, 0.0);
    CHECK(cf.method == EvalMethod::ClosedForm);
    CHECK(rel_err(cf.value, 0.75225277806367508) <= 1e-10);
    CHECK(rel_err(cf.value, want_r) <= 1e-12);
    q = rl_integral_right(lin, 0.5, 0.0, kNoClosedForm);
    CHECK(std::abs(q.value - want_r) <= std::max(1e-6, 3.0 * q.err_estimate));

    CHECK_THROWS_AS(rl_integral_left(lin, 0.5, 1.5), std::domain_error);
}

TEST_CASE("rl semigroup spot-check") {
    // J^0.5 (J^0.5 f) = J^1 f for f(t) = t; J^1 t (x) = x^2/2
    const ModelFunction t_fn =
        parse_function_spec("const:1;powb:c=-1,beta=1", kUnit);
    const ModelFunction inner = ModelFunction::opaque(
        {[&](double s) {
            return rl_integral_left(t_fn, 0.5, s, kNoClosedForm).value;
        }},
        kUnit);
    for (double x : {0.25, 0.5, 1.0}) {
        const double nested =
            rl_integral_left(inner, 0.5, x, OpOptions{256, true}).value;
        CHECK(std::abs(nested - x * x / 2.0) <= 1e-5);
    }
}

TEST_CASE("taylor reconstruction") {
    const FractionalSetup half = FractionalSetup::make(0.5);
    const ModelFunction c = ModelFunction::constant(2.0, kUnit);
    CHECK(taylor_reconstruct(c, half, 0.7).value ==
          doctest::Approx(2.0).epsilon(1e-12));

    const ModelFunction lin = make_power_at_b(1.0, 1.0, kUnit);
    FractionalEvaluation e = taylor_reconstruct(lin, half, 0.25);
    CHECK(std::abs(e.value - 0.75) <= std::max(1e-5, 5.0 * e.err_estimate));

    const ModelFunction sq = make_power_at_b(1.0, 2.0, kUnit);
    e = taylor_reconstruct(sq, FractionalSetup::make(1.5), 0.0);
    CHECK(std::abs(e.value - 1.0) <= std::max(1e-5, 5.0 * e.err_estimate));

    // at x = b the series alone reproduces f(b)
    CHECK(taylor_reconstruct(sq, FractionalSetup::make(1.5), 1.0).value ==
          0.0);
}

TEST_CASE("taylor residual over random corpora") {
    Rng rng(99);
    for (double alpha : {0.5, 1.5, 2.5}) {
        const FractionalSetup setup = FractionalSetup::make(alpha);
        const auto corpus = sample_corpus(setup, kUnit, 10, 23);
        for (const ModelFunction& f : corpus) {
            for (int i = 0; i < 16; ++i) {
                const double x = rng.uniform(0.0, 1.0);
                const FractionalEvaluation e = taylor_reconstruct(f, setup, x);
                CHECK(std::abs(e.value - f.eval(x)) <=
                      std::max(1e-5, 5.0 * e.err_estimate));
            }
        }
    }
}

TEST_CASE("rl_left_abs_at_b closed form vs quadrature") {
    Rng rng(404);
    for (int i = 0; i < 20; ++i) {
        const double s = rng.uniform(0.3, 4.0);
        const ModelFunction f =
            make_power_at_b(rng.uniform(0.1, 2.0), rng.uniform(0.5, 3.5),
                            kUnit)
                .plus(ModelFunction::constant(rng.uniform(0.0, 2.0), kUnit));
        const FractionalEvaluation cf = rl_left_abs_at_b(f, s);
        CHECK(cf.method == EvalMethod::ClosedForm);
        const FractionalEvaluation q =
            rl_left_abs_at_b(f, s, kNoClosedForm);
        CHECK(std::abs(q.value - cf.value) <=
              std::max(1e-6, 3.0 * q.err_estimate));
    }
}

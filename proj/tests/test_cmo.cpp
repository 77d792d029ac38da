#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cimeans/cmo.hpp"
#include "cimeans/errors.hpp"
#include "oracles.hpp"

using namespace cimeans;

namespace {

RadialProfile shifted(const RadialProfile& b, double c) {
    RadialProfile out = b;
    out.label = "shifted(" + b.label + ")";
    const RadialProfile base = b;
    out.eval_fn = [base, c](double t) { return base.eval(t) + c; };
    out.support = Interval{};
    out.strictly_positive = false;
    out.origin.reset();
    out.decay.reset();
    if (b.sup_bound) out.sup_bound = *b.sup_bound + std::fabs(c);
    return out;
}

} // namespace

TEST_CASE("ball averages match closed forms") {
    CHECK(ball_average(constant_profile(3.5), 1, 0.7) == doctest::Approx(3.5).epsilon(1e-9));
    CHECK(ball_average(constant_profile(-2.0), 3, 4.0) == doctest::Approx(-2.0).epsilon(1e-9));

    CHECK(ball_average(indicator_profile(0.0, 1.0), 1, 2.0) == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(ball_average(indicator_profile(0.0, 1.0), 2, 2.0) == doctest::Approx(0.25).epsilon(1e-9));
    CHECK(ball_average(indicator_profile(0.0, 1.0), 1, 0.5) == doctest::Approx(1.0).epsilon(1e-9));

    CHECK(ball_average(power_profile(1.0), 1, 1.0) == doctest::Approx(0.5).epsilon(1e-9));

    for (int n : {1, 2, 3}) {
        for (double R : {0.3, 1.0, 7.0}) {
            const double got = ball_average(bounded_oscillator(1.5, 0.4), n, R);
            const double want = oracle::sinlog_ball_average(n, R, 1.5, 0.4);
            CHECK(got == doctest::Approx(want).epsilon(1e-9));
        }
    }
}

TEST_CASE("ball average validates inputs") {
    CHECK_THROWS_AS(ball_average(constant_profile(1.0), 0, 1.0), InvalidParameterError);
    CHECK_THROWS_AS(ball_average(constant_profile(1.0), 1, 0.0), InvalidParameterError);
    CHECK_THROWS_AS(ball_average(constant_profile(1.0), 1, -2.0), InvalidParameterError);
}

TEST_CASE("single-radius oscillation matches the indicator oracle") {
    const RadialProfile ind = indicator_profile(0.0, 1.0);
    for (double p : {1.0, 2.0, 4.0}) {
        for (double R : {1.2, 2.0, 3.0, 10.0}) {
            const double got = oscillation(ind, 1, p, R);
            const double want = oracle::indicator_oscillation(1, p, R);
            CHECK(got == doctest::Approx(want).epsilon(1e-8));
        }
    }
    CHECK(oscillation(ind, 2, 1.0, 2.0) ==
          doctest::Approx(oracle::indicator_oscillation(2, 1.0, 2.0)).epsilon(1e-8));
    CHECK(oscillation(constant_profile(9.0), 1, 2.0, 5.0) == doctest::Approx(0.0));
}

TEST_CASE("indicator grid norm peaks at half ball mass") {
    const RadialProfile ind = indicator_profile(0.0, 1.0);

    OscillationEstimate est = cmo_p_norm(ind, 1.0, 1);
    CHECK(est.kind == BoundKind::LowerBound);
    CHECK(std::fabs(est.value - 0.5) <= 1e-6);
    CHECK(std::fabs(est.argmax_radius - 2.0) <= 1e-3);

    est = cmo_p_norm(ind, 2.0, 1);
    CHECK(std::fabs(est.value - 0.5) <= 1e-6);
    CHECK(std::fabs(est.argmax_radius - 2.0) <= 1e-3);

    est = cmo_p_norm(ind, 1.0, 2);
    CHECK(std::fabs(est.value - 0.5) <= 1e-6);
    CHECK(std::fabs(est.argmax_radius - std::sqrt(2.0)) <= 1e-3);
}

TEST_CASE("constant symbols have zero oscillation both ways") {
    const RadialProfile c = constant_profile(7.0);
    CHECK(cmo_p_norm(c, 1.0, 1).value <= 1e-10);
    CHECK(cmo_p_norm(c, 4.0, 2).value <= 1e-10);
    CHECK(cmo_norm_upper(c, 1).value <= 1e-9);
    CHECK(cmo_norm_upper(zero_profile(), 1).value <= 1e-12);
}

TEST_CASE("sup-oscillation upper bounds") {
    const OscillationEstimate ind = cmo_norm_upper(indicator_profile(0.0, 1.0), 1);
    CHECK(ind.kind == BoundKind::UpperBound);
    CHECK(ind.value >= 0.99);
    CHECK(ind.value <= 1.0 + 1e-9);

    const OscillationEstimate osc = cmo_norm_upper(bounded_oscillator(1.0), 1);
    CHECK(osc.value >= 1.0);
    CHECK(osc.value <= 2.0);

    CHECK(cmo_norm_upper(bounded_oscillator(2.0), 1).value ==
          doctest::Approx(2.0 * osc.value).epsilon(1e-6));
}

TEST_CASE("upper bound needs a bounded symbol") {
    CHECK_THROWS_AS(cmo_norm_upper(power_profile(1.0), 1), UnboundedSymbolError);
    CHECK_THROWS_AS(cmo_norm_upper(power_profile(-0.5, 0.0, 1.0), 1), UnboundedSymbolError);
}

TEST_CASE("norm estimates are monotone in the oscillation order") {
    auto symbols = default_symbols();
    symbols.push_back(indicator_entry(0.0, 1.0));
    const double orders[] = {1.0, 2.0, 4.0, 8.0};
    for (const CorpusEntry& entry : symbols) {
        double prev = -1.0;
        for (double p : orders) {
            const double cur = cmo_p_norm(entry.profile, p, 1).value;
            CHECK(prev <= cur + 1e-6);
            prev = cur;
        }
    }
}

TEST_CASE("grid lower bounds sit below the sup upper bound") {
    for (const CorpusEntry& entry : default_symbols()) {
        const double upper = cmo_norm_upper(entry.profile, 1).value;
        for (double p : {1.0, 2.0, 4.0, 8.0}) {
            const double lower = cmo_p_norm(entry.profile, p, 1).value;
            CHECK(lower <= upper + 1e-9);
        }
    }
}

TEST_CASE("oscillation norms ignore constant shifts and scale with amplitude") {
    const RadialProfile b = bounded_oscillator(1.0, 0.3);
    const double base = cmo_p_norm(b, 2.0, 1).value;

    CHECK(cmo_p_norm(shifted(b, 4.0), 2.0, 1).value == doctest::Approx(base).epsilon(1e-8));
    CHECK(cmo_p_norm(shifted(b, -0.7), 2.0, 1).value == doctest::Approx(base).epsilon(1e-8));

    CHECK(cmo_p_norm(scale_profile(b, 3.0), 2.0, 1).value ==
          doctest::Approx(3.0 * base).epsilon(1e-8));
    CHECK(cmo_p_norm(scale_profile(b, -2.0), 2.0, 1).value ==
          doctest::Approx(2.0 * base).epsilon(1e-8));

    const double upper = cmo_norm_upper(b, 1).value;
    CHECK(cmo_norm_upper(shifted(b, 2.5), 1).value == doctest::Approx(upper).epsilon(1e-6));
}

TEST_CASE("estimator parameter validation") {
    const RadialProfile b = bounded_oscillator(1.0);
    CHECK_THROWS_AS(cmo_p_norm(b, 0.5, 1), InvalidParameterError);
    CHECK_THROWS_AS(cmo_p_norm(b, 1.0, 0), InvalidParameterError);
    CHECK_THROWS_AS(cmo_p_norm(b, 1.0, 1, RadiusRange{0.0, 1.0}), InvalidParameterError);
    CHECK_THROWS_AS(cmo_p_norm(b, 1.0, 1, RadiusRange{2.0, 1.0}), InvalidParameterError);
    CHECK_THROWS_AS(cmo_p_norm(b, 1.0, 1, RadiusRange{1.0, 2.0}, 1), InvalidParameterError);
    CHECK_THROWS_AS(oscillation(b, 1, 0.9, 1.0), InvalidParameterError);
}

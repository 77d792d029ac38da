#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cimeans/errors.hpp"
#include "cimeans/profiles.hpp"

#include "oracles.hpp"

#include <cmath>
#include <set>

using namespace cimeans;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("labels round-trip through the parser") {
    for (const auto& e : default_corpus()) {
        CorpusEntry back = parse_label(e.profile.label);
        CHECK(back.profile.label == e.profile.label);
        for (double t : {0.25, 0.9, 1.3, 2.5, 10.0})
            CHECK(back.profile.eval(t) == doctest::Approx(e.profile.eval(t)).epsilon(1e-15));
    }
    CHECK(parse_label("zero").profile.label == "zero");
    CHECK(parse_label("const:c=2").profile.eval(5.0) == 2.0);
}

TEST_CASE("parser rejects malformed labels") {
    CHECK_THROWS_AS(parse_label("gaussian"), InvalidParameterError);
    CHECK_THROWS_AS(parse_label("power:beta=abc"), InvalidParameterError);
    CHECK_THROWS_AS(parse_label("power:width=1"), InvalidParameterError);
    CHECK_THROWS_AS(parse_label("sinlog:amplitude"), InvalidParameterError);
    CHECK_THROWS_AS(parse_label(""), InvalidParameterError);
}

TEST_CASE("power closed-form mean matches the direct formula") {
    CorpusEntry e = power_entry(1.0);
    for (int n : {1, 2, 3})
        for (double r : {-1.0, 0.5, 1.0, 2.0, 3.0})
            for (double alpha : {0.5, 1.0, 2.0})
                for (double R : {0.5, 1.0, 5.0}) {
                    MeanQuery q{n, r, alpha, R, false};
                    if (n * alpha + r <= 0.0) {
                        CHECK_FALSE(e.closed_form_mean(q).has_value());
                        continue;
                    }
                    auto v = e.closed_form_mean(q);
                    REQUIRE(v.has_value());
                    CHECK(*v == doctest::Approx(oracle::power_central_mean(n, r, alpha, 1.0, R))
                                    .epsilon(1e-14));
                }
}

TEST_CASE("power closed-form companion mean matches the direct formula") {
    CorpusEntry e = power_entry(-2.0);
    for (int n : {1, 2, 3})
        for (double r : {0.5, 1.0, 2.0})
            for (double alpha : {0.25, 0.5, 1.5}) {
                MeanQuery q{n, r, alpha, 2.0, true};
                const double p = n * alpha - 2.0 * r;
                auto v = e.closed_form_mean(q);
                if (p >= 0.0) {
                    CHECK_FALSE(v.has_value());
                } else {
                    REQUIRE(v.has_value());
                    CHECK(*v == doctest::Approx(oracle::power_companion_mean(n, r, alpha, -2.0, 2.0))
                                    .epsilon(1e-14));
                }
            }
}

TEST_CASE("truncated power means reduce to segment integrals") {
    CorpusEntry e = power_entry(1.0, 0.0, 1.0);
    MeanQuery q{1, 2.0, 1.0, 5.0, false};
    auto v = e.closed_form_mean(q);
    REQUIRE(v.has_value());
    // n R^{-n a} * seg(0,1,3) = (1/5)(1/3); mean is its square root
    CHECK(*v == doctest::Approx(std::sqrt(1.0 / 15.0)).epsilon(1e-14));

    // support entirely inside the ball complement boundary: zero mean
    CorpusEntry shell = indicator_entry(1.0, 2.0);
    MeanQuery inside{1, 2.0, 1.0, 0.5, false};
    CHECK(*shell.closed_form_mean(inside) == 0.0);
    // negative order needs the profile positive on the whole ball
    MeanQuery neg{1, -1.0, 2.0, 0.5, false};
    CHECK_FALSE(shell.closed_form_mean(neg).has_value());
}

TEST_CASE("constant closed forms follow the two-parameter rule") {
    CorpusEntry e = constant_entry(2.0);
    MeanQuery central{1, 2.0, 4.0, 1.0, false};
    CHECK(*e.closed_form_mean(central) == doctest::Approx(2.0 * std::pow(4.0, -0.5)).epsilon(1e-15));
    MeanQuery comp{1, 2.0, -4.0, 1.0, true};
    CHECK(*e.closed_form_mean(comp) == doctest::Approx(2.0 * std::pow(4.0, -0.5)).epsilon(1e-15));
    MeanQuery bad{1, 2.0, 0.5, 1.0, true}; // companion with positive weight diverges
    CHECK_FALSE(e.closed_form_mean(bad).has_value());
}

TEST_CASE("weighted-norm closed form and its validity region") {
    CorpusEntry e = power_entry(1.0, 0.0, 1.0);
    NormQuery q{2, 2.0, 0.5};
    auto v = e.closed_form_weighted_norm(q);
    REQUIRE(v.has_value());
    const double p = 2 * 0.5 + 1.0 * 2.0; // = 3
    const double omega = M_PI;            // unit disc
    CHECK(*v == doctest::Approx(std::sqrt(2.0 * std::pow(omega, 0.5) *
                                          oracle::power_seg(0.0, 1.0, p)))
                    .epsilon(1e-14));

    CorpusEntry full = power_entry(1.0);
    CHECK_FALSE(full.closed_form_weighted_norm(q).has_value()); // diverges at infinity
}

TEST_CASE("ball averages: indicator fraction and oscillator closed form") {
    CorpusEntry ind = indicator_entry(0.0, 1.0);
    CHECK(*ind.closed_form_ball_average(1, 2.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(*ind.closed_form_ball_average(2, 2.0) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(*ind.closed_form_ball_average(1, 0.5) == doctest::Approx(1.0).epsilon(1e-15));

    CorpusEntry osc = oscillator_entry(1.5, 0.7);
    for (int n : {1, 2, 3})
        for (double R : {0.3, 1.0, 4.0}) {
            const double ref = oracle::simpson_log(
                [&](double t) { return std::pow(t, n - 1) * osc.profile.eval(t); }, 1e-12, R,
                200000) * n * std::pow(R, -n);
            CHECK(*osc.closed_form_ball_average(n, R) == doctest::Approx(ref).epsilon(1e-7));
            CHECK(*osc.closed_form_ball_average(n, R) ==
                  doctest::Approx(oracle::sinlog_ball_average(n, R, 1.5, 0.7)).epsilon(1e-14));
        }
}

TEST_CASE("smoothstep ramps continuously between 0 and 1") {
    RadialProfile p = smoothstep_profile(0.5, 2.0, 0.25);
    CHECK(p.eval(0.4) == 0.0);
    CHECK(p.eval(0.5) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(p.eval(0.625) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(p.eval(0.75) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(p.eval(1.5) == 1.0);
    CHECK(p.eval(1.875) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(p.eval(2.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(p.eval(2.3) == 0.0);
    for (double t = 0.4; t < 2.2; t += 0.01) {
        CHECK(p.eval(t) >= 0.0);
        CHECK(p.eval(t) <= 1.0);
    }
    CHECK_THROWS_AS(smoothstep_profile(1.0, 1.5, 0.4), InvalidParameterError);
}

TEST_CASE("scaling multiplies values and metadata bounds") {
    RadialProfile base = bounded_oscillator(1.0, 0.0);
    RadialProfile s = scale_profile(base, -3.0);
    CHECK(s.eval(2.0) == doctest::Approx(-3.0 * base.eval(2.0)).epsilon(1e-15));
    CHECK(*s.sup_bound == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(scale_profile(base, 0.0).label == "zero");
}

TEST_CASE("dilation rescales support and fixes powers up to a factor") {
    RadialProfile ind = indicator_profile(1.0, 2.0);
    RadialProfile d = dilate_profile(ind, 4.0);
    CHECK(d.support.lo == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(d.support.hi == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(d.eval(0.3) == 1.0);
    CHECK(d.eval(0.6) == 0.0);

    RadialProfile pw = power_profile(1.5);
    RadialProfile pd = dilate_profile(pw, 3.0);
    for (double t : {0.2, 1.0, 7.0})
        CHECK(pd.eval(t) == doctest::Approx(std::pow(3.0, 1.5) * pw.eval(t)).epsilon(1e-13));
}

TEST_CASE("default corpus carries coherent metadata") {
    std::set<std::string> labels;
    for (const auto& e : default_corpus()) {
        CHECK(labels.insert(e.profile.label).second);
        if (e.profile.support.lo > 0.0)
            CHECK_FALSE(e.profile.eval(0.5 * e.profile.support.lo) != 0.0);
    }
    for (const auto& s : default_symbols()) {
        REQUIRE(s.profile.sup_bound.has_value());
        for (double t : {0.01, 0.6, 1.7, 42.0})
            CHECK(std::fabs(s.profile.eval(t)) <= *s.profile.sup_bound + 1e-15);
    }
}

TEST_CASE("indicator is the flat power with tighter support metadata") {
    RadialProfile p = indicator_profile(0.0, 1.0);
    CHECK(p.eval(0.5) == 1.0);
    CHECK(p.eval(1.5) == 0.0);
    CHECK(p.locally_bounded);
    CHECK(*p.sup_bound == 1.0);
    REQUIRE(p.origin.has_value());
    CHECK(p.origin->exact);
    CHECK(p.origin->exponent == 0.0);
    CHECK_THROWS_AS(indicator_profile(0.0, kInf), InvalidParameterError);
}

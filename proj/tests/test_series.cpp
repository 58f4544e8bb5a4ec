#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "supercong/series.hpp"

using namespace supercong;

namespace {

Real diff_to_target(const SeriesSpec& spec, const SeriesValue& v) {
    return abs(v.value - target_value(spec.target, v.working_digits));
}

}  // namespace

TEST(PrecisionScope, RestoresPrevious) {
    const unsigned before = Real::default_precision();
    {
        PrecisionScope outer(80);
        EXPECT_EQ(Real::default_precision(), 80u);
        {
            PrecisionScope inner(120);
            EXPECT_EQ(Real::default_precision(), 120u);
        }
        EXPECT_EQ(Real::default_precision(), 80u);
    }
    EXPECT_EQ(Real::default_precision(), before);
}

TEST(EvalSeries, EightOverPiSquared) {
    const auto& spec = find_series("eight-over-pi2");
    const auto v = eval_series(spec, 30);
    PrecisionScope scope(v.working_digits);
    EXPECT_EQ(v.method, SeriesMethod::Direct);
    EXPECT_LT(diff_to_target(spec, v), Real("1e-25"));
    EXPECT_EQ(v.value.re.str(17).substr(0, 18), "0.8105694691387021");
    EXPECT_EQ(v.value.im, 0);
}

TEST(EvalSeries, OneOverPiSquaredNormalisation) {
    const auto& spec = find_series("one-over-pi2");
    const auto v = eval_series(spec, 40);
    PrecisionScope scope(v.working_digits);
    EXPECT_LT(diff_to_target(spec, v), Real("1e-38"));
}

TEST(EvalSeries, UnitCircleSqrt7OverPi) {
    const auto& spec = find_series("sqrt7-over-pi");
    // |z| = 1 exactly: 47^2 + 7 * 45^2 = 128^2.
    EXPECT_EQ(47 * 47 + 7 * 45 * 45, 128 * 128);
    const auto v = eval_series(spec, 20);
    PrecisionScope scope(v.working_digits);
    EXPECT_EQ(v.method, SeriesMethod::Wynn);
    EXPECT_LE(v.terms, 400u);
    EXPECT_LT(diff_to_target(spec, v), Real("1e-6"));
    EXPECT_LT(abs(v.value.im), Real("1e-6"));
}

TEST(EvalSeries, ZeroArgumentGivesConstantWeight) {
    SeriesSpec spec = find_series("one-over-pi2");
    spec.z = QuadNumber{BigRational(0), BigRational(0), -1};
    const auto v = eval_series(spec, 20);
    PrecisionScope scope(v.working_digits);
    EXPECT_EQ(v.value.re, Real(1) / 8);
    EXPECT_EQ(v.terms, 1u);
}

TEST(EvalSeries, RejectsDivergentArgument) {
    SeriesSpec spec = find_series("one-over-pi2");
    spec.z = QuadNumber{make_rational(4), BigRational(0), -1};
    EXPECT_THROW(eval_series(spec, 20), std::invalid_argument);
}

TEST(EvalSeries, ErrorBoundIsSound) {
    for (const char* id : {"eight-over-pi2", "sqrt7-over-pi"}) {
        const auto& spec = find_series(id);
        const auto lo = eval_series(spec, 20);
        const auto hi = eval_series(spec, 40);
        PrecisionScope scope(100);
        EXPECT_LT(abs(lo.value - hi.value), lo.error_bound) << id;
        EXPECT_LT(diff_to_target(spec, lo), lo.error_bound) << id;
    }
}

TEST(Wynn, AcceleratesAlternatingGeometricSeries) {
    PrecisionScope scope(50);
    std::vector<Complex> sums;
    Complex s{Real(0), Real(0)};
    Real term = 1;
    for (int n = 0; n < 30; ++n) {
        s = s + Complex{term, Real(0)};
        sums.push_back(s);
        term *= Real(-0.95);
    }
    const auto w = wynn_epsilon(sums);
    EXPECT_LT(abs(w.estimate - Complex{Real(1) / Real(1.95), Real(0)}), Real("1e-30"));
    EXPECT_THROW(wynn_epsilon({}), std::invalid_argument);
}

TEST(HypergeometricPfq, ElementaryCase) {
    PrecisionScope scope(40);
    // 1F0(1/2;;w) = (1-w)^(-1/2)
    const Real w("0.3");
    EXPECT_LT(abs(hypergeometric_pfq({Frac(1, 2)}, {}, w, 30) - 1 / sqrt(1 - w)), Real("1e-29"));
}

TEST(QuadraticTransform, AgreesOnSampleArguments) {
    for (double z : {-0.1, -0.3, -0.5, -0.7, -0.9}) {
        const auto r = quadratic_transform_check(z);
        EXPECT_TRUE(r.agree) << z;
        PrecisionScope scope(40);
        EXPECT_LT(r.difference, Real("1e-12")) << z;
    }
}

TEST(QuadraticTransform, NearZeroBothSidesApproachOne) {
    const auto r = quadratic_transform_check(-1e-9);
    PrecisionScope scope(40);
    EXPECT_LT(abs(r.lhs - 1), Real("1e-8"));
    EXPECT_LT(abs(r.rhs - 1), Real("1e-8"));
    EXPECT_THROW(quadratic_transform_check(0.5), std::invalid_argument);
}

TEST(Duality, RootFivePoint) {
    const DualityPoint src{std::sqrt(5.0), 1, 0.25, 0.125, 1, 2.5};
    EXPECT_TRUE(normalized(src));
    const auto dst = duality_map(src);
    EXPECT_NEAR(dst.tau, std::sqrt(5.0) / 2, 1e-12);
    EXPECT_NEAR(dst.k, 0, 1e-12);
    EXPECT_NEAR(dst.z, 4, 1e-12);
    EXPECT_NEAR(dst.a, 0.25, 1e-12);
    EXPECT_NEAR(dst.b, 1.5, 1e-12);
    EXPECT_NEAR(dst.c, 2.5, 1e-12);
    EXPECT_TRUE(normalized(dst));
    EXPECT_NEAR((src.k + 1) * (dst.k + 1) + 8, 4 * src.tau * dst.tau, 1e-12);
}

TEST(Duality, ExactCoefficients) {
    const auto d = duality_map_exact(make_rational(5), make_rational(1), make_rational(1, 2), make_rational(1, 8),
                                     make_rational(1), make_rational(5, 2));
    EXPECT_EQ(d.k, 0);
    EXPECT_EQ(d.tau_ratio, make_rational(1, 2));
    EXPECT_EQ(d.z, 4);
    EXPECT_EQ(d.a, make_rational(1, 4));
    EXPECT_EQ(d.b, make_rational(3, 2));
    EXPECT_EQ(d.c, make_rational(5, 2));
    // 8 (a + b n + c n^2) = 1 + 8n + 20n^2 and 4 (a2 + b2 n + c2 n^2) = 1 + 6n + 10n^2.
    for (long n = 0; n < 5; ++n) {
        EXPECT_EQ(8 * (make_rational(1, 8) + n + make_rational(5, 2) * n * n), BigRational(20 * n * n + 8 * n + 1));
        EXPECT_EQ(4 * (d.a + d.b * n + d.c * n * n), BigRational(10 * n * n + 6 * n + 1));
    }
}

TEST(Duality, InvolutionOnRandomPoints) {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(0.1, 3.0);
    int tested = 0;
    while (tested < 200) {
        DualityPoint p;
        p.k = u(rng) - 1;
        p.tau = (p.k + 1) / 2 + u(rng);  // keeps 4 tau^2 > (k+1)^2
        p.z = u(rng);
        p.c = p.tau * std::sqrt(1 + p.z);
        p.b = u(rng);
        p.a = u(rng);
        const auto back = duality_map(duality_map(p));
        EXPECT_NEAR(back.tau, p.tau, 1e-12 * std::max(1.0, p.tau));
        EXPECT_NEAR(back.k, p.k, 1e-12 * std::max(1.0, std::abs(p.k)) * 10);
        EXPECT_NEAR(back.z, p.z, 1e-12);
        EXPECT_NEAR(back.a, p.a, 1e-11);
        EXPECT_NEAR(back.b, p.b, 1e-11);
        EXPECT_NEAR(back.c, p.c, 1e-11);
        EXPECT_TRUE(normalized(duality_map(p), 1e-10));
        ++tested;
    }
}

TEST(Duality, SingularPoint) {
    const DualityPoint p{1.0, 1.0, 0.5, 0, 0, std::sqrt(1.5)};
    EXPECT_THROW(duality_map(p), SingularDuality);
    EXPECT_THROW(duality_map_exact(make_rational(1), make_rational(1), make_rational(1), 0, 0, 0), SingularDuality);
}

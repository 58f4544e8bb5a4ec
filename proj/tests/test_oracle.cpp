#include <gtest/gtest.h>

#include <random>

#include "supercong/oracle.hpp"

using namespace supercong;

TEST(Pochhammer, SpotValues) {
    EXPECT_EQ(pochhammer(make_rational(1, 2), 0), 1);
    EXPECT_EQ(pochhammer(make_rational(1, 2), 3), make_rational(15, 8));
    EXPECT_EQ(pochhammer(make_rational(1), 5), 120);
    EXPECT_EQ(pochhammer(make_rational(-2), 4), 0);
    EXPECT_EQ(pochhammer(make_rational(-1, 2), 2), make_rational(-1, 4));
    EXPECT_THROW(pochhammer(make_rational(1), -1), std::invalid_argument);
}

TEST(Pochhammer, SplitsOverConsecutiveBlocks) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        const BigRational a = make_rational(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 12));
        const long m = rng() % 21, n = rng() % 21;
        EXPECT_EQ(pochhammer(a, m + n), pochhammer(a, m) * pochhammer(a + m, n));
    }
}

TEST(Pochhammer, CentralBinomialBridge) {
    const BigRational half = make_rational(1, 2);
    for (long n = 0; n <= 60; ++n)
        EXPECT_EQ(pochhammer(half, n) / pochhammer(make_rational(1), n) * pow(make_rational(4), n),
                  BigRational(binomial(2 * n, n)))
            << n;
}

TEST(Pow, NegativeExponents) {
    EXPECT_EQ(pow(make_rational(2, 3), -2), make_rational(9, 4));
    EXPECT_EQ(pow(make_rational(-2, 3), 3), make_rational(-8, 27));
    EXPECT_EQ(pow(make_rational(0), 0), 1);
    EXPECT_THROW(pow(make_rational(0), -1), DivByZero);
}

TEST(ReduceMod, SpotValues) {
    EXPECT_EQ(reduce_mod(make_rational(285, 32), PadicCtx(5, 3)).residue(), 5u);
    EXPECT_EQ(reduce_mod(make_rational(9135, 1024), PadicCtx(3, 3)).residue(), 9u);
    EXPECT_EQ(reduce_mod(make_rational(-1), PadicCtx(7, 2)).residue(), 48u);
    EXPECT_THROW(reduce_mod(make_rational(1, 5), PadicCtx(5, 1)), NotPIntegral);
}

TEST(ReduceMod, AgreesWithMachineWordPath) {
    std::mt19937_64 rng(17);
    for (std::uint32_t p : {3u, 7u, 101u, 99991u}) {
        const PadicCtx ctx(p, 3);
        for (int t = 0; t < 200; ++t) {
            const std::int64_t num = static_cast<std::int64_t>(rng() % 2000001) - 1000000;
            std::int64_t den = 1 + rng() % 100000;
            if (den % p == 0) ++den;
            EXPECT_EQ(reduce_mod(make_rational(num, den), ctx), from_rational(num, den, ctx));
        }
    }
}

TEST(SumExact, SpotValues) {
    EXPECT_EQ(sum_exact(find_congruence("J1"), 5), make_rational(285, 32));
    EXPECT_EQ(sum_exact(find_congruence("J1"), 3), 3);
    EXPECT_EQ(sum_exact(find_congruence("zu5"), 3), make_rational(9135, 1024));
    EXPECT_EQ(sum_exact(find_congruence("5F4-zu4"), 3), make_rational(12006225, 1048576));
}

TEST(FermatQuotientExact, Value) {
    EXPECT_EQ(fermat_quotient_exact(make_rational(2), 5), 3);
    EXPECT_EQ(fermat_quotient_exact(make_rational(1, 2), 3), make_rational(-1, 4));
}

TEST(Staver, SmallCases) {
    const auto r1 = staver_identity_check(1);
    EXPECT_TRUE(r1.holds);
    EXPECT_EQ(r1.lhs, 2);
    const auto r2 = staver_identity_check(2);
    EXPECT_TRUE(r2.holds);
    EXPECT_EQ(r2.lhs, 5);
    EXPECT_THROW(staver_identity_check(0), std::invalid_argument);
}

TEST(Staver, UpToFifty) {
    for (long n = 1; n <= 50; ++n) EXPECT_TRUE(staver_identity_check(n).holds) << n;
}

TEST(AlmkvistGranville, UpToTwelve) {
    const auto r1 = ag_identity_check(1);
    EXPECT_TRUE(r1.holds);
    EXPECT_EQ(r1.lhs, make_rational(2, 5));
    for (long n = 1; n <= 12; ++n) {
        const auto r = ag_identity_check(n);
        EXPECT_TRUE(r.holds) << n;
        EXPECT_EQ(r.rhs, make_rational(2, 5 * n * n));
    }
}

TEST(ChuVandermonde, OddIntegers) {
    const auto r5 = chu_vandermonde_check(5);
    EXPECT_TRUE(r5.holds);
    EXPECT_EQ(r5.lhs, make_rational(1, 3));
    EXPECT_TRUE(chu_vandermonde_check(3).holds);
    for (long m = 3; m <= 99; m += 2) EXPECT_TRUE(chu_vandermonde_check(m).holds) << m;
    EXPECT_THROW(chu_vandermonde_check(4), std::invalid_argument);
}

TEST(Conversions, RoundTripWideIntegers) {
    const u128 big = (static_cast<u128>(1) << 100) + 12345;
    EXPECT_EQ(to_u128(to_bigint(big)), big);
    EXPECT_EQ(to_string(big), to_bigint(big).get_str());
    EXPECT_THROW(to_u128(BigInt(-1)), std::out_of_range);
}

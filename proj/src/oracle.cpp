#include "supercong/oracle.hpp"

#include <stdexcept>

namespace supercong {

BigRational make_rational(const Frac& x) { return make_rational(x.num, x.den); }

BigRational make_rational(long num, long den) {
    if (den == 0) throw DivByZero("make_rational: zero denominator");
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

BigInt to_bigint(u128 x) {
    BigInt hi(static_cast<unsigned long>(x >> 64));
    BigInt lo(static_cast<unsigned long>(static_cast<std::uint64_t>(x)));
    return (hi << 64) + lo;
}

u128 to_u128(const BigInt& x) {
    if (sgn(x) < 0 || mpz_sizeinbase(x.get_mpz_t(), 2) > 128)
        throw std::out_of_range("to_u128: value outside [0, 2^128)");
    const BigInt mask = (BigInt(1) << 64) - 1;
    const BigInt lo = x & mask;
    const BigInt hi = x >> 64;
    return (static_cast<u128>(hi.get_ui()) << 64) | static_cast<u128>(lo.get_ui());
}

std::string to_string(const BigRational& x) { return x.get_str(); }

BigRational pochhammer(const BigRational& a, long n) {
    if (n < 0) throw std::invalid_argument("pochhammer: negative count");
    BigRational r(1);
    for (long k = 0; k < n; ++k) r *= a + k;
    return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigRational pow(const BigRational& x, long e) {
    if (e < 0) {
        if (sgn(x) == 0) throw DivByZero("pow: zero to a negative power");
        return pow(BigRational(1) / x, -e);
    }
    BigRational r;
    mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

PadicInt reduce_mod(const BigRational& x, const PadicCtx& ctx) {
    const BigInt pk = to_bigint(ctx.pk());
    const BigInt p(static_cast<unsigned long>(ctx.p()));
    if (mpz_divisible_p(x.get_den_mpz_t(), p.get_mpz_t()))
        throw NotPIntegral("reduce_mod: p divides the denominator of " + x.get_str());
    BigInt num = x.get_num() % pk;
    if (sgn(num) < 0) num += pk;
    BigInt den = x.get_den() % pk;
    return PadicInt::from_residue(ctx, to_u128(num)) * inv(PadicInt::from_residue(ctx, to_u128(den)));
}

BigRational sum_exact(const CongruenceSpec& spec, std::uint32_t p) {
    const long upper = spec.upper_limit(p);
    std::vector<BigRational> a, b;
    for (const auto& f : spec.num_params) a.push_back(make_rational(f));
    for (const auto& f : spec.den_params) b.push_back(make_rational(f));
    const BigRational z = make_rational(spec.z);

    BigRational term(1), sum(0);
    for (long n = 0; n <= upper; ++n) {
        sum += term * spec.weight_at(n);
        for (const auto& ai : a) term *= ai + n;
        for (const auto& bj : b) term /= bj + n;
        term *= z;
    }
    return sum;
}

BigRational fermat_quotient_exact(const BigRational& x, std::uint32_t p) {
    return (pow(x, static_cast<long>(p) - 1) - 1) / static_cast<long>(p);
}

IdentityReport staver_identity_check(long N) {
    if (N < 1) throw std::invalid_argument("staver_identity_check: N >= 1 required");
    IdentityReport r;
    for (long n = 1; n <= N; ++n) {
        BigRational term(binomial(2 * n, n), BigInt(n));
        term.canonicalize();
        r.lhs += term;
    }
    BigRational inner;
    for (long n = 1; n <= N; ++n) {
        const BigInt c = binomial(N, n);
        BigRational term(BigInt(1), BigInt(n * n) * c * c);
        inner += term;
    }
    r.rhs = make_rational(N + 1, 3) * BigRational(binomial(2 * N + 1, N)) * inner;
    r.holds = r.lhs == r.rhs;
    return r;
}

IdentityReport ag_identity_check(long N) {
    if (N < 1) throw std::invalid_argument("ag_identity_check: N >= 1 required");
    const BigInt n4 = BigInt(N) * N * N * N;
    IdentityReport r;
    BigRational prod(1);
    for (long n = 1; n <= N; ++n) {
        const BigInt k4 = BigInt(n) * n * n * n;
        BigRational term(BigInt(binomial(2 * n, n) * n * n), BigInt(4 * n4 + k4));
        term.canonicalize();
        r.lhs += term * prod;
        BigRational factor(BigInt(n4 - k4), BigInt(4 * n4 + k4));
        factor.canonicalize();
        prod *= factor;
    }
    r.rhs = make_rational(2, 5 * N * N);
    r.holds = r.lhs == r.rhs;
    return r;
}

IdentityReport chu_vandermonde_check(long m) {
    if (m < 3 || m % 2 == 0) throw std::invalid_argument("chu_vandermonde_check: odd m >= 3 required");
    const long half = (m - 1) / 2;
    const BigRational base = make_rational(1 - m, 2);
    IdentityReport r;
    for (long n = 0; n <= half - 1; ++n)
        r.lhs += pochhammer(base, n) / (pochhammer(BigRational(1), n) * (2 * n + 1));
    const BigRational sign = (half % 2 == 0) ? BigRational(1) : BigRational(-1);
    r.rhs = -sign / m + pochhammer(BigRational(1), half) / (m * pochhammer(make_rational(1, 2), half));
    r.holds = r.lhs == r.rhs;
    return r;
}

}  // namespace supercong

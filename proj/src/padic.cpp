#include "supercong/padic.hpp"

#include <algorithm>
#include <bit>

#include "supercong/primes.hpp"

namespace supercong {

namespace {

unsigned bit_width128(u128 x) {
    const auto hi = static_cast<std::uint64_t>(x >> 64);
    if (hi != 0) return 64 + static_cast<unsigned>(std::bit_width(hi));
    return static_cast<unsigned>(std::bit_width(static_cast<std::uint64_t>(x)));
}

}  // namespace

std::string to_string(u128 x) {
    if (x == 0) return "0";
    std::string s;
    while (x != 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(x % 10)));
        x /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

std::string to_string(i128 x) {
    if (x < 0) return "-" + to_string(static_cast<u128>(-x));
    return to_string(static_cast<u128>(x));
}

PadicCtx::PadicCtx(std::uint32_t p, unsigned k) : p_(p), k_(k), pk_(1), chunk_bits_(0) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("PadicCtx: p must be an odd prime");
    if (k < 1 || k > kMaxExponent) throw std::invalid_argument("PadicCtx: k must lie in 1..5");
    for (unsigned i = 0; i < k; ++i) pk_ *= p;
    const unsigned bits = bit_width128(pk_);
    if (bits > 100) throw std::invalid_argument("PadicCtx: p^k exceeds 2^100");
    if (bits > 64) chunk_bits_ = 127 - bits;
}

u128 PadicCtx::power(unsigned e) const {
    if (e > k_) throw std::out_of_range("PadicCtx::power: exponent above k");
    u128 r = 1;
    for (unsigned i = 0; i < e; ++i) r *= p_;
    return r;
}

u128 PadicCtx::reduce(i128 x) const noexcept {
    const auto m = static_cast<i128>(pk_);
    i128 r = x % m;
    if (r < 0) r += m;
    return static_cast<u128>(r);
}

u128 PadicCtx::add(u128 a, u128 b) const noexcept {
    const u128 s = a + b;
    return s >= pk_ ? s - pk_ : s;
}

u128 PadicCtx::sub(u128 a, u128 b) const noexcept { return a >= b ? a - b : a + (pk_ - b); }

u128 PadicCtx::mul(u128 a, u128 b) const noexcept {
    if (chunk_bits_ == 0) {
        return (static_cast<u128>(static_cast<std::uint64_t>(a)) * static_cast<std::uint64_t>(b)) %
               pk_;
    }
    // Horner over chunks of b: r*2^c + a*b_i stays below 2^128 because
    // both a and r are below 2^(127-c).
    const unsigned c = chunk_bits_;
    const u128 mask = (static_cast<u128>(1) << c) - 1;
    const unsigned nbits = bit_width128(b);
    const unsigned nchunks = (nbits + c - 1) / c;
    u128 r = 0;
    for (unsigned i = nchunks; i-- > 0;) {
        const u128 chunk = (b >> (i * c)) & mask;
        r = ((r << c) + a * chunk) % pk_;
    }
    return r;
}

u128 PadicCtx::pow(u128 base, std::uint64_t e) const noexcept {
    u128 result = 1 % pk_;
    base %= pk_;
    while (e != 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

u128 PadicCtx::inverse(u128 a) const {
    a %= pk_;
    if (a % p_ == 0) throw NotAUnit("residue " + to_string(a) + " is not a unit mod " + to_string(pk_));
    // Extended Euclid on signed 128-bit; all magnitudes stay below p^k.
    i128 old_r = static_cast<i128>(a), r = static_cast<i128>(pk_);
    i128 old_s = 1, s = 0;
    while (r != 0) {
        const i128 q = old_r / r;
        i128 t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    return reduce(old_s);
}

unsigned PadicInt::valuation() const noexcept {
    if (r_ == 0) return ctx_.k();
    unsigned v = 0;
    u128 x = r_;
    while (x % ctx_.p() == 0) {
        x /= ctx_.p();
        ++v;
    }
    return v;
}

namespace {

void require_same(const PadicCtx& a, const PadicCtx& b) {
    if (!(a == b)) throw std::invalid_argument("mixed p-adic contexts");
}

}  // namespace

PadicInt PadicInt::operator-() const { return from_residue(ctx_, ctx_.sub(0, r_)); }

PadicInt operator+(const PadicInt& a, const PadicInt& b) {
    require_same(a.ctx_, b.ctx_);
    return PadicInt::from_residue(a.ctx_, a.ctx_.add(a.r_, b.r_));
}

PadicInt operator-(const PadicInt& a, const PadicInt& b) {
    require_same(a.ctx_, b.ctx_);
    return PadicInt::from_residue(a.ctx_, a.ctx_.sub(a.r_, b.r_));
}

PadicInt operator*(const PadicInt& a, const PadicInt& b) {
    require_same(a.ctx_, b.ctx_);
    return PadicInt::from_residue(a.ctx_, a.ctx_.mul(a.r_, b.r_));
}

PadicInt inv(const PadicInt& a) { return PadicInt::from_residue(a.ctx(), a.ctx().inverse(a.residue())); }

PadicInt pow(const PadicInt& a, std::uint64_t e) {
    return PadicInt::from_residue(a.ctx(), a.ctx().pow(a.residue(), e));
}

PadicInt from_rational(std::int64_t num, std::int64_t den, const PadicCtx& ctx) {
    if (den == 0) throw DivByZero("from_rational: zero denominator");
    if (den % static_cast<std::int64_t>(ctx.p()) == 0)
        throw NotAUnit("from_rational: p divides the denominator " + std::to_string(den));
    return PadicInt(ctx, num) * inv(PadicInt(ctx, den));
}

int legendre(const Frac& a, std::uint32_t p) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("legendre: p must be an odd prime");
    if (a.den % static_cast<std::int64_t>(p) == 0)
        throw BadDenominator("legendre: p divides the denominator of " + a.str());
    const PadicCtx ctx(p, 1);
    const PadicInt x = from_rational(a, ctx);
    if (x.residue() == 0) return 0;
    return pow(x, (p - 1) / 2).residue() == 1 ? 1 : -1;
}

Fq fermat_quotient(const Frac& x, std::uint32_t p) {
    const PadicCtx ctx(p, 2);
    if (x.num % static_cast<std::int64_t>(p) == 0)
        throw NotAUnit("fermat_quotient: p divides the numerator of " + x.str());
    const PadicInt t = pow(from_rational(x, ctx), p - 1) - PadicInt(ctx, 1);
    // t is divisible by p by Fermat's little theorem.
    return Fq{p, static_cast<std::uint64_t>(t.residue() / p)};
}

ValUnit ValUnit::from_integer(const PadicCtx& ctx, i128 value) {
    if (value == 0) return zero(ctx);
    int v = 0;
    const auto p = static_cast<i128>(ctx.p());
    while (value % p == 0) {
        value /= p;
        ++v;
    }
    return ValUnit(ctx, v, ctx.reduce(value));
}

ValUnit ValUnit::from_parts(const PadicCtx& ctx, int v, u128 unit) {
    if (v == kInfinite) return zero(ctx);
    if (v < 0) throw NegativeValuation("ValUnit: negative valuation");
    unit %= ctx.pk();
    if (unit % ctx.p() == 0) throw NotAUnit("ValUnit: unit part divisible by p");
    return ValUnit(ctx, v, unit);
}

PadicInt ValUnit::to_residue() const {
    if (v_ == kInfinite || v_ >= static_cast<int>(ctx_.k())) return PadicInt(ctx_, 0);
    return PadicInt::from_residue(ctx_, ctx_.mul(ctx_.power(static_cast<unsigned>(v_)), u_));
}

ValUnit operator*(const ValUnit& a, const ValUnit& b) {
    require_same(a.ctx_, b.ctx_);
    if (a.is_zero() || b.is_zero()) return ValUnit::zero(a.ctx_);
    return ValUnit(a.ctx_, a.v_ + b.v_, a.ctx_.mul(a.u_, b.u_));
}

ValUnit operator/(const ValUnit& a, const ValUnit& b) {
    require_same(a.ctx_, b.ctx_);
    if (b.is_zero()) throw DivByZero("ValUnit: division by exact zero");
    if (a.is_zero()) return a;
    if (a.v_ < b.v_) throw NegativeValuation("ValUnit: quotient has negative valuation");
    return ValUnit(a.ctx_, a.v_ - b.v_, a.ctx_.mul(a.u_, a.ctx_.inverse(b.u_)));
}

PadicInt accumulate(const PadicInt& acc, const ValUnit& t) {
    require_same(acc.ctx(), t.ctx());
    return acc + t.to_residue();
}

}  // namespace supercong

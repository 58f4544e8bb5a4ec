#pragma once

// Residue arithmetic modulo p^k (k <= 5) with p-adic valuation tracking.
//
// Moduli reach 10^25 for p <= 10^5, so residues are held in unsigned
// __int128. Products use a single 128-bit multiply while p^k < 2^64 and a
// chunked multi-word reduction above that.

#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include "supercong/frac.hpp"

namespace supercong {

using u128 = unsigned __int128;
using i128 = __int128;

std::string to_string(u128 x);
std::string to_string(i128 x);

class ArithmeticError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};
class NotAUnit : public ArithmeticError {
public:
    using ArithmeticError::ArithmeticError;
};
class BadDenominator : public ArithmeticError {
public:
    using ArithmeticError::ArithmeticError;
};
class DivByZero : public ArithmeticError {
public:
    using ArithmeticError::ArithmeticError;
};
class NegativeValuation : public ArithmeticError {
public:
    using ArithmeticError::ArithmeticError;
};

/// The ring Z/p^kZ for an odd prime p and 1 <= k <= 5.
class PadicCtx {
public:
    static constexpr unsigned kMaxExponent = 5;

    PadicCtx(std::uint32_t p, unsigned k);

    std::uint32_t p() const noexcept { return p_; }
    unsigned k() const noexcept { return k_; }
    u128 pk() const noexcept { return pk_; }

    /// p^e for 0 <= e <= k.
    u128 power(unsigned e) const;

    u128 reduce(i128 x) const noexcept;
    u128 add(u128 a, u128 b) const noexcept;
    u128 sub(u128 a, u128 b) const noexcept;
    u128 mul(u128 a, u128 b) const noexcept;
    u128 pow(u128 base, std::uint64_t e) const noexcept;
    /// Inverse of a unit residue; throws NotAUnit otherwise.
    u128 inverse(u128 a) const;

    friend bool operator==(const PadicCtx& a, const PadicCtx& b) noexcept {
        return a.p_ == b.p_ && a.k_ == b.k_;
    }

private:
    std::uint32_t p_;
    unsigned k_;
    u128 pk_;
    unsigned chunk_bits_;  // 0 when p^k fits in 64 bits
};

class PadicInt {
public:
    PadicInt(const PadicCtx& ctx, i128 value) : ctx_(ctx), r_(ctx.reduce(value)) {}

    static PadicInt from_residue(const PadicCtx& ctx, u128 r) {
        PadicInt out(ctx, 0);
        out.r_ = r % ctx.pk();
        return out;
    }

    const PadicCtx& ctx() const noexcept { return ctx_; }
    u128 residue() const noexcept { return r_; }
    bool is_unit() const noexcept { return r_ % ctx_.p() != 0; }
    /// p-adic valuation of the residue, k for zero.
    unsigned valuation() const noexcept;

    PadicInt operator-() const;
    friend PadicInt operator+(const PadicInt& a, const PadicInt& b);
    friend PadicInt operator-(const PadicInt& a, const PadicInt& b);
    friend PadicInt operator*(const PadicInt& a, const PadicInt& b);
    friend bool operator==(const PadicInt& a, const PadicInt& b) noexcept {
        return a.ctx_ == b.ctx_ && a.r_ == b.r_;
    }

private:
    PadicCtx ctx_;
    u128 r_;
};

PadicInt inv(const PadicInt& a);
PadicInt pow(const PadicInt& a, std::uint64_t e);
PadicInt from_rational(std::int64_t num, std::int64_t den, const PadicCtx& ctx);
inline PadicInt from_rational(const Frac& x, const PadicCtx& ctx) {
    return from_rational(x.num, x.den, ctx);
}

/// Legendre symbol of a p-integral rational via Euler's criterion.
int legendre(const Frac& a, std::uint32_t p);

/// Fermat quotient q_p(x) = (x^(p-1) - 1)/p reduced mod p.
struct Fq {
    std::uint32_t p = 0;
    std::uint64_t value = 0;
    friend bool operator==(const Fq&, const Fq&) = default;
};

Fq fermat_quotient(const Frac& x, std::uint32_t p);

/// p^v * u with u a unit modulo p^k, or exact zero (v = infinity).
class ValUnit {
public:
    static constexpr int kInfinite = std::numeric_limits<int>::max();

    static ValUnit zero(const PadicCtx& ctx) { return ValUnit(ctx, kInfinite, 0); }
    static ValUnit one(const PadicCtx& ctx) { return ValUnit(ctx, 0, 1); }
    static ValUnit from_integer(const PadicCtx& ctx, i128 value);
    /// Unit part is validated (must be coprime to p) and reduced.
    static ValUnit from_parts(const PadicCtx& ctx, int v, u128 unit);

    const PadicCtx& ctx() const noexcept { return ctx_; }
    int valuation() const noexcept { return v_; }
    u128 unit() const noexcept { return u_; }
    bool is_zero() const noexcept { return v_ == kInfinite; }

    /// p^v * u mod p^k; zero whenever v >= k.
    PadicInt to_residue() const;

    friend ValUnit operator*(const ValUnit& a, const ValUnit& b);
    /// Throws DivByZero for an exact-zero divisor, NegativeValuation if the
    /// quotient would leave the p-adic integers.
    friend ValUnit operator/(const ValUnit& a, const ValUnit& b);
    friend bool operator==(const ValUnit&, const ValUnit&) = default;

private:
    ValUnit(const PadicCtx& ctx, int v, u128 u) : ctx_(ctx), v_(v), u_(u) {}

    PadicCtx ctx_;
    int v_;
    u128 u_;
};

inline PadicInt to_residue(const ValUnit& t) { return t.to_residue(); }

/// acc + residue(t).
PadicInt accumulate(const PadicInt& acc, const ValUnit& t);

}  // namespace supercong

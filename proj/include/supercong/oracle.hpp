#pragma once

// Arbitrary-precision rational ground truth. Every truncated sum and finite
// identity is evaluated exactly here, independently of the residue engine.

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "supercong/congruence_spec.hpp"
#include "supercong/frac.hpp"
#include "supercong/padic.hpp"

namespace supercong {

using BigInt = mpz_class;
/// gmpxx keeps results canonical: lowest terms, positive denominator.
using BigRational = mpq_class;

class NotPIntegral : public ArithmeticError {
public:
    using ArithmeticError::ArithmeticError;
};

BigRational make_rational(const Frac& x);
BigRational make_rational(long num, long den = 1);
BigInt to_bigint(u128 x);
/// x must lie in [0, 2^128).
u128 to_u128(const BigInt& x);
std::string to_string(const BigRational& x);

/// Rising factorial (a)_n = a (a+1) ... (a+n-1); (a)_0 = 1.
BigRational pochhammer(const BigRational& a, long n);
BigInt binomial(unsigned long n, unsigned long k);
BigRational pow(const BigRational& x, long e);

/// Reduction of a p-integral rational modulo p^k.
PadicInt reduce_mod(const BigRational& x, const PadicCtx& ctx);

/// Exact value of the truncated sum described by `spec` at prime p.
BigRational sum_exact(const CongruenceSpec& spec, std::uint32_t p);

/// q_p(x) = (x^(p-1) - 1)/p as an exact rational.
BigRational fermat_quotient_exact(const BigRational& x, std::uint32_t p);

struct IdentityReport {
    bool holds = false;
    BigRational lhs;
    BigRational rhs;
};

/// sum_{n=1}^N C(2n,n)/n = (N+1)/3 * C(2N+1,N) * sum_{n=1}^N 1/(n^2 C(N,n)^2)
IdentityReport staver_identity_check(long N);

/// sum_{n=1}^N C(2n,n) n^2/(4N^4+n^4) prod_{k<n} (N^4-k^4)/(4N^4+k^4) = 2/(5N^2)
IdentityReport ag_identity_check(long N);

/// Terminating 2F1 with one term missing, summed by Chu-Vandermonde, with the
/// odd integer m in place of a prime:
///   sum_{n=0}^{(m-3)/2} (1/2-m/2)_n / (n! (2n+1))
///     = -(-1)^((m-1)/2)/m + (1)_((m-1)/2) / (m (1/2)_((m-1)/2))
IdentityReport chu_vandermonde_check(long m);

}  // namespace supercong

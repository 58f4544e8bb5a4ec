#pragma once

// Exact verification of WZ pairs F(n,k), G(n,k) satisfying
//   F(n,k-1) - F(n,k) = G(n+1,k) - G(n,k)
// and of the boundary identities obtained by telescoping them.

#include <optional>
#include <string>
#include <string_view>

#include "supercong/oracle.hpp"

namespace supercong {

class UndefinedTerm : public ArithmeticError {
public:
    using ArithmeticError::ArithmeticError;
};

enum class WzPairId { Lemma3, J1, J2, J4 };

std::string_view to_string(WzPairId id);
/// Accepts "LEMMA3", "J1", "J2", "J4" (case-insensitive).
std::optional<WzPairId> parse_wz_pair(std::string_view name);

class WzPair {
public:
    /// F(n,k) = (1/2-k)_n/(1)_n * x^n/(1-x)^k, G(n,k) = -(3/2-k)_{n-1}/(1)_{n-1} * x^n/(1-x)^k
    static WzPair lemma3(const BigRational& x);
    static WzPair j1();
    static WzPair j2();
    static WzPair j4();
    static WzPair from_id(WzPairId id, const BigRational& x = BigRational(1, 3));

    WzPairId id() const { return id_; }
    const std::optional<BigRational>& x() const { return x_; }

    /// Defined for n, k >= 0; throws UndefinedTerm on a zero denominator.
    BigRational F(long n, long k) const;
    /// G(0,k) = 0: its expression carries (1)_{-1} in the denominator.
    BigRational G(long n, long k) const;

private:
    WzPair(WzPairId id, std::optional<BigRational> x) : id_(id), x_(std::move(x)) {}

    WzPairId id_;
    std::optional<BigRational> x_;
};

struct Counterexample {
    long n = 0;
    long k = 0;
    BigRational lhs;
    BigRational rhs;
    std::string note;
};

struct GridReport {
    WzPairId id = WzPairId::J1;
    long n_max = 0;
    long k_max = 0;
    std::optional<BigRational> x;
    bool all_pass = false;
    std::optional<Counterexample> counterexample;
};

/// Pair relation for 0 <= n <= n_max, 1 <= k <= k_max.
GridReport check_pair(const WzPair& pair, long n_max, long k_max);

/// LEMMA3 pair summed over n < m and k <= (m+1)/2, m odd:
///   sum_{n=1}^{m-1} F(n,0) = -F(0,0) + sum_{n=0}^{m-1} F(n,(m+1)/2) + sum_{k=1}^{(m+1)/2} G(m,k)
IdentityReport check_lemma3_boundary(long m, const BigRational& x);

/// J4 pair: sum_{n<m} F(n,0) = sum_{n<m} F(n,(m-1)/2) + sum_{k=1}^{(m-1)/2} G(m,k)
IdentityReport check_j4_boundary(long m);

/// J1 pair summed over n <= (m-1)/2:
///   sum F(n,k-1) - sum F(n,k) = G((m+1)/2, k)
IdentityReport check_j1_partial_sums(long m, long k);

}  // namespace supercong

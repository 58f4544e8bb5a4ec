#pragma once

// Truncated hypergeometric sums modulo p^K by term-ratio recurrence.
//
// The running term is kept as a valuation-unit pair over a unit common
// denominator, so the whole sum costs O(p) ring multiplications and a single
// modular inverse. Terms that vanish p-adically (valuation >= K) drop out on
// their own; no rational is ever materialised.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

#include "supercong/congruence_spec.hpp"
#include "supercong/padic.hpp"

namespace supercong {

/// Raised when the residue engine cannot evaluate a sum at p; the caller is
/// expected to route the prime to the exact oracle.
class SkipError : public std::runtime_error {
public:
    explicit SkipError(const std::string& reason) : std::runtime_error(reason) {}
    std::string reason() const { return what(); }
};

inline constexpr const char* kNotPIntegralParams = "NotPIntegralParams";

/// True when p divides no parameter denominator and neither numerator nor
/// denominator of z.
bool fast_path_admissible(const CongruenceSpec& spec, std::uint32_t p);

/// LHS of the congruence reduced mod p^K. Throws SkipError when the fast path
/// is not admissible at p.
PadicInt eval_sum_mod(const CongruenceSpec& spec, std::uint32_t p);

/// A * (D/p) * p^e mod p^K.
PadicInt rhs_residue(const CongruenceSpec& spec, std::uint32_t p);

/// Full and half truncations agree mod p^K.
bool half_full_agree(const CongruenceSpec& full, const CongruenceSpec& half, std::uint32_t p);

/// Visits the unweighted terms prod (a_i)_n / prod (b_j)_n * z^n for
/// n = 0..upper_limit(p) in valuation-unit form (mod p^K). Diagnostic path:
/// one modular inverse per term.
void for_each_term(const CongruenceSpec& spec, std::uint32_t p,
                   const std::function<void(std::uint32_t n, const ValUnit& term)>& visit);

}  // namespace supercong

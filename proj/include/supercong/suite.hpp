#pragma once

// Registry and runner for every congruence: the truncated-sum
// supercongruences (via hypersum) and the auxiliary lemma congruences.
//
// Each check has two independent routes. The modular route works in Z/p^K
// directly; the oracle route evaluates both sides as exact rationals and
// reduces at the end. Sweeps use the modular route and fall back to the
// oracle for primes where the modular route cannot be applied.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "supercong/congruence_spec.hpp"
#include "supercong/padic.hpp"

namespace supercong {

enum class CheckKind { Congruence, Lemma };
enum class Route { Modular, Oracle };

std::string_view to_string(Route r);

/// Skip reason when p divides a parameter of a lemma check.
inline constexpr const char* kParamNotUnit = "ParamNotUnit";

struct CheckInfo {
    std::string id;
    CheckKind kind = CheckKind::Lemma;
    Status status = Status::Proven;
    unsigned mod_exp = 1;
    std::uint32_t p_min = 3;
    std::string condition;  // admissibility as stated, e.g. "p>5"
    std::string description;
};

struct CheckResult {
    std::string id;
    std::uint32_t p = 0;
    unsigned mod_exp = 0;
    u128 modulus = 0;
    u128 lhs = 0;
    u128 rhs = 0;
    bool pass = false;
    std::optional<std::string> skipped;
    Route route = Route::Modular;
};

/// Both sides of a congruence reduced mod p^e.
struct Residues {
    u128 lhs = 0;
    u128 rhs = 0;
};

struct LemmaCheck {
    CheckInfo info;
    /// Extra inadmissibility beyond p_min (e.g. p dividing a parameter).
    std::function<std::optional<std::string>(std::uint32_t)> inadmissible;
    std::function<Residues(std::uint32_t)> modular;
    std::function<Residues(std::uint32_t)> exact;
};

const std::vector<LemmaCheck>& lemma_checks();

/// All registered checks in registry order: congruences first, then lemmas.
const std::vector<CheckInfo>& check_registry();
const CheckInfo& find_check(std::string_view id);

/// Modular route. Inadmissible primes come back with `skipped` set.
CheckResult run_check(std::string_view id, std::uint32_t p);

/// Oracle route: exact rationals reduced at the end.
CheckResult run_check_exact(std::string_view id, std::uint32_t p);

struct SweepReport {
    std::string id;
    Status status = Status::Proven;
    std::uint32_t p_lo = 0;
    std::uint32_t p_hi = 0;
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t skipped = 0;
    std::size_t rerouted = 0;  // primes answered by the oracle route
    std::vector<CheckResult> results;  // sorted by p
    std::vector<CheckResult> failures;
    double seconds = 0.0;

    std::size_t attempted() const { return results.size(); }
};

/// Thread count from SUPERCONG_THREADS, else hardware concurrency.
unsigned default_thread_count();

/// Runs the check on every odd prime in [p_lo, p_hi]. An empty range yields
/// an empty report. The aggregate does not depend on `parallel`.
SweepReport sweep(std::string_view id, std::uint32_t p_lo, std::uint32_t p_hi, bool parallel = true);

/// Sweeps every registered check over [3, p_hi].
std::vector<SweepReport> verify_all(std::uint32_t p_hi, bool parallel = true);

}  // namespace supercong

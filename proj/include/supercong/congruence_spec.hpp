#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "supercong/frac.hpp"

namespace supercong {

class UnknownCheckId : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Limit { Full, Half };
enum class Status { Proven, Conjectural };

std::string_view to_string(Status s);

/// Right-hand side A * (D/p) * p^e; the Legendre factor is 1 without D.
struct RhsSpec {
    Frac coeff{1};
    std::optional<Frac> disc;
    unsigned p_exp = 1;
};

/// Declarative description of one truncated sum
///   sum_{n=0}^{N} W(n) * prod (a_i)_n / prod (b_j)_n * z^n  ==  rhs  (mod p^K)
/// with N = p-1 (Full) or (p-1)/2 (Half).
struct CongruenceSpec {
    std::string id;
    std::vector<Frac> num_params;
    std::vector<Frac> den_params;
    std::array<std::int64_t, 3> weight{};  // w0 + w1*n + w2*n^2
    Frac z{1};
    Limit limit = Limit::Full;
    unsigned mod_exp = 3;
    RhsSpec rhs;
    std::uint32_t p_min = 3;
    Status status = Status::Proven;

    std::uint32_t upper_limit(std::uint32_t p) const { return limit == Limit::Full ? p - 1 : (p - 1) / 2; }
    std::int64_t weight_at(std::int64_t n) const { return weight[0] + n * (weight[1] + n * weight[2]); }
};

/// Every truncated-sum supercongruence of the catalogue, full and half forms.
const std::vector<CongruenceSpec>& congruence_specs();

/// Lookup by id (aliases such as "J1-half" and "zu5-full" accepted).
const CongruenceSpec& find_congruence(std::string_view id);
const CongruenceSpec* try_find_congruence(std::string_view id);

}  // namespace supercong

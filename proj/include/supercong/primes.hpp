#pragma once

#include <cstdint>
#include <vector>

namespace supercong {

bool is_prime(std::uint64_t n);

/// Primes in [lo, hi] from a sieve of Eratosthenes. Empty when lo > hi.
std::vector<std::uint32_t> primes_in_range(std::uint32_t lo, std::uint32_t hi);

}  // namespace supercong

#include "supercong/primes.hpp"

#include <algorithm>

namespace supercong {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint32_t> primes_in_range(std::uint32_t lo, std::uint32_t hi) {
    std::vector<std::uint32_t> out;
    if (lo > hi || hi < 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(hi) + 1, false);
    for (std::uint64_t i = 2; i * i <= hi; ++i) {
        if (composite[i]) continue;
        for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
    }
    for (std::uint32_t n = std::max<std::uint32_t>(lo, 2); n <= hi; ++n) {
        if (!composite[n]) out.push_back(n);
        if (n == hi) break;
    }
    return out;
}

}  // namespace supercong

#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace supercong {

/// Machine-word rational used for series parameters (1/2, 27/16, -1024, ...).
/// Always stored in lowest terms with a positive denominator.
struct Frac {
    std::int64_t num = 0;
    std::int64_t den = 1;

    constexpr Frac() = default;
    constexpr Frac(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
        if (d == 0) throw std::invalid_argument("Frac: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    constexpr bool is_integer() const noexcept { return den == 1; }
    friend constexpr bool operator==(const Frac&, const Frac&) = default;

    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

}  // namespace supercong

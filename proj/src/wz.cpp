#include "supercong/wz.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace supercong {

std::string_view to_string(WzPairId id) {
    switch (id) {
        case WzPairId::Lemma3: return "LEMMA3";
        case WzPairId::J1: return "J1";
        case WzPairId::J2: return "J2";
        case WzPairId::J4: return "J4";
    }
    return "?";
}

std::optional<WzPairId> parse_wz_pair(std::string_view name) {
    std::string upper(name);
    std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
    for (auto id : {WzPairId::Lemma3, WzPairId::J1, WzPairId::J2, WzPairId::J4})
        if (to_string(id) == upper) return id;
    return std::nullopt;
}

WzPair WzPair::lemma3(const BigRational& x) { return WzPair(WzPairId::Lemma3, x); }
WzPair WzPair::j1() { return WzPair(WzPairId::J1, std::nullopt); }
WzPair WzPair::j2() { return WzPair(WzPairId::J2, std::nullopt); }
WzPair WzPair::j4() { return WzPair(WzPairId::J4, std::nullopt); }

WzPair WzPair::from_id(WzPairId id, const BigRational& x) {
    switch (id) {
        case WzPairId::Lemma3: return lemma3(x);
        case WzPairId::J1: return j1();
        case WzPairId::J2: return j2();
        case WzPairId::J4: return j4();
    }
    throw std::invalid_argument("unknown WZ pair");
}

namespace {

const BigRational kHalf(1, 2);

BigRational fact(long n) { return pochhammer(BigRational(1), n); }

BigRational checked_div(const BigRational& num, const BigRational& den) {
    if (sgn(den) == 0) throw UndefinedTerm("WZ term has a zero denominator");
    return num / den;
}

BigRational ipow(long base, long e) { return pow(BigRational(base), e); }

}  // namespace

BigRational WzPair::F(long n, long k) const {
    if (n < 0 || k < 0) throw std::invalid_argument("WzPair::F: n, k >= 0 required");
    switch (id_) {
        case WzPairId::Lemma3: {
            const BigRational& x = *x_;
            return checked_div(pochhammer(kHalf - k, n) * pow(x, n), fact(n) * pow(1 - x, k));
        }
        case WzPairId::J1: {
            const BigRational pk = pochhammer(kHalf + k, n);
            return (3 * n + 2 * k + 1) * pochhammer(kHalf, n) * pk * pk / pow(fact(n), 3) * ipow(4, n);
        }
        case WzPairId::J2: {
            const BigRational pk = pochhammer(kHalf + k, n);
            const long w = 10 * n * n + 12 * n * k + 4 * k * k + 6 * n + 4 * k + 1;
            return w * pochhammer(kHalf, n) * pow(pk, 4) / pow(fact(n), 5) * ipow(-4, n);
        }
        case WzPairId::J4: {
            const BigRational pk = pochhammer(kHalf + k, n);
            const BigRational num = (3 * n + 2 * k + 1) * pochhammer(kHalf, n) * pk * pk * pochhammer(kHalf, k);
            const BigRational den = fact(n) * fact(n) * pochhammer(BigRational(1 + 2 * k), n) * fact(k);
            return checked_div(num, den) * ipow(-8, n);
        }
    }
    throw std::logic_error("unreachable");
}

BigRational WzPair::G(long n, long k) const {
    if (n < 0 || k < 0) throw std::invalid_argument("WzPair::G: n, k >= 0 required");
    if (n == 0) return BigRational(0);
    switch (id_) {
        case WzPairId::Lemma3: {
            const BigRational& x = *x_;
            return -checked_div(pochhammer(BigRational(3, 2) - k, n - 1) * pow(x, n), fact(n - 1) * pow(1 - x, k));
        }
        case WzPairId::J1: {
            const BigRational pk = pochhammer(kHalf + k, n - 1);
            return -(pochhammer(kHalf, n) * pk * pk / pow(fact(n - 1), 3) * ipow(4, n));
        }
        case WzPairId::J2: {
            const BigRational pk = pochhammer(kHalf + k, n - 1);
            const BigRational sign = n % 2 == 0 ? BigRational(1) : BigRational(-1);
            return (n + 2 * k - 1) * pochhammer(kHalf, n) * pow(pk, 4) / pow(fact(n - 1), 5) * sign *
                   ipow(2, 2 * n + 1);
        }
        case WzPairId::J4: {
            const BigRational pk = pochhammer(kHalf + k, n - 1);
            const BigRational num = pochhammer(kHalf, n) * pk * pk * pochhammer(kHalf, k);
            const BigRational den =
                fact(n - 1) * fact(n - 1) * pochhammer(BigRational(1 + 2 * k), n - 1) * fact(k);
            const BigRational sign = n % 2 == 0 ? BigRational(1) : BigRational(-1);
            return checked_div(num, den) * sign * pow(BigRational(2), 3 * n - 2);
        }
    }
    throw std::logic_error("unreachable");
}

GridReport check_pair(const WzPair& pair, long n_max, long k_max) {
    if (n_max < 1 || k_max < 1) throw std::invalid_argument("check_pair: grid bounds must be >= 1");
    GridReport report;
    report.id = pair.id();
    report.n_max = n_max;
    report.k_max = k_max;
    report.x = pair.x();
    for (long k = 1; k <= k_max; ++k) {
        for (long n = 0; n <= n_max; ++n) {
            Counterexample c;
            c.n = n;
            c.k = k;
            try {
                c.lhs = pair.F(n, k - 1) - pair.F(n, k);
                c.rhs = pair.G(n + 1, k) - pair.G(n, k);
            } catch (const UndefinedTerm& e) {
                c.note = e.what();
                report.counterexample = std::move(c);
                return report;
            }
            if (c.lhs != c.rhs) {
                report.counterexample = std::move(c);
                return report;
            }
        }
    }
    report.all_pass = true;
    return report;
}

namespace {

void require_odd(long m, long lo, const char* what) {
    if (m < lo || m % 2 == 0) throw std::invalid_argument(std::string(what) + ": odd m >= " + std::to_string(lo));
}

}  // namespace

IdentityReport check_lemma3_boundary(long m, const BigRational& x) {
    require_odd(m, 5, "check_lemma3_boundary");
    const WzPair pair = WzPair::lemma3(x);
    const long top = (m + 1) / 2;
    IdentityReport r;
    for (long n = 1; n <= m - 1; ++n) r.lhs += pair.F(n, 0);
    r.rhs = -pair.F(0, 0);
    for (long n = 0; n <= m - 1; ++n) r.rhs += pair.F(n, top);
    for (long k = 1; k <= top; ++k) r.rhs += pair.G(m, k);
    r.holds = r.lhs == r.rhs;
    return r;
}

IdentityReport check_j4_boundary(long m) {
    require_odd(m, 5, "check_j4_boundary");
    const WzPair pair = WzPair::j4();
    const long top = (m - 1) / 2;
    IdentityReport r;
    for (long n = 0; n <= m - 1; ++n) {
        r.lhs += pair.F(n, 0);
        r.rhs += pair.F(n, top);
    }
    for (long k = 1; k <= top; ++k) r.rhs += pair.G(m, k);
    r.holds = r.lhs == r.rhs;
    return r;
}

IdentityReport check_j1_partial_sums(long m, long k) {
    require_odd(m, 3, "check_j1_partial_sums");
    if (k < 1 || k > (m - 1) / 2) throw std::invalid_argument("check_j1_partial_sums: 1 <= k <= (m-1)/2");
    const WzPair pair = WzPair::j1();
    IdentityReport r;
    for (long n = 0; n <= (m - 1) / 2; ++n) r.lhs += pair.F(n, k - 1) - pair.F(n, k);
    r.rhs = pair.G((m + 1) / 2, k);
    r.holds = r.lhs == r.rhs;
    return r;
}

}  // namespace supercong

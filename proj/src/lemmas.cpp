// Auxiliary congruences: central-binomial sums, Morley, Fermat-quotient
// identities, the M0 family and its ingredients.

#include <utility>

#include "supercong/oracle.hpp"
#include "supercong/suite.hpp"

namespace supercong {

namespace {

/// p^v * u / q with q a unit, updated by integer factors. Division by a
/// p-multiple is exact: it lowers v.
class RunningTerm {
public:
    explicit RunningTerm(const PadicCtx& ctx) : ctx_(ctx) {}

    RunningTerm& mul(std::int64_t x) {
        if (zero_) return *this;
        if (x == 0) {
            zero_ = true;
            return *this;
        }
        const auto [v, u] = split(x);
        v_ += v;
        u_ = ctx_.mul(u_, u);
        return *this;
    }

    RunningTerm& div(std::int64_t x) {
        if (x == 0) throw DivByZero("RunningTerm: division by zero");
        const auto [v, u] = split(x);
        if (!zero_) {
            if (v_ < v) throw NegativeValuation("RunningTerm: term left the p-adic integers");
            v_ -= v;
        }
        q_ = ctx_.mul(q_, u);
        return *this;
    }

    RunningTerm& mul(const Frac& f) { return mul(f.num).div(f.den); }

    RunningTerm& mul(const RunningTerm& o) {
        q_ = ctx_.mul(q_, o.q_);
        if (zero_) return *this;
        if (o.zero_) {
            zero_ = true;
            return *this;
        }
        v_ += o.v_;
        u_ = ctx_.mul(u_, o.u_);
        return *this;
    }

    u128 num() const {
        if (zero_ || v_ >= static_cast<int>(ctx_.k())) return 0;
        return ctx_.mul(ctx_.power(static_cast<unsigned>(v_)), u_);
    }
    u128 den() const { return q_; }
    u128 value() const { return ctx_.mul(num(), ctx_.inverse(q_)); }

private:
    std::pair<int, u128> split(std::int64_t x) const {
        const auto p = static_cast<std::int64_t>(ctx_.p());
        int v = 0;
        while (x % p == 0) {
            x /= p;
            ++v;
        }
        return {v, ctx_.reduce(x)};
    }

    PadicCtx ctx_;
    int v_ = 0;
    u128 u_ = 1;
    bool zero_ = false;
    u128 q_ = 1;
};

/// Sum of fractions a/b kept over a unit common denominator.
class LazySum {
public:
    explicit LazySum(const PadicCtx& ctx) : ctx_(ctx) {}

    void add(const RunningTerm& t) {
        a_ = ctx_.add(ctx_.mul(a_, t.den()), ctx_.mul(t.num(), b_));
        b_ = ctx_.mul(b_, t.den());
    }
    u128 value() const { return ctx_.mul(a_, ctx_.inverse(b_)); }

private:
    PadicCtx ctx_;
    u128 a_ = 0;
    u128 b_ = 1;
};

int half_sign(std::uint32_t p) { return ((p - 1) / 2) % 2 == 0 ? 1 : -1; }

/// C(2n,n) -> C(2n+2,n+1).
void next_central(RunningTerm& c, std::int64_t n1) { c.mul(2 * n1).mul(2 * n1 - 1).div(n1).div(n1); }

u128 reduce_exact(const BigRational& x, std::uint32_t p, unsigned e) {
    return reduce_mod(x, PadicCtx(p, e)).residue();
}

BigRational central(long n) { return BigRational(binomial(2 * n, n)); }

BigRational sign_pow(long n) { return n % 2 == 0 ? BigRational(1) : BigRational(-1); }

bool divides_frac(std::uint32_t p, const Frac& f) {
    const auto pp = static_cast<std::int64_t>(p);
    return f.num % pp == 0 || f.den % pp == 0;
}

Frac one_minus(const Frac& x) { return Frac(x.den - x.num, x.den); }
Frac one_plus(const Frac& x) { return Frac(x.den + x.num, x.den); }

// -- st1, st2 -----------------------------------------------------------------

Residues st1_modular(std::uint32_t p) {
    const PadicCtx ctx(p, 1);
    RunningTerm c(ctx);
    LazySum s(ctx);
    for (std::int64_t n = 1; n <= (p - 1) / 2; ++n) {
        next_central(c, n);
        RunningTerm t = c;
        s.add(t.div(n));
    }
    return {s.value(), 0};
}

Residues st1_exact(std::uint32_t p) {
    BigRational s;
    for (long n = 1; n <= static_cast<long>((p - 1) / 2); ++n) s += central(n) / n;
    return {reduce_exact(s, p, 1), 0};
}

Residues st2_modular(std::uint32_t p) {
    const PadicCtx ctx(p, 1);
    RunningTerm c(ctx);
    LazySum s(ctx);
    for (std::int64_t n = 1; n <= (p - 1) / 2; ++n) {
        next_central(c, n);
        RunningTerm t = c;
        t.div(n).div(n).mul(n % 2 == 0 ? 1 : -1);
        s.add(t);
    }
    return {s.value(), 0};
}

Residues st2_exact(std::uint32_t p) {
    BigRational s;
    for (long n = 1; n <= static_cast<long>((p - 1) / 2); ++n) s += sign_pow(n) * central(n) / (n * n);
    return {reduce_exact(s, p, 1), 0};
}

// -- st3 and Morley ----------------------------------------------------------

Residues st3_modular(std::uint32_t p) {
    const PadicCtx ctx(p, 1);
    RunningTerm r(ctx);  // (1/2)_n / n!
    LazySum s(ctx);
    for (std::int64_t n = 0; n <= (static_cast<std::int64_t>(p) - 3) / 2; ++n) {
        if (n > 0) r.mul(2 * n - 1).div(2 * n);
        RunningTerm t = r;
        s.add(t.div(2 * n + 1));
    }
    const auto q = static_cast<std::int64_t>(fermat_quotient(Frac(2), p).value);
    return {s.value(), ctx.reduce(-half_sign(p) * q)};
}

Residues st3_exact(std::uint32_t p) {
    BigRational s;
    for (long n = 0; n <= (static_cast<long>(p) - 3) / 2; ++n)
        s += central(n) / (pow(make_rational(4), n) * (2 * n + 1));
    const BigRational rhs = -half_sign(p) * fermat_quotient_exact(make_rational(2), p);
    return {reduce_exact(s, p, 1), reduce_exact(rhs, p, 1)};
}

Residues morley_modular(std::uint32_t p) {
    const PadicCtx ctx(p, 2);
    RunningTerm r(ctx);
    for (std::int64_t n = 1; n <= (p - 1) / 2; ++n) r.mul(2 * n - 1).div(2 * n);
    const u128 rhs = ctx.mul(ctx.reduce(half_sign(p)), ctx.pow(2, p - 1));
    return {r.value(), rhs};
}

Residues morley_exact(std::uint32_t p) {
    const long half = (p - 1) / 2;
    const BigRational lhs = BigRational(binomial(p - 1, half)) / pow(make_rational(2), p - 1);
    const BigRational rhs = half_sign(p) * pow(make_rational(2), p - 1);
    return {reduce_exact(lhs, p, 2), reduce_exact(rhs, p, 2)};
}

// -- st4, st5 and their combination -----------------------------------------

/// sum_{n=1}^{p-1} (-2)^n C(2n,n) and the same sum with an extra 1/n.
std::pair<u128, u128> st45_sums(const PadicCtx& ctx) {
    const std::int64_t p = ctx.p();
    RunningTerm c(ctx);
    LazySum plain(ctx), over_n(ctx);
    for (std::int64_t n = 1; n <= p - 1; ++n) {
        next_central(c, n);
        c.mul(-2);
        plain.add(c);
        RunningTerm t = c;
        over_n.add(t.div(n));
    }
    return {plain.value(), over_n.value()};
}

std::pair<BigRational, BigRational> st45_exact_sums(std::uint32_t p) {
    BigRational plain, over_n;
    for (long n = 1; n <= static_cast<long>(p) - 1; ++n) {
        const BigRational t = pow(make_rational(-2), n) * central(n);
        plain += t;
        over_n += t / n;
    }
    return {plain, over_n};
}

Residues st4_modular(std::uint32_t p) {
    const PadicCtx ctx(p, 1);
    const auto q = static_cast<std::int64_t>(fermat_quotient(Frac(2), p).value);
    return {st45_sums(ctx).second, ctx.reduce(-4 * q)};
}

Residues st4_exact(std::uint32_t p) {
    const BigRational rhs = -4 * fermat_quotient_exact(make_rational(2), p);
    return {reduce_exact(st45_exact_sums(p).second, p, 1), reduce_exact(rhs, p, 1)};
}

/// 3 sum (-2)^n C(2n,n) == -4 p q_p(2) = -4 (2^(p-1) - 1)  (mod p^2).
Residues st5_modular(std::uint32_t p) {
    const PadicCtx ctx(p, 2);
    const u128 lhs = ctx.mul(3, st45_sums(ctx).first);
    const u128 rhs = ctx.mul(ctx.reduce(-4), ctx.sub(ctx.pow(2, p - 1), 1));
    return {lhs, rhs};
}

Residues st5_exact(std::uint32_t p) {
    const BigRational lhs = 3 * st45_exact_sums(p).first;
    const BigRational rhs = -4 * (pow(make_rational(2), p - 1) - 1);
    return {reduce_exact(lhs, p, 2), reduce_exact(rhs, p, 2)};
}

Residues combined_modular(std::uint32_t p) {
    const PadicCtx ctx(p, 2);
    const auto [plain, over_n] = st45_sums(ctx);
    const u128 quarter = ctx.inverse(4);
    const u128 lhs =
        ctx.add(ctx.mul(ctx.mul(3, quarter), plain), ctx.mul(ctx.mul(p, quarter), over_n));
    const u128 rhs = ctx.mul(2, ctx.sub(1, ctx.pow(2, p - 1)));
    return {lhs, rhs};
}

Residues combined_exact(std::uint32_t p) {
    const auto [plain, over_n] = st45_exact_sums(p);
    const BigRational lhs = make_rational(3, 4) * plain + make_rational(p, 4) * over_n;
    const BigRational rhs = 2 * (1 - pow(make_rational(2), p - 1));
    return {reduce_exact(lhs, p, 2), reduce_exact(rhs, p, 2)};
}

// -- st4-1 -------------------------------------------------------------------

Residues st41_modular(std::uint32_t p, const Frac& m) {
    const PadicCtx ctx(p, 1);
    RunningTerm c(ctx), pw(ctx);
    LazySum s(ctx);
    const Frac step(-m.den, m.num);  // -1/m
    for (std::int64_t n = 1; n <= static_cast<std::int64_t>(p) - 1; ++n) {
        next_central(c, n);
        pw.mul(step);
        RunningTerm t = c;
        t.div(n).mul(pw);
        s.add(t);
    }

    const PadicCtx ctx2(p, 2);
    const u128 mm = from_rational(m, ctx2).residue();
    u128 v0 = 2, v1 = mm;
    for (std::uint32_t k = 2; k <= p; ++k) {
        const u128 v2 = ctx2.mul(mm, ctx2.add(v1, v0));
        v0 = v1;
        v1 = v2;
    }
    const u128 d = ctx2.sub(ctx2.pow(mm, p), v1);
    if (d % p != 0) throw ArithmeticError("st4-1: m^p - V_p(m) not divisible by p");
    const u128 rhs = ctx.mul(from_rational(Frac(2 * m.den, m.num), ctx).residue(), (d / p) % p);
    return {s.value(), rhs};
}

Residues st41_exact(std::uint32_t p, const Frac& m) {
    const BigRational mq = make_rational(m);
    BigRational s;
    for (long n = 1; n <= static_cast<long>(p) - 1; ++n)
        s += sign_pow(n) * central(n) / (n * pow(mq, n));
    BigRational v0(2), v1 = mq;
    for (long k = 2; k <= static_cast<long>(p); ++k) {
        BigRational v2 = mq * (v1 + v0);
        v0 = v1;
        v1 = v2;
    }
    const BigRational rhs = 2 / mq * (pow(mq, p) - v1) / static_cast<long>(p);
    return {reduce_exact(s, p, 1), reduce_exact(rhs, p, 1)};
}

// -- M0 ----------------------------------------------------------------------

Residues m0_modular(std::uint32_t p, const Frac& x, const Frac& y) {
    const PadicCtx ctx(p, 2);
    RunningTerm c(ctx), pw(ctx);
    LazySum s(ctx);
    const Frac step(x.num, 4 * x.den);
    for (std::int64_t n = 1; n <= static_cast<std::int64_t>(p) - 1; ++n) {
        next_central(c, n);
        pw.mul(step);
        RunningTerm t = c;
        s.add(t.mul(pw));
    }

    const PadicCtx ctx1(p, 1);
    auto q = [&](const Frac& f) { return PadicInt(ctx1, static_cast<i128>(fermat_quotient(f, p).value)); };
    const Frac yp = one_plus(y), ym = Frac(y.num - y.den, y.den);
    const PadicInt bracket = -q(x) + q(yp) * from_rational(yp, ctx1) - q(ym) * from_rational(ym, ctx1);
    const PadicInt factor = from_rational(x, ctx1) * inv(PadicInt(ctx1, 2) * from_rational(one_minus(x), ctx1));
    const u128 rhs = ctx.mul(p, (factor * bracket).residue());
    return {s.value(), rhs};
}

Residues m0_exact(std::uint32_t p, const Frac& x, const Frac& y) {
    const BigRational xq = make_rational(x), yq = make_rational(y);
    BigRational s;
    for (long n = 1; n <= static_cast<long>(p) - 1; ++n) s += central(n) * pow(xq / 4, n);
    auto q = [&](const BigRational& f) { return fermat_quotient_exact(f, p); };
    const BigRational bracket = -q(xq) + q(yq + 1) * (yq + 1) - q(yq - 1) * (yq - 1);
    const BigRational rhs = static_cast<long>(p) * xq / (2 * (1 - xq)) * bracket;
    return {reduce_exact(s, p, 2), reduce_exact(rhs, p, 2)};
}

// -- M1, M2 ------------------------------------------------------------------

/// (N mod p^2) / p reduced mod p, for N known to be divisible by p.
u128 divide_by_p(u128 n, std::uint32_t p, const char* what) {
    if (n % p != 0) throw ArithmeticError(std::string(what) + ": numerator not divisible by p");
    return (n / p) % p;
}

Residues m1_modular(std::uint32_t p, const Frac& x) {
    const PadicCtx ctx(p, 1);
    RunningTerm pw(ctx);
    LazySum s(ctx);
    for (std::int64_t n = 1; n <= static_cast<std::int64_t>(p) - 1; ++n) {
        pw.mul(x);
        RunningTerm t = pw;
        s.add(t.div(n));
    }
    const PadicCtx ctx2(p, 2);
    const u128 xr = from_rational(x, ctx2).residue();
    const u128 n = ctx2.sub(ctx2.sub(1, ctx2.pow(xr, p)), ctx2.pow(ctx2.sub(1, xr), p));
    return {s.value(), divide_by_p(n, p, "M1")};
}

Residues m1_exact(std::uint32_t p, const Frac& x) {
    const BigRational xq = make_rational(x);
    BigRational s;
    for (long n = 1; n <= static_cast<long>(p) - 1; ++n) s += pow(xq, n) / n;
    const BigRational rhs = (1 - pow(xq, p) - pow(1 - xq, p)) / static_cast<long>(p);
    return {reduce_exact(s, p, 1), reduce_exact(rhs, p, 1)};
}

Residues m2_modular(std::uint32_t p, const Frac& x) {
    const PadicCtx ctx(p, 1);
    const Frac x2(x.num * x.num, x.den * x.den);
    RunningTerm pw(ctx);
    pw.mul(x);
    LazySum s(ctx);
    for (std::int64_t k = 1; k <= static_cast<std::int64_t>(p - 1) / 2; ++k) {
        if (k > 1) pw.mul(x2);
        RunningTerm t = pw;
        s.add(t.div(2 * k - 1));
    }
    const PadicCtx ctx2(p, 2);
    const u128 xr = from_rational(x, ctx2).residue();
    const u128 n = ctx2.sub(ctx2.sub(ctx2.pow(ctx2.add(1, xr), p), ctx2.pow(ctx2.sub(1, xr), p)),
                            ctx2.mul(2, ctx2.pow(xr, p)));
    const u128 rhs = ctx.mul(divide_by_p(n, p, "M2"), ctx.inverse(2));
    return {s.value(), rhs};
}

Residues m2_exact(std::uint32_t p, const Frac& x) {
    const BigRational xq = make_rational(x);
    BigRational s;
    for (long k = 1; k <= static_cast<long>(p - 1) / 2; ++k) s += pow(xq, 2 * k - 1) / (2 * k - 1);
    const BigRational rhs = (pow(1 + xq, p) - pow(1 - xq, p) - 2 * pow(xq, p)) / (2 * static_cast<long>(p));
    return {reduce_exact(s, p, 1), reduce_exact(rhs, p, 1)};
}

// -- harmonic number and the complete-residue-system fact --------------------

Residues harmonic_modular(std::uint32_t p) {
    const PadicCtx ctx(p, 1);
    LazySum s(ctx);
    for (std::int64_t n = 1; n <= static_cast<std::int64_t>(p) - 1; ++n) {
        RunningTerm t(ctx);
        s.add(t.div(n));
    }
    return {s.value(), 0};
}

Residues harmonic_exact(std::uint32_t p) {
    BigRational s;
    for (long n = 1; n <= static_cast<long>(p) - 1; ++n) s += make_rational(1, n);
    return {reduce_exact(s, p, 1), 0};
}

/// (1/2 - k)_p == p!/2 (mod p^2) for k = 1..(p-1)/2. Reports the first
/// mismatching k, or k = (p-1)/2 when all agree.
Residues residue_system_modular(std::uint32_t p) {
    const PadicCtx ctx(p, 2);
    const auto pp = static_cast<std::int64_t>(p);
    RunningTerm fact(ctx);
    for (std::int64_t j = 1; j <= pp; ++j) fact.mul(j);
    fact.div(2);
    const u128 rhs = fact.value();

    // (1/2 - k)_p = prod_{j=0}^{p-1} (1 - 2k + 2j) / 2^p
    RunningTerm poch(ctx);
    for (std::int64_t j = 0; j < pp; ++j) poch.mul(2 * j - 1).div(2);
    u128 lhs = poch.value();
    for (std::int64_t k = 1; k < (pp - 1) / 2 && lhs == rhs; ++k) {
        // k -> k+1: gain the factor (1/2 - (k+1)), lose (p - 1/2 - k).
        poch.mul(-1 - 2 * k).div(2 * pp - 1 - 2 * k);
        lhs = poch.value();
    }
    return {lhs, rhs};
}

Residues residue_system_exact(std::uint32_t p) {
    const long pp = p;
    BigRational fact(1);
    for (long j = 1; j <= pp; ++j) fact *= j;
    const u128 rhs = reduce_exact(fact / 2, p, 2);
    u128 lhs = 0;
    for (long k = 1; k <= (pp - 1) / 2; ++k) {
        lhs = reduce_exact(pochhammer(make_rational(1 - 2 * k, 2), pp), p, 2);
        if (lhs != rhs) break;
    }
    return {lhs, rhs};
}

// -- registry ----------------------------------------------------------------

CheckInfo lemma_info(std::string id, unsigned e, std::uint32_t p_min, std::string cond, std::string desc) {
    CheckInfo info;
    info.id = std::move(id);
    info.kind = CheckKind::Lemma;
    info.status = Status::Proven;
    info.mod_exp = e;
    info.p_min = p_min;
    info.condition = std::move(cond);
    info.description = std::move(desc);
    return info;
}

std::function<std::optional<std::string>(std::uint32_t)> always_admissible() {
    return [](std::uint32_t) { return std::optional<std::string>{}; };
}

std::function<std::optional<std::string>(std::uint32_t)> units_required(std::vector<Frac> params) {
    return [params = std::move(params)](std::uint32_t p) -> std::optional<std::string> {
        for (const auto& f : params)
            if (divides_frac(p, f)) return std::string(kParamNotUnit);
        return std::nullopt;
    };
}

std::vector<LemmaCheck> build_lemmas() {
    std::vector<LemmaCheck> out;
    auto add = [&](CheckInfo info, auto inadm, auto modular, auto exact) {
        out.push_back(LemmaCheck{std::move(info), std::move(inadm), std::move(modular), std::move(exact)});
    };

    add(lemma_info("st1", 1, 5, "p>3", "sum_{n<=(p-1)/2} C(2n,n)/n == 0 (mod p)"), always_admissible(),
        st1_modular, st1_exact);
    add(lemma_info("st2", 1, 7, "p>5", "sum_{n<=(p-1)/2} (-1)^n C(2n,n)/n^2 == 0 (mod p)"),
        always_admissible(), st2_modular, st2_exact);
    add(lemma_info("st3", 1, 3, "p>2", "sum_{n<=(p-3)/2} 4^-n C(2n,n)/(2n+1) == -(-1)^((p-1)/2) q_p(2) (mod p)"),
        always_admissible(), st3_modular, st3_exact);
    add(lemma_info("st3-3", 2, 3, "p>2", "(1/2)_N/(1)_N == (-1)^N 2^(p-1) (mod p^2), N=(p-1)/2 (Morley)"),
        always_admissible(), morley_modular, morley_exact);
    add(lemma_info("st4", 1, 3, "p>2", "sum_{n<p} (-2)^n C(2n,n)/n == -4 q_p(2) (mod p)"),
        always_admissible(), st4_modular, st4_exact);
    add(lemma_info("st5", 2, 3, "p>2", "3 sum_{n<p} (-2)^n C(2n,n) == -4 (2^(p-1)-1) (mod p^2)"),
        always_admissible(), st5_modular, st5_exact);
    add(lemma_info("st4-st5-combined", 2, 3, "p>2", "(3/4) S5 + (p/4) S4 == 2 (1 - 2^(p-1)) (mod p^2)"),
        always_admissible(), combined_modular, combined_exact);

    for (const Frac m : {Frac(1), Frac(2), Frac(3), Frac(1, 2)}) {
        add(lemma_info("st4-1:m=" + m.str(), 1, 3, "p>2",
                       "sum_{n<p} (-1)^n C(2n,n)/(n m^n) == (2/m)(m^p - V_p(m))/p (mod p)"),
            units_required({m}), [m](std::uint32_t p) { return st41_modular(p, m); },
            [m](std::uint32_t p) { return st41_exact(p, m); });
    }

    const std::pair<Frac, Frac> m0_pairs[] = {
        {Frac(-8), Frac(3)}, {Frac(-3), Frac(2)}, {Frac(8, 9), Frac(1, 3)}, {Frac(5, 9), Frac(2, 3)}};
    for (const auto& [x, y] : m0_pairs) {
        add(lemma_info("M0:x=" + x.str() + ",y=" + y.str(), 2, 5, "p>3",
                       "sum_{n<p} C(2n,n)(x/4)^n == px/(2(1-x)) (-q(x)+q(y+1)(y+1)-q(y-1)(y-1)) (mod p^2)"),
            units_required({x, one_minus(x), one_plus(y), Frac(y.num - y.den, y.den)}),
            [x, y](std::uint32_t p) { return m0_modular(p, x, y); },
            [x, y](std::uint32_t p) { return m0_exact(p, x, y); });
    }

    for (const Frac x : {Frac(2), Frac(1, 3), Frac(-8)}) {
        add(lemma_info("M1:x=" + x.str(), 1, 3, "p>2", "sum_{n<p} x^n/n == (1 - x^p - (1-x)^p)/p (mod p)"),
            units_required({Frac(1, x.den)}), [x](std::uint32_t p) { return m1_modular(p, x); },
            [x](std::uint32_t p) { return m1_exact(p, x); });
    }
    for (const Frac x : {Frac(2), Frac(1, 3), Frac(-8)}) {
        add(lemma_info("M2:x=" + x.str(), 1, 3, "p>2",
                       "sum_{k<=(p-1)/2} x^(2k-1)/(2k-1) == ((1+x)^p - (1-x)^p - 2x^p)/(2p) (mod p)"),
            units_required({Frac(1, x.den)}), [x](std::uint32_t p) { return m2_modular(p, x); },
            [x](std::uint32_t p) { return m2_exact(p, x); });
    }

    add(lemma_info("harmonic", 1, 5, "p>3", "H_{p-1} == 0 (mod p)"), always_admissible(), harmonic_modular,
        harmonic_exact);
    add(lemma_info("residue-system", 2, 3, "p>2", "(1/2-k)_p == p!/2 (mod p^2), k=1..(p-1)/2"),
        always_admissible(), residue_system_modular, residue_system_exact);
    return out;
}

}  // namespace

const std::vector<LemmaCheck>& lemma_checks() {
    static const std::vector<LemmaCheck> registry = build_lemmas();
    return registry;
}

}  // namespace supercong

#include "supercong/hypersum.hpp"

#include <vector>

namespace supercong {

namespace {

/// Integer factor split as p^v * unit, with a fast int64 path.
struct Split {
    int v;
    u128 unit;
    bool zero;
};

Split split(const PadicCtx& ctx, std::int64_t x) {
    if (x == 0) return {ValUnit::kInfinite, 0, true};
    const auto p = static_cast<std::int64_t>(ctx.p());
    int v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return {v, ctx.reduce(x), false};
}

struct Param {
    std::int64_t num;
    std::int64_t den;
};

/// Term-ratio walker. term_n = T_n / Q_n with T_n a valuation-unit pair and
/// Q_n a unit; step n -> n+1 multiplies by
///   prod (r_i + n s_i) * prod s_j * zn  /  prod (r_j + n s_j) * prod s_i * zd
/// where a_i = r_i/s_i, b_j = r_j/s_j and z = zn/zd.
class TermWalker {
public:
    TermWalker(const CongruenceSpec& spec, const PadicCtx& ctx) : ctx_(ctx) {
        for (const auto& f : spec.num_params) num_.push_back({f.num, f.den});
        for (const auto& f : spec.den_params) den_.push_back({f.num, f.den});
        u128 cn = ctx.reduce(spec.z.num);
        u128 cd = ctx.reduce(spec.z.den);
        for (const auto& b : den_) cn = ctx.mul(cn, ctx.reduce(b.den));
        for (const auto& a : num_) cd = ctx.mul(cd, ctx.reduce(a.den));
        const_num_ = cn;
        const_den_ = cd;
    }

    int valuation() const { return v_; }
    u128 unit() const { return u_; }
    bool zero() const { return zero_; }
    u128 q() const { return q_; }
    /// Unit factor by which Q grew on the last step.
    u128 last_den() const { return last_den_; }

    /// Residue of T_n mod p^K.
    u128 numerator_residue() const {
        if (zero_ || v_ >= static_cast<int>(ctx_.k())) return 0;
        return ctx_.mul(ctx_.power(static_cast<unsigned>(v_)), u_);
    }

    /// Advances from term n to term n+1.
    void step(std::int64_t n) {
        u128 den_unit = const_den_;
        int den_v = 0;
        for (const auto& b : den_) {
            const Split s = split(ctx_, b.num + n * b.den);
            // Shipped specs only divide by units; a zero here would be a pole.
            if (s.zero) throw DivByZero("hypersum: pole in denominator parameter");
            den_v += s.v;
            den_unit = ctx_.mul(den_unit, s.unit);
        }
        if (!zero_) {
            u128 u = ctx_.mul(u_, const_num_);
            int v = v_;
            for (const auto& a : num_) {
                const Split s = split(ctx_, a.num + n * a.den);
                if (s.zero) {
                    zero_ = true;
                    break;
                }
                v += s.v;
                u = ctx_.mul(u, s.unit);
            }
            if (!zero_) {
                if (v < den_v) throw NegativeValuation("hypersum: term left the p-adic integers");
                v_ = v - den_v;
                u_ = u;
            }
        }
        q_ = ctx_.mul(q_, den_unit);
        last_den_ = den_unit;
    }

private:
    PadicCtx ctx_;
    std::vector<Param> num_, den_;
    u128 const_num_ = 1, const_den_ = 1;
    int v_ = 0;
    u128 u_ = 1;
    bool zero_ = false;
    u128 q_ = 1;
    u128 last_den_ = 1;
};

void require_fast_path(const CongruenceSpec& spec, std::uint32_t p) {
    if (!fast_path_admissible(spec, p)) throw SkipError(kNotPIntegralParams);
}

}  // namespace

bool fast_path_admissible(const CongruenceSpec& spec, std::uint32_t p) {
    const auto pp = static_cast<std::int64_t>(p);
    for (const auto& f : spec.num_params)
        if (f.den % pp == 0) return false;
    for (const auto& f : spec.den_params)
        if (f.den % pp == 0) return false;
    return spec.z.num % pp != 0 && spec.z.den % pp != 0;
}

PadicInt eval_sum_mod(const CongruenceSpec& spec, std::uint32_t p) {
    require_fast_path(spec, p);
    const PadicCtx ctx(p, spec.mod_exp);
    TermWalker walker(spec, ctx);
    const std::uint32_t upper = spec.upper_limit(p);

    // S_n = A_n / Q_n, so A_{n+1} = A_n * s + W(n+1) * T_{n+1}.
    u128 acc = ctx.reduce(spec.weight_at(0));
    for (std::uint32_t n = 0; n < upper; ++n) {
        walker.step(n);
        const u128 w = ctx.reduce(spec.weight_at(static_cast<std::int64_t>(n) + 1));
        acc = ctx.add(ctx.mul(acc, walker.last_den()), ctx.mul(w, walker.numerator_residue()));
    }
    return PadicInt::from_residue(ctx, ctx.mul(acc, ctx.inverse(walker.q())));
}

PadicInt rhs_residue(const CongruenceSpec& spec, std::uint32_t p) {
    const PadicCtx ctx(p, spec.mod_exp);
    PadicInt r = from_rational(spec.rhs.coeff, ctx);
    if (spec.rhs.disc) r = r * PadicInt(ctx, legendre(*spec.rhs.disc, p));
    return r * PadicInt::from_residue(ctx, ctx.power(spec.rhs.p_exp));
}

bool half_full_agree(const CongruenceSpec& full, const CongruenceSpec& half, std::uint32_t p) {
    return eval_sum_mod(full, p) == eval_sum_mod(half, p);
}

void for_each_term(const CongruenceSpec& spec, std::uint32_t p,
                   const std::function<void(std::uint32_t n, const ValUnit& term)>& visit) {
    require_fast_path(spec, p);
    const PadicCtx ctx(p, spec.mod_exp);
    TermWalker walker(spec, ctx);
    const std::uint32_t upper = spec.upper_limit(p);
    for (std::uint32_t n = 0;; ++n) {
        if (walker.zero()) {
            visit(n, ValUnit::zero(ctx));
        } else {
            const u128 u = ctx.mul(walker.unit(), ctx.inverse(walker.q()));
            visit(n, ValUnit::from_parts(ctx, walker.valuation(), u));
        }
        if (n == upper) break;
        walker.step(n);
    }
}

}  // namespace supercong

#include "supercong/series.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace supercong {

namespace {

std::recursive_mutex& precision_mutex() {
    static std::recursive_mutex m;
    return m;
}

Real to_real(const BigRational& q) {
    Real r;
    mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

Real to_real(const BigInt& z) {
    Real r;
    mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
    return r;
}

Real to_real(const Frac& f) { return Real(f.num) / Real(f.den); }

Complex to_complex(const QuadNumber& q) {
    if (sgn(q.im) == 0) return {to_real(q.re), Real(0)};
    if (q.disc >= 0) return {to_real(q.re) + to_real(q.im) * sqrt(Real(q.disc)), Real(0)};
    return {to_real(q.re), to_real(q.im) * sqrt(Real(-q.disc))};
}

Real ten_to_minus(long e) { return pow(Real(10), -e); }

/// Exact powers of a non-real z = (u + v sqrt(d))/w as integers over w^n.
class ExactPower {
public:
    explicit ExactPower(const QuadNumber& z, bool negate) : disc_(z.disc) {
        BigInt lcm;
        mpz_lcm(lcm.get_mpz_t(), z.re.get_den_mpz_t(), z.im.get_den_mpz_t());
        u_ = z.re.get_num() * (lcm / z.re.get_den());
        v_ = z.im.get_num() * (lcm / z.im.get_den());
        if (negate) {
            u_ = -u_;
            v_ = -v_;
        }
        w_ = lcm;
        root_ = sqrt(Real(-disc_));
    }

    Complex value() const {
        const Real w = to_real(wn_);
        return {to_real(un_) / w, to_real(vn_) * root_ / w};
    }

    void advance() {
        BigInt un = un_ * u_ + vn_ * v_ * disc_;
        BigInt vn = un_ * v_ + vn_ * u_;
        un_ = std::move(un);
        vn_ = std::move(vn);
        wn_ *= w_;
    }

private:
    long disc_;
    BigInt u_, v_, w_;
    BigInt un_ = 1, vn_ = 0, wn_ = 1;
    Real root_;
};

/// Ratio of Pochhammer products prod (a_i)_n / prod (b_j)_n, advanced in place.
class PochRatio {
public:
    PochRatio(const std::vector<Frac>& a, const std::vector<Frac>& b) {
        for (const auto& f : a) a_.push_back(to_real(f));
        for (const auto& f : b) b_.push_back(to_real(f));
    }
    const Real& value() const { return r_; }
    void advance(unsigned n) {
        for (const auto& x : a_) r_ *= x + n;
        for (const auto& x : b_) r_ /= x + n;
    }

private:
    std::vector<Real> a_, b_;
    Real r_ = 1;
};

/// Stops once |t_n| rho/(1-rho) < eps with rho = max(|t_n/t_{n-1}|, |z|).
struct TailRule {
    Real z_abs;
    Real eps;
    Real prev = -1;
    Real tail = 0;

    bool done(const Real& t, unsigned n) {
        bool stop = false;
        if (t == 0 && n > 0 && prev == 0) stop = true;
        if (!stop && n >= 2 && prev > 0) {
            Real rho = std::max(Real(t / prev), z_abs);
            if (rho < 1) {
                tail = t * rho / (1 - rho);
                stop = tail < eps;
            }
        }
        prev = t;
        return stop;
    }
};

constexpr unsigned kMaxDirectTerms = 2'000'000;
constexpr unsigned kWynnTerms[] = {200, 400};

}  // namespace

PrecisionScope::PrecisionScope(unsigned digits10)
    : lock_(precision_mutex()), saved_(Real::default_precision()) {
    Real::default_precision(digits10);
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_); }

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Complex operator/(const Complex& a, const Complex& b) {
    const Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
Real abs(const Complex& z) { return sqrt(z.re * z.re + z.im * z.im); }

std::string_view to_string(SeriesTarget t) {
    switch (t) {
        case SeriesTarget::None: return "none";
        case SeriesTarget::EightOverPi2: return "8/pi^2";
        case SeriesTarget::OneOverPi2: return "1/pi^2";
        case SeriesTarget::Sqrt7OverPi: return "sqrt(7)/pi";
    }
    return "?";
}

const std::vector<SeriesSpec>& series_catalogue() {
    static const std::vector<SeriesSpec> catalogue = [] {
        const Frac h(1, 2);
        auto real = [](long n, long d = 1) { return QuadNumber{make_rational(n, d), BigRational(0), -1}; };
        auto surd = [](long n1, long d1, long n2, long d2) {
            return QuadNumber{make_rational(n1, d1), make_rational(n2, d2), -7};
        };
        std::vector<SeriesSpec> out;
        out.push_back({"eight-over-pi2", {h, h, h, h, h}, {1, 1, 1, 1, 1},
                       {real(1), real(8), real(20)}, real(1, 4), true, SeriesTarget::EightOverPi2});
        out.push_back({"one-over-pi2", {h, h, h, h, h}, {1, 1, 1, 1, 1},
                       {real(1, 8), real(1), real(5, 2)}, real(1, 4), true, SeriesTarget::OneOverPi2});
        out.push_back({"sqrt7-over-pi", {h, h, h}, {1, 1, 1},
                       {surd(49, 64, -13, 64), surd(105, 32, -21, 32), real(0)}, surd(47, 128, 45, 128), false,
                       SeriesTarget::Sqrt7OverPi});
        return out;
    }();
    return catalogue;
}

const SeriesSpec& find_series(std::string_view id) {
    for (const auto& s : series_catalogue())
        if (s.id == id) return s;
    throw std::invalid_argument("unknown series id: " + std::string(id));
}

Complex target_value(SeriesTarget t, unsigned digits) {
    PrecisionScope scope(digits);
    const Real pi = boost::math::constants::pi<Real>();
    switch (t) {
        case SeriesTarget::None: return {Real(0), Real(0)};
        case SeriesTarget::EightOverPi2: return {8 / (pi * pi), Real(0)};
        case SeriesTarget::OneOverPi2: return {1 / (pi * pi), Real(0)};
        case SeriesTarget::Sqrt7OverPi: return {sqrt(Real(7)) / pi, Real(0)};
    }
    return {Real(0), Real(0)};
}

WynnResult wynn_epsilon(const std::vector<Complex>& sums) {
    if (sums.empty()) throw std::invalid_argument("wynn_epsilon: no partial sums");
    std::vector<Complex> prev(sums.size() + 1, Complex{Real(0), Real(0)});
    std::vector<Complex> cur = sums;
    std::vector<Complex> even_last{sums.back()};

    for (unsigned col = 1; cur.size() > 1; ++col) {
        std::vector<Complex> next(cur.size() - 1);
        bool degenerate = false;
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            const Complex d = cur[i + 1] - cur[i];
            if (d.re == 0 && d.im == 0) {
                degenerate = true;
                break;
            }
            next[i] = prev[i + 1] + Complex{Real(1), Real(0)} / d;
        }
        if (degenerate) break;
        prev = std::move(cur);
        cur = std::move(next);
        if (col % 2 == 0) even_last.push_back(cur.back());
    }

    if (even_last.size() < 2) return {even_last.back(), Real(std::numeric_limits<double>::infinity())};
    std::size_t best = 1;
    Real best_err = std::numeric_limits<double>::infinity();
    for (std::size_t j = 1; j < even_last.size(); ++j) {
        Real err = abs(even_last[j] - even_last[j - 1]);
        if (j + 1 < even_last.size()) err = std::max(err, Real(abs(even_last[j + 1] - even_last[j])));
        if (isnan(err)) continue;
        if (err < best_err) {
            best_err = err;
            best = j;
        }
    }
    return {even_last[best], best_err};
}

SeriesValue eval_series(const SeriesSpec& spec, unsigned digits) {
    const unsigned wd = digits + 30;
    PrecisionScope scope(wd);

    const bool real_z = sgn(spec.z.im) == 0;
    if (!real_z && spec.z.disc >= 0) throw std::invalid_argument("eval_series: only imaginary quadratic z");
    BigRational z_abs2 = spec.z.re * spec.z.re;
    if (!real_z) z_abs2 -= spec.z.disc * spec.z.im * spec.z.im;
    if (z_abs2 > 1) throw std::invalid_argument("eval_series: |z| > 1, series diverges");

    const Complex wa = to_complex(spec.weight[0]);
    const Complex wb = to_complex(spec.weight[1]);
    const Complex wc = to_complex(spec.weight[2]);
    auto weight_at = [&](unsigned n) {
        const Real rn(n);
        return Complex{wa.re + rn * (wb.re + rn * wc.re), wa.im + rn * (wb.im + rn * wc.im)};
    };

    SeriesValue out;
    out.working_digits = wd;
    if (z_abs2 == 0) {
        out.value = weight_at(0);
        out.error_bound = 0;
        out.terms = 1;
        return out;
    }

    PochRatio ratio(spec.num_params, spec.den_params);
    Real zr = to_real(spec.z.re);
    if (spec.alternating) zr = -zr;
    std::optional<ExactPower> exact;
    if (!real_z) exact.emplace(spec.z, spec.alternating);
    Real zpow = 1;
    auto power = [&]() { return exact ? exact->value() : Complex{zpow, Real(0)}; };
    auto advance = [&](unsigned n) {
        ratio.advance(n);
        if (exact)
            exact->advance();
        else
            zpow *= zr;
    };
    auto term_at = [&](unsigned n) {
        const Complex w = weight_at(n);
        const Complex zp = power();
        const Complex t = w * zp;
        return Complex{t.re * ratio.value(), t.im * ratio.value()};
    };

    if (z_abs2 < 1) {
        TailRule rule{sqrt(to_real(z_abs2)), ten_to_minus(digits + 2)};
        Complex sum{Real(0), Real(0)};
        for (unsigned n = 0; n < kMaxDirectTerms; ++n) {
            const Complex t = term_at(n);
            sum = sum + t;
            if (rule.done(abs(t), n)) {
                out.value = sum;
                out.error_bound = rule.tail + ten_to_minus(wd - 10);
                out.terms = n + 1;
                out.method = SeriesMethod::Direct;
                return out;
            }
            advance(n);
        }
        throw NoConvergence("eval_series: direct summation did not reach the tail bound");
    }

    if (real_z && spec.z.re == (spec.alternating ? -1 : 1))
        throw std::invalid_argument("eval_series: z = 1 is outside the acceleration path");

    std::vector<Complex> sums;
    Complex sum{Real(0), Real(0)};
    const unsigned max_terms = kWynnTerms[std::size(kWynnTerms) - 1];
    for (unsigned n = 0; n < max_terms; ++n) {
        sum = sum + term_at(n);
        sums.push_back(sum);
        advance(n);
    }
    const Real tol = ten_to_minus(digits);
    WynnResult best{sums.back(), Real(std::numeric_limits<double>::infinity())};
    for (unsigned n_terms : kWynnTerms) {
        const std::vector<Complex> prefix(sums.begin(), sums.begin() + n_terms);
        WynnResult w = wynn_epsilon(prefix);
        w.error += ten_to_minus(wd - 10);
        out.terms = n_terms;
        if (w.error < best.error) best = w;
        if (w.error < tol) break;
    }
    if (!(best.error < tol))
        throw NoConvergence("eval_series: Wynn epsilon stalled at error " + best.error.str(6, std::ios::scientific));
    out.value = best.estimate;
    out.error_bound = best.error;
    out.method = SeriesMethod::Wynn;
    return out;
}

Real hypergeometric_pfq(const std::vector<Frac>& a, const std::vector<Frac>& b, const Real& w, unsigned digits) {
    PrecisionScope scope(digits + 10);
    if (!(abs(w) < 1)) throw std::invalid_argument("hypergeometric_pfq: |w| < 1 required");
    std::vector<Frac> lower = b;
    lower.push_back(Frac(1));  // the n! of the pFq convention
    PochRatio ratio(a, lower);
    TailRule rule{abs(w), ten_to_minus(digits + 2)};
    Real sum = 0, wpow = 1;
    for (unsigned n = 0; n < kMaxDirectTerms; ++n) {
        const Real t = ratio.value() * wpow;
        sum += t;
        if (rule.done(abs(t), n)) return sum;
        ratio.advance(n);
        wpow *= w;
    }
    throw NoConvergence("hypergeometric_pfq: tail bound not reached");
}

QuadraticReport quadratic_transform_check(double z, double tolerance) {
    if (!(z > -1 && z < 0)) throw std::invalid_argument("quadratic_transform_check: -1 < z < 0 required");
    constexpr unsigned digits = 30;
    PrecisionScope scope(digits + 10);
    const Frac h(1, 2);
    const Real zr(z);
    const Real w = -4 * zr / ((1 - zr) * (1 - zr));
    QuadraticReport r;
    r.z = z;
    r.lhs = hypergeometric_pfq({h, h, h}, {1, 1}, zr, digits);
    r.rhs = hypergeometric_pfq({Frac(1, 4), h, Frac(3, 4)}, {1, 1}, w, digits) / sqrt(1 - zr);
    r.difference = abs(r.lhs - r.rhs);
    r.agree = r.difference < tolerance;
    return r;
}

bool normalized(const DualityPoint& pt, double tolerance) {
    const double lhs = pt.tau * pt.tau;
    const double rhs = pt.c * pt.c / (1 + pt.z);
    return std::abs(lhs - rhs) <= tolerance * std::max(1.0, std::abs(lhs));
}

DualityPoint duality_map(const DualityPoint& src) {
    if (!(src.z > 0)) throw std::domain_error("duality_map: z > 0 required");
    if (!(src.tau > 0)) throw std::domain_error("duality_map: tau > 0 required");
    const double k1 = src.k + 1;
    const double d = 4 * src.tau * src.tau - k1 * k1;
    const double scale = std::max(4 * src.tau * src.tau, k1 * k1);
    if (std::abs(d) <= 1e-12 * scale) throw SingularDuality("duality_map: 4 tau^2 = (k+1)^2");
    if (d < 0) throw std::domain_error("duality_map: dual tau would be negative");

    const double ratio = 8 / d;  // tau2/tau1 = (k2+1)/(k1+1)
    const double s = std::sqrt(src.z);
    DualityPoint dst;
    dst.k = 8 * k1 / d - 1;
    dst.tau = ratio * src.tau;
    dst.z = 1 / src.z;
    dst.c = ratio * src.c / s;
    dst.b = ratio * (src.c - src.b) / s;
    dst.a = ratio * (src.c - 2 * src.b + 4 * src.a) / (4 * s);

    const double k2 = dst.k + 1;
    const double tol = 1e-12 * std::max({1.0, std::abs(k1 * dst.tau), std::abs(4 * src.tau * dst.tau)});
    if (std::abs(k1 * dst.tau - k2 * src.tau) > tol || std::abs(k1 * k2 + 8 - 4 * src.tau * dst.tau) > tol)
        throw std::logic_error("duality_map: tau-k relations violated on output");
    return dst;
}

ExactDuality duality_map_exact(const BigRational& tau_sq, const BigRational& k, const BigRational& sqrt_z,
                               const BigRational& a, const BigRational& b, const BigRational& c) {
    if (sgn(sqrt_z) <= 0) throw std::domain_error("duality_map_exact: sqrt(z) > 0 required");
    const BigRational k1 = k + 1;
    const BigRational d = 4 * tau_sq - k1 * k1;
    if (sgn(d) == 0) throw SingularDuality("duality_map_exact: 4 tau^2 = (k+1)^2");
    ExactDuality out;
    out.tau_ratio = 8 / d;
    out.k = 8 * k1 / d - 1;
    out.z = 1 / (sqrt_z * sqrt_z);
    out.c = out.tau_ratio * c / sqrt_z;
    out.b = out.tau_ratio * (c - b) / sqrt_z;
    out.a = out.tau_ratio * (c - 2 * b + 4 * a) / (4 * sqrt_z);
    return out;
}

}  // namespace supercong

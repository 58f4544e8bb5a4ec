#include "supercong/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "supercong/hypersum.hpp"
#include "supercong/oracle.hpp"
#include "supercong/primes.hpp"

namespace supercong {

std::string_view to_string(Route r) { return r == Route::Modular ? "modular" : "oracle"; }

namespace {

std::vector<CheckInfo> build_registry() {
    std::vector<CheckInfo> out;
    for (const auto& spec : congruence_specs()) {
        CheckInfo info;
        info.id = spec.id;
        info.kind = CheckKind::Congruence;
        info.status = spec.status;
        info.mod_exp = spec.mod_exp;
        info.p_min = spec.p_min;
        info.condition = "p>" + std::to_string(spec.p_min == 3 ? 2 : spec.p_min - 2);
        info.description = "truncated sum == rhs (mod p^" + std::to_string(spec.mod_exp) + ")";
        out.push_back(std::move(info));
    }
    for (const auto& lemma : lemma_checks()) out.push_back(lemma.info);
    return out;
}

const LemmaCheck* find_lemma(std::string_view id) {
    if (id == "morley") id = "st3-3";
    for (const auto& l : lemma_checks())
        if (l.info.id == id) return &l;
    return nullptr;
}

CheckResult blank_result(const CheckInfo& info, std::uint32_t p) {
    CheckResult r;
    r.id = info.id;
    r.p = p;
    r.mod_exp = info.mod_exp;
    r.modulus = PadicCtx(p, info.mod_exp).pk();
    return r;
}

CheckResult finish(CheckResult r, const Residues& res, Route route) {
    r.lhs = res.lhs;
    r.rhs = res.rhs;
    r.pass = res.lhs == res.rhs;
    r.route = route;
    return r;
}

/// Skip reason from the stated bound or a lemma's own admissibility rule.
std::optional<std::string> admissibility(const CheckInfo& info, std::uint32_t p) {
    if (p < info.p_min) return info.condition;
    if (info.kind == CheckKind::Lemma) return find_lemma(info.id)->inadmissible(p);
    return std::nullopt;
}

}  // namespace

const std::vector<CheckInfo>& check_registry() {
    static const std::vector<CheckInfo> registry = build_registry();
    return registry;
}

const CheckInfo& find_check(std::string_view id) {
    if (const auto* spec = try_find_congruence(id)) id = spec->id;
    if (const auto* lemma = find_lemma(id)) id = lemma->info.id;
    const auto& reg = check_registry();
    const auto it = std::find_if(reg.begin(), reg.end(), [&](const auto& c) { return c.id == id; });
    if (it == reg.end()) throw UnknownCheckId("unknown check id: " + std::string(id));
    return *it;
}

CheckResult run_check(std::string_view id, std::uint32_t p) {
    const CheckInfo& info = find_check(id);
    CheckResult r = blank_result(info, p);
    if (auto reason = admissibility(info, p)) {
        r.skipped = std::move(reason);
        return r;
    }
    if (info.kind == CheckKind::Congruence) {
        const CongruenceSpec& spec = find_congruence(info.id);
        try {
            return finish(r, {eval_sum_mod(spec, p).residue(), rhs_residue(spec, p).residue()},
                          Route::Modular);
        } catch (const SkipError& e) {
            r.skipped = e.reason();
            return r;
        }
    }
    return finish(r, find_lemma(info.id)->modular(p), Route::Modular);
}

CheckResult run_check_exact(std::string_view id, std::uint32_t p) {
    const CheckInfo& info = find_check(id);
    CheckResult r = blank_result(info, p);
    if (auto reason = admissibility(info, p)) {
        r.skipped = std::move(reason);
        return r;
    }
    if (info.kind == CheckKind::Lemma) return finish(r, find_lemma(info.id)->exact(p), Route::Oracle);

    const CongruenceSpec& spec = find_congruence(info.id);
    const PadicCtx ctx(p, spec.mod_exp);
    BigRational rhs = make_rational(spec.rhs.coeff) * pow(make_rational(static_cast<long>(p)), spec.rhs.p_exp);
    if (spec.rhs.disc) rhs *= legendre(*spec.rhs.disc, p);
    return finish(r, {reduce_mod(sum_exact(spec, p), ctx).residue(), reduce_mod(rhs, ctx).residue()},
                  Route::Oracle);
}

unsigned default_thread_count() {
    if (const char* env = std::getenv("SUPERCONG_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return static_cast<unsigned>(n);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

/// Runs fn(i) for i in [0, n) over a shared atomic cursor.
template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < n;) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace

SweepReport sweep(std::string_view id, std::uint32_t p_lo, std::uint32_t p_hi, bool parallel) {
    const CheckInfo& info = find_check(id);
    const auto start = std::chrono::steady_clock::now();
    SweepReport report;
    report.id = info.id;
    report.status = info.status;
    report.p_lo = p_lo;
    report.p_hi = p_hi;

    const auto primes = primes_in_range(std::max<std::uint32_t>(p_lo, 3), p_hi);
    report.results.resize(primes.size());
    parallel_for(primes.size(), parallel ? default_thread_count() : 1u, [&](std::size_t i) {
        CheckResult r = run_check(info.id, primes[i]);
        if (r.skipped && *r.skipped == kNotPIntegralParams) r = run_check_exact(info.id, primes[i]);
        report.results[i] = std::move(r);
    });

    for (const auto& r : report.results) {
        if (r.skipped) {
            ++report.skipped;
            continue;
        }
        if (r.route == Route::Oracle) ++report.rerouted;
        if (r.pass) {
            ++report.pass;
        } else {
            ++report.fail;
            report.failures.push_back(r);
        }
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<SweepReport> verify_all(std::uint32_t p_hi, bool parallel) {
    std::vector<SweepReport> out;
    for (const auto& info : check_registry()) out.push_back(sweep(info.id, 3, p_hi, parallel));
    return out;
}

}  // namespace supercong

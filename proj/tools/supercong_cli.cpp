// supercong: sweeps, single checks, WZ certification and series evaluation.
//
// Exit status: 0 when everything passes, 1 on any failing check, 2 on a
// usage or configuration error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "supercong/hypersum.hpp"
#include "supercong/oracle.hpp"
#include "supercong/primes.hpp"
#include "supercong/series.hpp"
#include "supercong/suite.hpp"
#include "supercong/wz.hpp"

namespace sc = supercong;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SweepOptions {
    std::vector<std::string> checks;
    std::uint32_t p_lo = 3;
    std::uint32_t p_hi = 100;
    bool json = false;
    bool serial = false;
};

std::vector<std::string> resolve_checks(const std::vector<std::string>& names) {
    std::vector<std::string> ids;
    for (const auto& name : names) {
        if (name == "ALL" || name == "all") {
            for (const auto& info : sc::check_registry()) ids.push_back(info.id);
            continue;
        }
        try {
            ids.push_back(sc::find_check(name).id);
        } catch (const sc::UnknownCheckId& e) {
            throw ConfigError(e.what());
        }
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

std::string modulus_string(const sc::CheckResult& r) {
    return std::to_string(r.p) + "^" + std::to_string(r.mod_exp);
}

json to_json(const sc::CheckResult& r) {
    json j;
    j["check"] = r.id;
    j["p"] = r.p;
    j["modulus"] = modulus_string(r);
    j["lhs"] = sc::to_string(r.lhs);
    j["rhs"] = sc::to_string(r.rhs);
    j["pass"] = !r.skipped && r.pass;
    j["skipped"] = r.skipped ? json(*r.skipped) : json(nullptr);
    j["route"] = std::string(sc::to_string(r.route));
    return j;
}

void print_result_line(const sc::CheckResult& r) {
    std::cout << "  " << r.id << " p=" << r.p << ": ";
    if (r.skipped) {
        std::cout << "skipped (" << *r.skipped << ")\n";
        return;
    }
    std::cout << (r.pass ? "pass" : "FAIL") << "  lhs=" << sc::to_string(r.lhs) << " rhs=" << sc::to_string(r.rhs)
              << " (mod " << modulus_string(r) << ")";
    if (r.route == sc::Route::Oracle) std::cout << " [oracle]";
    std::cout << "\n";
}

void print_report_summary(const sc::SweepReport& rep) {
    std::printf("%-22s %-11s p in [%u,%u]  pass %zu  fail %zu  skipped %zu  oracle %zu  %.2fs\n", rep.id.c_str(),
                std::string(sc::to_string(rep.status)).c_str(), rep.p_lo, rep.p_hi, rep.pass, rep.fail, rep.skipped,
                rep.rerouted, rep.seconds);
}

/// Emits reports sorted by (check, p); returns the exit code.
int emit(const std::vector<sc::SweepReport>& reports, bool as_json, bool verbose_skips) {
    std::size_t failures = 0;
    if (as_json) {
        std::vector<const sc::CheckResult*> all;
        for (const auto& rep : reports)
            for (const auto& r : rep.results) all.push_back(&r);
        std::sort(all.begin(), all.end(), [](const auto* a, const auto* b) {
            return std::tie(a->id, a->p) < std::tie(b->id, b->p);
        });
        for (const auto* r : all) std::cout << to_json(*r).dump() << "\n";
        for (const auto& rep : reports) failures += rep.fail;
        return failures ? kExitFail : kExitPass;
    }
    for (const auto& rep : reports) {
        print_report_summary(rep);
        for (const auto& r : rep.results)
            if ((r.skipped && verbose_skips) || (!r.skipped && !r.pass)) print_result_line(r);
        failures += rep.fail;
    }
    return failures ? kExitFail : kExitPass;
}

int cmd_sweep(const SweepOptions& opt) {
    if (opt.p_lo > opt.p_hi) throw ConfigError("--pmin must not exceed --pmax");
    const auto ids = resolve_checks(opt.checks.empty() ? std::vector<std::string>{"ALL"} : opt.checks);
    std::vector<sc::SweepReport> reports;
    for (const auto& id : ids) reports.push_back(sc::sweep(id, opt.p_lo, opt.p_hi, !opt.serial));
    return emit(reports, opt.json, true);
}

int cmd_verify_all(const SweepOptions& opt) {
    if (opt.p_hi < 3) throw ConfigError("--pmax must be at least 3");
    const auto reports = sc::verify_all(opt.p_hi, !opt.serial);
    const int code = emit(reports, opt.json, false);

    std::size_t counts[2][3] = {};  // [proven, conjectural][checks, pass, fail]
    for (const auto& rep : reports) {
        auto& c = counts[rep.status == sc::Status::Proven ? 0 : 1];
        ++c[0];
        c[1] += rep.pass;
        c[2] += rep.fail;
    }
    std::ostream& out = opt.json ? std::cerr : std::cout;
    out << "PROVEN:      " << counts[0][0] << " checks, " << counts[0][1] << " passing instances, " << counts[0][2]
        << " failures\n";
    out << "CONJECTURAL: " << counts[1][0] << " checks, " << counts[1][1] << " passing instances, " << counts[1][2]
        << " failures\n";
    if (counts[1][2]) out << "FINDING: a conjectural congruence failed at some prime (see above)\n";
    out << (code == kExitPass ? "ALL PASS" : "FAILURES PRESENT") << "\n";
    return code;
}

sc::BigRational parse_rational(const std::string& text) {
    sc::BigRational x;
    if (x.set_str(text, 10) != 0 || x.get_den() == 0) throw ConfigError("not a rational number: " + text);
    x.canonicalize();
    return x;
}

int cmd_wz(const std::string& pair_name, long grid, const std::string& x_text) {
    if (grid < 1) throw ConfigError("--grid must be at least 1");
    std::vector<sc::WzPairId> ids;
    if (pair_name == "ALL" || pair_name == "all") {
        ids = {sc::WzPairId::Lemma3, sc::WzPairId::J1, sc::WzPairId::J2, sc::WzPairId::J4};
    } else if (auto id = sc::parse_wz_pair(pair_name)) {
        ids.push_back(*id);
    } else {
        throw ConfigError("unknown WZ pair: " + pair_name);
    }
    const sc::BigRational x = parse_rational(x_text);
    if (x == 0 || x == 1) throw ConfigError("--x must avoid 0 and 1");

    bool all_pass = true;
    for (auto id : ids) {
        const auto rep = sc::check_pair(sc::WzPair::from_id(id, x), grid, grid);
        std::cout << sc::to_string(id) << " grid n<=" << rep.n_max << " k<=" << rep.k_max;
        if (rep.x) std::cout << " x=" << sc::to_string(*rep.x);
        std::cout << ": " << (rep.all_pass ? "all pass" : "FAIL") << "\n";
        if (rep.counterexample) {
            const auto& c = *rep.counterexample;
            std::cout << "  first counterexample n=" << c.n << " k=" << c.k << " lhs=" << sc::to_string(c.lhs)
                      << " rhs=" << sc::to_string(c.rhs);
            if (!c.note.empty()) std::cout << " (" << c.note << ")";
            std::cout << "\n";
        }
        all_pass = all_pass && rep.all_pass;
    }
    return all_pass ? kExitPass : kExitFail;
}

std::string fmt(const sc::Real& x, unsigned digits, bool sci = false) {
    return x.str(static_cast<std::streamsize>(digits), sci ? std::ios::scientific : std::ios::fmtflags{});
}

int cmd_series(const std::string& id, unsigned digits) {
    if (digits < 15) throw ConfigError("--digits must be at least 15");
    const sc::SeriesSpec* spec = nullptr;
    try {
        spec = &sc::find_series(id);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    const auto val = sc::eval_series(*spec, digits);
    sc::PrecisionScope scope(val.working_digits);
    const auto target = sc::target_value(spec->target, val.working_digits);
    const sc::Real diff = sc::abs(val.value - target);
    std::cout << "series   " << spec->id << "\n";
    std::cout << "value    " << fmt(val.value.re, digits);
    if (val.value.im != 0) std::cout << (val.value.im < 0 ? " - " : " + ") << fmt(abs(val.value.im), digits) << "i";
    std::cout << "\n";
    std::cout << "target   " << sc::to_string(spec->target) << " = " << fmt(target.re, digits) << "\n";
    std::cout << "|diff|   " << fmt(diff, 3, true) << "\n";
    std::cout << "error    " << fmt(val.error_bound, 3, true) << " ("
              << (val.method == sc::SeriesMethod::Wynn ? "wynn epsilon" : "direct") << ", " << val.terms
              << " terms, " << val.working_digits << " working digits)\n";
    const sc::Real tol = pow(sc::Real(10), -static_cast<long>(spec->target == sc::SeriesTarget::Sqrt7OverPi ? 6 : digits - 5));
    return diff < tol ? kExitPass : kExitFail;
}

int cmd_oracle(const std::string& name, std::uint32_t p) {
    if (!sc::is_prime(p) || p < 3) throw ConfigError("--p must be an odd prime");
    const sc::CheckInfo* info = nullptr;
    try {
        info = &sc::find_check(name);
    } catch (const sc::UnknownCheckId& e) {
        throw ConfigError(e.what());
    }
    const auto r = sc::run_check_exact(info->id, p);
    if (r.skipped) {
        std::cout << info->id << " at p=" << p << ": skipped (" << *r.skipped << ")\n";
        return kExitPass;
    }
    const std::string mod = "(mod " + sc::to_string(r.modulus) + ")";
    if (info->kind == sc::CheckKind::Congruence) {
        const auto& spec = sc::find_congruence(info->id);
        const sc::BigRational s = sc::sum_exact(spec, p);
        std::cout << info->id << " at p=" << p << " (" << (spec.limit == sc::Limit::Half ? "half" : "full")
                  << " sum)\n";
        std::cout << "  sum = " << sc::to_string(s) << " ≡ " << sc::to_string(r.lhs) << " " << mod << "\n";
        std::cout << "  rhs ≡ " << sc::to_string(r.rhs) << " " << mod << "\n";
    } else {
        std::cout << info->id << " at p=" << p << "\n";
        std::cout << "  lhs ≡ " << sc::to_string(r.lhs) << ", rhs ≡ " << sc::to_string(r.rhs) << " " << mod << "\n";
    }
    std::cout << "  " << (r.pass ? "pass" : "FAIL") << "\n";
    return r.pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of Ramanujan-type supercongruences"};
    app.require_subcommand(1);

    SweepOptions sweep_opt;
    auto* sweep = app.add_subcommand("sweep", "run checks over a prime range");
    sweep->add_option("--check", sweep_opt.checks, "check ids, or ALL");
    sweep->add_option("--pmin", sweep_opt.p_lo, "smallest prime")->capture_default_str();
    sweep->add_option("--pmax", sweep_opt.p_hi, "largest prime")->capture_default_str();
    sweep->add_flag("--json", sweep_opt.json, "JSON lines, one per (check, prime)");
    sweep->add_flag("--serial", sweep_opt.serial, "single thread");

    SweepOptions all_opt;
    all_opt.p_hi = 200;
    auto* verify = app.add_subcommand("verify-all", "sweep every registered check");
    verify->add_option("--pmax", all_opt.p_hi, "largest prime")->capture_default_str();
    verify->add_flag("--json", all_opt.json, "JSON lines, one per (check, prime)");
    verify->add_flag("--serial", all_opt.serial, "single thread");

    std::string pair = "ALL";
    long grid = 12;
    std::string x_text = "1/3";
    auto* wz = app.add_subcommand("wz", "verify WZ pairs on a grid");
    wz->add_option("--pair", pair, "LEMMA3, J1, J2, J4 or ALL")->capture_default_str();
    wz->add_option("--grid", grid, "grid bound for n and k")->capture_default_str();
    wz->add_option("--x", x_text, "rational parameter of LEMMA3")->capture_default_str();

    std::string series_id;
    unsigned digits = 30;
    auto* series = app.add_subcommand("series", "evaluate a catalogued series");
    series->add_option("--id", series_id, "series id")->required();
    series->add_option("--digits", digits, "target precision in decimal digits")->capture_default_str();

    std::string oracle_check;
    std::uint32_t oracle_p = 0;
    auto* oracle = app.add_subcommand("oracle", "exact rational evaluation of one check");
    oracle->add_option("--check", oracle_check, "check id")->required();
    oracle->add_option("--p", oracle_p, "odd prime")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitConfig;
    }

    try {
        if (*sweep) return cmd_sweep(sweep_opt);
        if (*verify) return cmd_verify_all(all_opt);
        if (*wz) return cmd_wz(pair, grid, x_text);
        if (*series) return cmd_series(series_id, digits);
        if (*oracle) return cmd_oracle(oracle_check, oracle_p);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitConfig;
}

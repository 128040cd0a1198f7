// Command-line front end: Hilbert-scheme classes, moduli parameter packs,
// stable-range Betti tails, the chi-independence verification suite, and
// cache management.

#include "motivic/hilb.hpp"
#include "motivic/lpoly.hpp"
#include "motivic/moduli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <memory>
#include <string>

namespace {

using json = nlohmann::ordered_json;
using namespace motivic;

constexpr const char* kSchemaVersion = "1";
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

json envelope(const std::string& command, json inputs, json result,
              const std::vector<std::string>& warnings) {
    json env;
    env["schema_version"] = kSchemaVersion;
    env["command"] = command;
    env["inputs"] = std::move(inputs);
    env["result"] = std::move(result);
    env["warnings"] = warnings;
    return env;
}

json lpoly_json(const LPoly& p) { return json::parse(p.to_json_text()); }

json params_json(const ModuliParams& p) {
    json j;
    j["d"] = p.d;
    j["chi"] = p.chi;
    j["chi0"] = p.chi0;
    j["rho"] = p.rho;
    j["dbar"] = p.dbar;
    j["shift"] = p.shift;
    j["dim_m"] = p.dim_m;
    j["level_scheme"] = p.level_scheme;
    j["stable_threshold"] = p.stable_threshold;
    j["coprime"] = p.coprime;
    return j;
}

void emit(const json& env, const std::string& format) {
    if (format == "json") std::cout << env.dump() << "\n";
}

int cmd_hilb(int n, const std::string& format, HilbCache& cache) {
    LPoly h = cache.get(n);
    mpz_class e = euler_oracle(n);
    bool pal = h.is_palindromic(0, 2L * n);
    if (format == "plain") {
        std::cout << h.to_string() << " (euler " << e.get_str()
                  << (h.eval_at_one() == e ? ", matches oracle" : ", ORACLE MISMATCH")
                  << (pal ? ", palindromic" : ", NOT palindromic") << ")\n";
    } else {
        json res;
        res["class"] = lpoly_json(h);
        res["euler"] = e.get_str();
        res["euler_matches_oracle"] = (h.eval_at_one() == e);
        res["palindromic"] = pal;
        emit(envelope("hilb", json{{"n", n}}, res, {}), format);
    }
    return kExitOk;
}

int cmd_euler(int n, const std::string& format, HilbCache& cache) {
    mpz_class e = euler_oracle(n);
    auto cached = cache.lookup(n);
    if (format == "plain") {
        std::cout << e.get_str();
        if (cached)
            std::cout << (cached->eval_at_one() == e ? " (matches hilb_class)"
                                                     : " (MISMATCH with hilb_class)");
        std::cout << "\n";
    } else {
        json res;
        res["euler"] = e.get_str();
        if (cached) res["matches_hilb_class"] = (cached->eval_at_one() == e);
        emit(envelope("euler", json{{"n", n}}, res, {}), format);
    }
    return kExitOk;
}

int cmd_moduli(int d, long chi, const std::string& format, HilbCache& cache) {
    MotivicTail t = motivic_tail(d, chi, cache);
    std::vector<std::string> warnings;
    if (t.vacuous) warnings.push_back("vacuous range: no cohomological degree is determined");
    if (t.semistable_only)
        warnings.push_back("semistable_only: gcd(d,chi) > 1, tail describes M^ss; "
                           "no Betti table (moduli space may be singular)");

    if (format == "plain") {
        const auto& p = t.params;
        std::cout << "d=" << p.d << " chi=" << p.chi << " chi0=" << p.chi0
                  << " rho=" << p.rho << " dbar=" << p.dbar << " shift=" << p.shift
                  << " dimM=" << p.dim_m << " level=" << p.level_scheme
                  << " stable_threshold=" << p.stable_threshold << "\n";
        for (const auto& w : warnings) std::cout << "warning: " << w << "\n";
        if (!t.vacuous) {
            std::cout << "tail (degrees " << t.level + 1 << ".." << p.dim_m
                      << "): " << t.tail.to_string() << "\n";
            if (p.coprime) {
                BettiTail bt = betti_tail(d, chi, cache);
                for (const auto& [i, b] : bt.entries)
                    std::cout << "b_" << i << " = " << b.get_str() << "\n";
                for (const auto& [pp, h] : bt.hodge_diag)
                    std::cout << "h^{" << pp << "," << pp << "} = " << h.get_str() << "\n";
            }
        }
    } else {
        json res;
        res["params"] = params_json(t.params);
        res["level"] = t.level;
        res["tail"] = lpoly_json(t.tail);
        res["semistable_only"] = t.semistable_only;
        res["vacuous"] = t.vacuous;
        if (!t.vacuous && t.params.coprime) {
            BettiTail bt = betti_tail(d, chi, cache);
            json betti = json::object();
            for (const auto& [i, b] : bt.entries) betti[std::to_string(i)] = b.get_str();
            json hodge = json::object();
            for (const auto& [pp, h] : bt.hodge_diag) hodge[std::to_string(pp)] = h.get_str();
            res["betti"] = betti;
            res["hodge_diag"] = hodge;
        }
        emit(envelope("moduli", json{{"d", d}, {"chi", chi}}, res, warnings), format);
    }
    return kExitOk;
}

int cmd_verify(int d_min, int d_max, const std::string& format, HilbCache& cache) {
    bool all_pass = true;
    json per_d = json::array();
    for (int d = d_min; d <= d_max; ++d) {
        ChiIndependenceReport rep = verify_chi_independence(d, cache);
        all_pass = all_pass && rep.passed;
        if (format == "plain") {
            std::cout << "d=" << d << " level=" << rep.level << " "
                      << (rep.passed ? (rep.vacuous ? "pass (vacuous)" : "pass") : "FAIL");
            if (rep.first_discrepant_degree)
                std::cout << " first discrepant degree " << *rep.first_discrepant_degree;
            std::cout << "\n";
        } else {
            json r;
            r["d"] = d;
            r["level"] = rep.level;
            r["chi0_window"] = rep.chi0_values;
            r["passed"] = rep.passed;
            r["vacuous"] = rep.vacuous;
            if (rep.first_discrepant_degree)
                r["first_discrepant_degree"] = *rep.first_discrepant_degree;
            per_d.push_back(std::move(r));
        }
    }
    if (format == "json")
        emit(envelope("verify", json{{"d_min", d_min}, {"d_max", d_max}},
                      json{{"all_passed", all_pass}, {"reports", per_d}}, {}),
             format);
    return all_pass ? kExitOk : kExitVerifyFailed;
}

int cmd_cache_info(const std::string& format, HilbCache& cache) {
    if (format == "plain") {
        std::cout << "cache file: " << cache.file_path().string() << "\n"
                  << "max cached n: " << cache.max_cached() << "\n";
    } else {
        json res;
        res["file"] = cache.file_path().string();
        res["max_cached_n"] = cache.max_cached();
        res["version"] = kHilbCacheVersion;
        emit(envelope("cache info", json::object(), res, {}), format);
    }
    return kExitOk;
}

// "a..b", both ends inclusive.
bool parse_range(const std::string& text, int& lo, int& hi) {
    auto pos = text.find("..");
    try {
        if (pos == std::string::npos) {
            lo = hi = std::stoi(text);
        } else {
            lo = std::stoi(text.substr(0, pos));
            hi = std::stoi(text.substr(pos + 2));
        }
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Motivic classes of Hilbert schemes of plane points and "
                 "stable-range Betti numbers of moduli of one-dimensional sheaves"};
    app.require_subcommand(1);

    std::string format = "plain";
    std::string cache_dir;
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"plain", "json"}));
    app.add_option("--cache-dir", cache_dir,
                   "Cache directory (overrides MOTIVIC_CACHE_DIR)");

    int n = 0;
    auto* hilb = app.add_subcommand("hilb", "Motivic class of Hilb^n(P^2)");
    hilb->add_option("--n", n, "Number of points")->required()->check(CLI::NonNegativeNumber);

    auto* euler = app.add_subcommand("euler", "Triple-partition Euler oracle");
    euler->add_option("--n", n, "Number of points")->required()->check(CLI::NonNegativeNumber);

    int d = 0;
    long chi = 0;
    auto* moduli = app.add_subcommand("moduli", "Parameters and stable tail of M(d,chi)");
    moduli->add_option("--d", d, "First Chern class degree")->required()->check(CLI::PositiveNumber);
    moduli->add_option("--chi", chi, "Euler characteristic")->required();

    std::string d_range;
    auto* verify = app.add_subcommand("verify", "Chi-independence of stable tails");
    verify->add_option("--d", d_range, "Degree or range a..b (a >= 3)")->required();

    auto* cache_cmd = app.add_subcommand("cache", "Cache management");
    auto* cache_info = cache_cmd->add_subcommand("info", "Show cache location and extent");
    auto* cache_clear = cache_cmd->add_subcommand("clear", "Remove the cache file");
    cache_cmd->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        HilbCache cache(resolve_cache_dir(cache_dir));
        if (hilb->parsed()) return cmd_hilb(n, format, cache);
        if (euler->parsed()) return cmd_euler(n, format, cache);
        if (moduli->parsed()) return cmd_moduli(d, chi, format, cache);
        if (verify->parsed()) {
            int lo = 0, hi = 0;
            if (!parse_range(d_range, lo, hi) || lo < 3 || lo > hi) {
                std::cerr << "verify: --d must be a range a..b with 3 <= a <= b\n";
                return kExitUsage;
            }
            return cmd_verify(lo, hi, format, cache);
        }
        if (cache_info->parsed()) return cmd_cache_info(format, cache);
        if (cache_clear->parsed()) {
            cache.clear();
            if (format == "json")
                emit(envelope("cache clear", json::object(), json{{"cleared", true}}, {}),
                     format);
            else
                std::cout << "cache cleared\n";
            return kExitOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

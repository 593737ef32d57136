// SPDX-License-Identifier: Apache-2.0
//
// certmass: certified masses of S2xS2, G(2,4) and RP2xRP2.
//
// Exit codes: 0 success, 1 verification failure (or internal error),
// 2 usage error.

#include "certmass/cache.hpp"
#include "certmass/integrals.hpp"
#include "certmass/mass.hpp"
#include "certmass/report.hpp"
#include "certmass/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace certmass;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string manifold = "s2xs2";
    unsigned n = 40;
    std::string n_list;
    int digits = 6;
    std::string format = "text";
    std::string mode = "certified";
    bool certified_output = false;
    int threads = 0;
    std::string cache_dir;
    bool no_cache = false;
    std::string suite = "all";
    double tol = 1e-6;
    std::string cache_action;
};

std::vector<Manifold> selected(const std::string& name)
{
    if (name == "all")
        return {std::begin(kAllManifolds), std::end(kAllManifolds)};
    return {*parse_manifold(name)};
}

// "1,2,5" or "1..5" or a mix of both.
std::vector<unsigned> parse_n_list(const std::string& text)
{
    std::vector<unsigned> out;
    std::stringstream ss(text);
    std::string item;
    const auto number = [](const std::string& s) -> unsigned {
        std::size_t used = 0;
        long v = -1;
        try {
            v = std::stol(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != s.size() || s.empty() || v < 1)
            throw UsageError("bad --n-list entry '" + s + "'");
        return static_cast<unsigned>(v);
    };
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(number(item));
            continue;
        }
        const unsigned lo = number(item.substr(0, dots));
        const unsigned hi = number(item.substr(dots + 2));
        if (lo > hi)
            throw UsageError("empty range '" + item + "' in --n-list");
        for (unsigned n = lo; n <= hi; ++n)
            out.push_back(n);
    }
    if (out.empty())
        throw UsageError("--n-list is empty");
    return out;
}

class CacheSession {
public:
    explicit CacheSession(const RunConfig& cfg)
    {
        if (cfg.no_cache)
            return;
        dir_ = resolve_cache_dir(cfg.cache_dir);
        if (dir_.empty())
            return;
        const CacheLoadResult r = load_cache(dir_);
        if (!r.warning.empty())
            std::cerr << "warning: " << r.warning << "\n";
        before_ = inner_sum_entries().size() + f_tilde_cache_size();
    }

    // Persists the tables if this run added anything. The moment table is
    // filled up to the largest N touched so the cache carries both tables.
    void finish(unsigned max_n)
    {
        if (dir_.empty())
            return;
        for (unsigned p = 0; p <= max_n; ++p)
            for (unsigned q = 0; q <= max_n; ++q)
                f_tilde(p, q);
        if (inner_sum_entries().size() + f_tilde_cache_size() == before_)
            return;
        std::string warning;
        if (!store_cache(dir_, &warning))
            std::cerr << "warning: cache not written: " << warning << "\n";
    }

private:
    std::filesystem::path dir_;
    std::size_t before_ = 0;
};

json fast_json(Manifold m, unsigned n)
{
    return {{"manifold", std::string(cli_name(m))},
            {"N", n},
            {"mode", "fast"},
            {"sum", partial_sum_fast(m, n)},
            {"bound", rational_json(certified_error_bound(m, n))}};
}

void print_fast(const std::vector<Manifold>& ms, unsigned n, const RunConfig& cfg)
{
    if (cfg.format == "json") {
        json out = json::array();
        for (Manifold m : ms)
            out.push_back(fast_json(m, n));
        std::cout << (ms.size() == 1 ? out.front() : out).dump(2) << "\n";
        return;
    }
    if (cfg.format == "csv")
        std::cout << "manifold,N,sum,bound\n";
    for (Manifold m : ms) {
        const double s = partial_sum_fast(m, n);
        const double b = certified_error_bound(m, n).get_d();
        std::ostringstream line;
        line << std::setprecision(12);
        if (cfg.format == "csv") {
            line << cli_name(m) << ',' << n << ',' << s << ',' << b;
        } else {
            line << display_name(m) << "  N=" << n << "  sum ~ " << s << "  bound " << b
                 << "  (floating point, not certified)";
        }
        std::cout << line.str() << "\n";
    }
}

int cmd_mass(const RunConfig& cfg)
{
    const auto ms = selected(cfg.manifold);
    if (cfg.mode == "fast") {
        print_fast(ms, cfg.n, cfg);
        return kExitOk;
    }
    CacheSession cache(cfg);
    std::vector<MassEstimate> rows;
    for (Manifold m : ms)
        rows.push_back(mass_estimate(m, cfg.n, cfg.digits, cfg.threads));
    cache.finish(cfg.n);

    if (cfg.format == "json") {
        json out = json::array();
        for (const auto& r : rows)
            out.push_back(mass_json(r));
        std::cout << (rows.size() == 1 ? out.front() : out).dump(2) << "\n";
    } else if (cfg.format == "csv") {
        std::cout << csv_header() << "\n";
        for (const auto& r : rows)
            std::cout << csv_row(r) << "\n";
    } else {
        for (std::size_t i = 0; i < rows.size(); ++i)
            std::cout << (i ? "\n" : "") << mass_text(rows[i]);
    }
    return kExitOk;
}

int cmd_convergence(const RunConfig& cfg)
{
    const auto ns = parse_n_list(cfg.n_list);
    const auto ms = selected(cfg.manifold);
    CacheSession cache(cfg);
    std::vector<MassEstimate> rows;
    for (Manifold m : ms)
        for (unsigned n : ns)
            rows.push_back(mass_estimate(m, n, cfg.digits, cfg.threads));
    cache.finish(*std::max_element(ns.begin(), ns.end()));

    if (cfg.format == "json") {
        json out = json::array();
        for (const auto& r : rows) {
            json j = mass_json(r);
            j["width"] = fixed_point(ceil_scaled(r.mass_interval.width(), r.digits + 2), r.digits + 2);
            out.push_back(std::move(j));
        }
        std::cout << out.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        std::cout << csv_header() << "\n";
        for (const auto& r : rows)
            std::cout << csv_row(r) << "\n";
    } else {
        std::cout << convergence_text(rows);
    }
    return kExitOk;
}

int cmd_t0(const RunConfig& cfg)
{
    const auto ms = selected(cfg.manifold);
    CacheSession cache(cfg);
    std::vector<MassEstimate> rows;
    for (Manifold m : ms)
        rows.push_back(mass_estimate(m, cfg.n, cfg.digits, cfg.threads));
    cache.finish(cfg.n);

    std::vector<T0Comparison> comparisons;
    if (rows.size() == 3) {
        comparisons = distinctness_table(rows[0], rows[1], rows[2]);
    } else {
        const RatInterval third = RatInterval::point(make_rational(-1, 3));
        const auto& r = rows.front();
        comparisons.push_back(check_distinct_t0(std::string(display_name(r.manifold)) + " # CP2bar",
                                                "-1/3", third, "-(9m)^-1", r.t0_interval));
    }

    if (cfg.format == "json") {
        json out;
        out["estimates"] = json::array();
        for (const auto& r : rows)
            out["estimates"].push_back({{"manifold", std::string(cli_name(r.manifold))},
                                        {"N", r.n},
                                        {"t0", interval_json(r.t0_interval, r.digits)},
                                        {"t0_double", interval_json(r.t0_double_interval, r.digits)}});
        out["distinctness"] = json::array();
        for (const auto& c : comparisons)
            out["distinctness"].push_back(comparison_json(c, cfg.digits));
        std::cout << out.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        std::cout << "manifold,N,t0_lo,t0_hi,t0_double_lo,t0_double_hi\n";
        for (const auto& r : rows) {
            const auto a = interval_json(r.t0_interval, r.digits);
            const auto b = interval_json(r.t0_double_interval, r.digits);
            std::cout << cli_name(r.manifold) << ',' << r.n << ',' << a["lo"].get<std::string>() << ','
                      << a["hi"].get<std::string>() << ',' << b["lo"].get<std::string>() << ','
                      << b["hi"].get<std::string>() << "\n";
        }
    } else {
        std::cout << t0_text(rows, comparisons);
    }
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg)
{
    std::vector<std::string> suites;
    if (cfg.suite == "all")
        suites = verify_suites();
    else
        suites.push_back(cfg.suite);

    VerifyOptions opts;
    opts.quadrature_tol = cfg.tol;
    bool all_ok = true;
    json out = json::array();
    for (const auto& s : suites) {
        for (const auto& r : run_verify_suite(s, opts)) {
            all_ok = all_ok && r.passed;
            if (cfg.format == "json") {
                out.push_back({{"suite", r.suite}, {"check", r.name}, {"passed", r.passed},
                               {"detail", r.detail}});
                continue;
            }
            std::cout << (r.passed ? "PASS " : "FAIL ") << r.suite << ": " << r.name;
            if (!r.detail.empty())
                std::cout << " [" << r.detail << "]";
            std::cout << "\n";
        }
    }
    if (cfg.format == "json")
        std::cout << out.dump(2) << "\n";
    else
        std::cout << (all_ok ? "all checks passed\n" : "verification FAILED\n");
    return all_ok ? kExitOk : kExitFailure;
}

int cmd_cache(const RunConfig& cfg)
{
    const auto dir = resolve_cache_dir(cfg.cache_dir);
    if (dir.empty())
        throw UsageError("no cache directory: pass --cache-dir or set " + std::string(kCacheDirEnv));
    const auto file = cache_file(dir);

    if (cfg.cache_action == "status") {
        std::cout << "directory  " << dir.string() << "\n";
        if (!std::filesystem::exists(file)) {
            std::cout << "file       (none)\n";
            return kExitOk;
        }
        std::cout << "file       " << file.string() << " (" << std::filesystem::file_size(file)
                  << " bytes)\n";
        const CacheLoadResult r = load_cache(dir);
        if (!r.loaded) {
            std::cout << "status     rejected: " << r.warning << "\n";
            return kExitFailure;
        }
        std::cout << "status     valid, format v" << kCacheFormatVersion << "\n"
                  << "moments    " << r.moments << "\n"
                  << "inner sums " << r.inner_sums << "\n";
        return kExitOk;
    }
    if (cfg.cache_action == "clear") {
        std::error_code ec;
        const bool removed = std::filesystem::remove(file, ec);
        if (ec)
            throw std::runtime_error("cannot remove " + file.string() + ": " + ec.message());
        std::cout << (removed ? "removed " : "nothing to remove at ") << file.string() << "\n";
        return kExitOk;
    }
    // warm
    RunConfig warm = cfg;
    warm.cache_dir = dir.string();
    warm.no_cache = false;
    CacheSession cache(warm);
    ensure_inner_sums(cfg.n, cfg.threads);
    cache.finish(cfg.n);
    std::cout << "cache warmed to N=" << cfg.n << " at " << file.string() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Certified masses of S2xS2, G(2,4) and RP2xRP2"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    app.add_option("--threads", cfg.threads, "Worker threads (0: OpenMP default)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--cache-dir", cfg.cache_dir,
                   std::string("Coefficient cache directory (default: $") + kCacheDirEnv +
                       ", then ~/.cache/certmass)");
    app.add_flag("--no-cache", cfg.no_cache, "Neither read nor write the coefficient cache");

    const std::vector<std::string> manifolds = {"s2xs2", "g24", "rp2xrp2", "all"};
    const auto add_common = [&](CLI::App* sub, bool with_n) {
        sub->add_option("--manifold", cfg.manifold, "s2xs2, g24, rp2xrp2 or all")
            ->check(CLI::IsMember(manifolds));
        if (with_n)
            sub->add_option("--n", cfg.n, "Truncation order N (square j, k <= N)")
                ->check(CLI::Range(1u, 100000u));
        sub->add_option("--digits", cfg.digits, "Decimal places of the printed enclosures")
            ->check(CLI::Range(1, 200));
        sub->add_option("--format", cfg.format, "text, json or csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
    };

    auto* mass = app.add_subcommand("mass", "Certified mass enclosure");
    add_common(mass, true);
    mass->add_option("--mode", cfg.mode, "certified (default) or fast (floating point diagnostics)")
        ->check(CLI::IsMember({"certified", "fast"}));
    mass->add_flag("--certified-output", cfg.certified_output,
                   "Refuse to run unless the output is certified");

    auto* conv = app.add_subcommand("convergence", "Enclosures for a list of truncation orders");
    add_common(conv, false);
    conv->add_option("--n-list", cfg.n_list, "Comma separated N values or ranges, e.g. 1..5,10,20")
        ->required();

    auto* t0 = app.add_subcommand("t0", "-(9m)^-1, -2(9m)^-1 and the distinctness verdicts");
    add_common(t0, true);

    auto* verify = app.add_subcommand("verify", "Run the self-check suites");
    std::vector<std::string> suite_names = verify_suites();
    suite_names.push_back("all");
    verify->add_option("--suite", cfg.suite, "symbolic, integrals, l2norm, quadrature, hand or all")
        ->check(CLI::IsMember(suite_names));
    verify->add_option("--tol", cfg.tol, "Quadrature concordance tolerance")
        ->check(CLI::Range(1e-12, 1.0));
    verify->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* cache = app.add_subcommand("cache", "Inspect or manage the coefficient cache");
    cache->add_option("action", cfg.cache_action, "status, clear or warm")
        ->required()
        ->check(CLI::IsMember({"status", "clear", "warm"}));
    cache->add_option("--n", cfg.n, "Truncation order for warm")->check(CLI::Range(1u, 100000u));

    t0->callback([&] {
        if (!t0->count("--manifold"))
            cfg.manifold = "all";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cfg.certified_output && cfg.mode == "fast")
            throw UsageError("--mode fast cannot produce --certified-output");
        if (*mass)
            return cmd_mass(cfg);
        if (*conv)
            return cmd_convergence(cfg);
        if (*t0)
            return cmd_t0(cfg);
        if (*verify)
            return cmd_verify(cfg);
        return cmd_cache(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

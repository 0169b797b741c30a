#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "covercount/closed_form_hurwitz.hpp"
#include "covercount/errors.hpp"
#include "covercount/partitions.hpp"
#include "covercount/permutation_hurwitz.hpp"
#include "covercount/s_invariants.hpp"
#include "covercount/twos_invariants.hpp"
#include "covercount/verify.hpp"

namespace {

using covercount::Rational;
using nlohmann::json;

// Exit codes: 0 ok, 1 invalid input or usage, 2 a cross-check found a
// mismatch, 3 the work budget was exceeded.
constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitBudget = 3;

bool g_json = false;

json rational_json(const Rational& q) {
    return json{{"num", q.get_num().get_str()},
                {"den", q.get_den().get_str()}};
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
}

void emit_envelope(json envelope) {
    std::cout << envelope.dump(2) << "\n";
}

// Shared knobs for the commands that may enumerate permutations.
struct WorkOptions {
    long long max_work = 100'000'000;
    int threads = 1;

    covercount::WorkBudget budget() const {
        covercount::WorkBudget b;
        b.max_tuples = max_work;
        b.threads = threads;
        return b;
    }

    void attach(CLI::App* cmd) {
        cmd->add_option("--max-work", max_work,
                        "largest number of permutation tuples to visit");
        cmd->add_option("--threads", threads,
                        "worker threads for the enumeration");
    }
};

std::string cache_path_or_env(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("COVERCOUNT_CACHE")) return env;
    return {};
}

int run(int argc, char** argv) {
    CLI::App app{"exact counts of branched covers of the sphere"};
    app.require_subcommand(1);
    int exit_code = kExitOk;

    // ---- hurwitz ---------------------------------------------------
    auto* hz = app.add_subcommand(
        "hurwitz", "count permutation tuples with given cycle types");
    int hz_degree = 0;
    std::vector<std::string> hz_profiles;
    bool hz_connected = false, hz_disconnected = false, hz_marked = false;
    WorkOptions hz_work;
    hz->add_option("--degree", hz_degree, "degree of the cover")->required();
    hz->add_option("--profile", hz_profiles,
                   "ramification profile, comma-separated parts; repeat "
                   "once per branch point");
    hz->add_flag("--connected", hz_connected,
                 "count only transitive tuples");
    hz->add_flag("--disconnected", hz_disconnected,
                 "count all tuples (default)");
    hz->add_flag("--marked", hz_marked,
                 "connected count times the profile automorphisms");
    hz->add_flag("--json", g_json, "emit a JSON envelope");
    hz_work.attach(hz);
    hz->callback([&] {
        if (hz_connected && hz_disconnected)
            throw covercount::BadArguments(
                "--connected and --disconnected are mutually exclusive");
        const auto start = std::chrono::steady_clock::now();
        std::vector<covercount::Partition> profiles;
        for (const auto& text : hz_profiles)
            profiles.push_back(covercount::Partition::parse(text));
        Rational value;
        if (hz_marked) {
            value = covercount::marked_hurwitz(hz_degree, profiles,
                                               hz_work.budget());
        } else {
            covercount::HurwitzQuery q{hz_degree, profiles, hz_connected};
            value = covercount::hurwitz(q, hz_work.budget());
        }
        if (g_json) {
            json key{{"degree", hz_degree},
                     {"profiles", hz_profiles},
                     {"connected", hz_marked || hz_connected},
                     {"marked", hz_marked}};
            emit_envelope({{"invariant",
                            hz_marked ? "marked-hurwitz" : "hurwitz"},
                           {"key", key},
                           {"value", rational_json(value)},
                           {"timing_ms", elapsed_ms(start)}});
        } else {
            std::cout << covercount::rational_to_string(value) << "\n";
        }
    });

    // ---- closed-form -----------------------------------------------
    auto* cf = app.add_subcommand(
        "closed-form", "closed forms for special cover families");
    std::string cf_family;
    std::optional<int> cf_k, cf_a, cf_b, cf_n, cf_degree;
    cf->add_option("--family", cf_family,
                   "one of: twos-complete, twos-cycles, twos-even, "
                   "twos-odd, near-cycle-pair")
        ->required();
    cf->add_option("--k", cf_k, "half the degree");
    cf->add_option("--a", cf_a, "first cycle length / marker size");
    cf->add_option("--b", cf_b, "second cycle length");
    cf->add_option("--n", cf_n, "smaller part of the two-part profile");
    cf->add_option("--degree", cf_degree, "degree of the cover");
    cf->add_flag("--json", g_json, "emit a JSON envelope");
    cf->callback([&] {
        const auto start = std::chrono::steady_clock::now();
        auto need = [](const std::optional<int>& v, const char* flag) {
            if (!v)
                throw covercount::BadArguments(
                    std::string("missing required option ") + flag);
            return *v;
        };
        Rational value;
        json key{{"family", cf_family}};
        if (cf_family == "twos-complete") {
            value = covercount::twos_complete(need(cf_k, "--k"));
            key["k"] = *cf_k;
        } else if (cf_family == "twos-cycles") {
            value = covercount::twos_cycles(need(cf_k, "--k"),
                                            need(cf_a, "--a"),
                                            need(cf_b, "--b"));
            key["k"] = *cf_k;
            key["a"] = *cf_a;
            key["b"] = *cf_b;
        } else if (cf_family == "twos-even") {
            value = covercount::twos_even(need(cf_k, "--k"));
            key["k"] = *cf_k;
        } else if (cf_family == "twos-odd") {
            value = covercount::twos_odd(need(cf_k, "--k"));
            key["k"] = *cf_k;
        } else if (cf_family == "near-cycle-pair") {
            value = covercount::near_cycle_pair(need(cf_degree, "--degree"),
                                                need(cf_n, "--n"),
                                                need(cf_a, "--a"));
            key["degree"] = *cf_degree;
            key["n"] = *cf_n;
            key["a"] = *cf_a;
        } else {
            throw covercount::BadArguments("unknown family: " + cf_family);
        }
        if (g_json) {
            emit_envelope({{"invariant", "closed-form"},
                           {"key", key},
                           {"value", rational_json(value)},
                           {"timing_ms", elapsed_ms(start)}});
        } else {
            std::cout << covercount::rational_to_string(value) << "\n";
        }
    });

    // ---- n-twos ----------------------------------------------------
    auto* nt = app.add_subcommand(
        "n-twos", "invariant with two maximal even branch points");
    int nt_k = 0;
    std::string nt_mu, nt_method = "both";
    nt->add_option("--k", nt_k, "half the degree")->required();
    nt->add_option("--mu", nt_mu, "partition of 2k, comma-separated")
        ->required();
    nt->add_option("--method", nt_method, "closed, recursive, or both")
        ->check(CLI::IsMember({"closed", "recursive", "both"}));
    nt->add_flag("--json", g_json, "emit a JSON envelope");
    nt->callback([&] {
        const auto start = std::chrono::steady_clock::now();
        const covercount::TwosKey key = covercount::TwosKey::make(
            nt_k, covercount::Partition::parse(nt_mu));
        std::optional<covercount::Integer> closed, recursive;
        if (nt_method == "closed" || nt_method == "both")
            closed = covercount::n_twos_closed(key);
        if (nt_method == "recursive" || nt_method == "both")
            recursive = covercount::n_twos_recursive(key);
        const bool mismatch = closed && recursive && *closed != *recursive;
        const covercount::Integer value =
            recursive ? *recursive : *closed;
        if (g_json) {
            json env{{"invariant", "n-twos"},
                     {"key", {{"k", nt_k}, {"mu", key.mu.to_string()}}},
                     {"value",
                      {{"num", value.get_str()}, {"den", "1"}}},
                     {"timing_ms", elapsed_ms(start)}};
            if (closed) env["closed"] = closed->get_str();
            if (recursive) env["recursive"] = recursive->get_str();
            if (nt_method == "both") env["agreement"] = !mismatch;
            emit_envelope(env);
        } else {
            std::cout << value.get_str() << "\n";
            if (mismatch)
                std::cerr << "mismatch: closed " << closed->get_str()
                          << " != recursive " << recursive->get_str()
                          << "\n";
        }
        if (mismatch) exit_code = kExitMismatch;
    });

    // ---- s ----------------------------------------------------------
    auto* sc = app.add_subcommand(
        "s", "marker-set recursion for cover counts");
    std::string s_a, s_b, s_mu, s_cache;
    bool s_trace_flag = false;
    WorkOptions s_work;
    sc->add_option("--a", s_a, "marker sizes, comma-separated")->required();
    sc->add_option("--b", s_b, "boundary sizes, comma-separated; empty ok");
    sc->add_option("--mu", s_mu,
                   "branch parts, comma-separated; empty string allowed");
    sc->add_option("--cache", s_cache,
                   "memo cache file (or set COVERCOUNT_CACHE)");
    sc->add_flag("--trace", s_trace_flag,
                 "also print the first reduction step");
    sc->add_flag("--json", g_json, "emit a JSON envelope");
    s_work.attach(sc);
    sc->callback([&] {
        const auto start = std::chrono::steady_clock::now();
        covercount::SKey key{covercount::ValueMultiset::parse(s_a),
                             covercount::ValueMultiset::parse(s_b),
                             covercount::Partition::parse(s_mu)};
        covercount::MemoStore memo;
        const std::string cache = cache_path_or_env(s_cache);
        if (!cache.empty()) memo.load_file(cache);
        std::optional<covercount::STrace> trace;
        Rational value;
        if (s_trace_flag) {
            trace = covercount::s_trace(key, memo, s_work.budget());
            value = trace->value;
        } else {
            value = covercount::s_invariant(key, memo, s_work.budget());
        }
        if (!cache.empty()) memo.append_new_entries(cache);
        if (g_json) {
            json env{{"invariant", "s"},
                     {"key",
                      {{"a", key.a.to_string()},
                       {"b", key.b.to_string()},
                       {"mu", key.mu.to_string()}}},
                     {"value", rational_json(value)},
                     {"timing_ms", elapsed_ms(start)}};
            if (trace) {
                json steps = json::array();
                for (size_t i = 0; i < trace->terms.size(); ++i) {
                    const auto& t = trace->terms[i];
                    steps.push_back(
                        {{"rule", covercount::rule_name(t.rule)},
                         {"coefficient", rational_json(t.coefficient)},
                         {"child", t.child.canonical()},
                         {"value",
                          rational_json(trace->child_values[i])}});
                }
                env["trace"] = steps;
            }
            if (!cache.empty())
                env["cache"] = {{"path", cache},
                                {"hits", memo.stats().hits},
                                {"misses", memo.stats().misses},
                                {"entries", memo.size()}};
            emit_envelope(env);
        } else {
            std::cout << covercount::rational_to_string(value) << "\n";
            if (trace) {
                for (size_t i = 0; i < trace->terms.size(); ++i) {
                    const auto& t = trace->terms[i];
                    std::cout
                        << "  " << covercount::rule_name(t.rule) << ": "
                        << covercount::rational_to_string(t.coefficient)
                        << " * [" << t.child.canonical() << "] = "
                        << covercount::rational_to_string(
                               t.coefficient * trace->child_values[i])
                        << "\n";
                }
            }
        }
    });

    // ---- u-table ----------------------------------------------------
    auto* ut = app.add_subcommand(
        "u-table",
        "table of the two-parameter specialisation, with quartic check");
    int ut_max_degree = 0;
    std::string ut_cache;
    WorkOptions ut_work;
    ut->add_option("--max-degree", ut_max_degree, "largest degree row")
        ->required();
    ut->add_option("--cache", ut_cache,
                   "memo cache file (or set COVERCOUNT_CACHE)");
    ut->add_flag("--json", g_json, "emit a JSON envelope");
    ut_work.attach(ut);
    ut->callback([&] {
        if (ut_max_degree < 2)
            throw covercount::BadArguments(
                "--max-degree must be at least 2");
        const auto start = std::chrono::steady_clock::now();
        covercount::MemoStore memo;
        const std::string cache = cache_path_or_env(ut_cache);
        if (!cache.empty()) memo.load_file(cache);
        json cells = json::array();
        bool all_match = true;
        std::ostringstream table;
        table << "  d |";
        for (int a = 1; a <= 5; ++a) table << "  a=" << a << " ";
        table << "| quartic\n";
        for (int d = 2; d <= ut_max_degree; ++d) {
            table << std::setw(3) << d << " |";
            for (int a = 1; a <= 5; ++a) {
                if (a > d) {
                    table << "    - ";
                    continue;
                }
                const Rational v =
                    covercount::u_value(d, a, memo, ut_work.budget());
                table << std::setw(5)
                      << covercount::rational_to_string(v) << " ";
                cells.push_back({{"d", d},
                                 {"a", a},
                                 {"value", rational_json(v)}});
            }
            const covercount::Integer q = covercount::u_quartic(d);
            const Rational u1 =
                covercount::u_value(d, 1, memo, ut_work.budget());
            const bool match = u1 == Rational(q);
            all_match = all_match && match;
            table << "| " << q.get_str() << (match ? " ok" : " MISMATCH")
                  << "\n";
        }
        if (!cache.empty()) memo.append_new_entries(cache);
        if (g_json) {
            json env{{"invariant", "u-table"},
                     {"key", {{"max_degree", ut_max_degree}}},
                     {"cells", cells},
                     {"quartic_match", all_match},
                     {"timing_ms", elapsed_ms(start)}};
            if (!cache.empty())
                env["cache"] = {{"path", cache},
                                {"hits", memo.stats().hits},
                                {"misses", memo.stats().misses},
                                {"entries", memo.size()}};
            emit_envelope(env);
        } else {
            std::cout << table.str();
        }
        if (!all_match) exit_code = kExitMismatch;
    });

    // ---- verify -----------------------------------------------------
    auto* vf = app.add_subcommand(
        "verify", "cross-check the implementations against each other");
    std::string vf_suite = "all";
    int vf_max_degree = 6;
    WorkOptions vf_work;
    vf->add_option("--suite", vf_suite,
                   "appendix (closed forms), twos, s, u, invariance, "
                   "determinism, or all")
        ->check(CLI::IsMember({"appendix", "closed-forms", "twos", "s", "u",
                               "invariance", "determinism", "all"}));
    vf->add_option("--max-degree", vf_max_degree,
                   "degree ceiling for enumeration-backed suites");
    vf->add_flag("--json", g_json, "emit a JSON envelope");
    vf_work.attach(vf);
    vf->callback([&] {
        const auto start = std::chrono::steady_clock::now();
        const auto reports = covercount::run_verify(vf_suite, vf_max_degree,
                                                    vf_work.budget());
        int failures = 0;
        json suites = json::array();
        for (const auto& report : reports) {
            failures += report.failures();
            if (g_json) {
                json checks = json::array();
                for (const auto& c : report.checks)
                    checks.push_back({{"name", c.name},
                                      {"expected", c.expected},
                                      {"computed", c.computed},
                                      {"pass", c.pass}});
                suites.push_back({{"suite", report.suite},
                                  {"checks", checks},
                                  {"failures", report.failures()}});
            } else {
                std::cout << "suite " << report.suite << ": "
                          << report.checks.size() << " checks, "
                          << report.failures() << " failures\n";
                for (const auto& c : report.checks)
                    if (!c.pass)
                        std::cout << "  FAIL " << c.name << ": expected "
                                  << c.expected << ", computed "
                                  << c.computed << "\n";
            }
        }
        if (g_json)
            emit_envelope({{"invariant", "verify"},
                           {"key", {{"suite", vf_suite},
                                    {"max_degree", vf_max_degree}}},
                           {"suites", suites},
                           {"failures", failures},
                           {"timing_ms", elapsed_ms(start)}});
        else
            std::cout << (failures == 0 ? "all checks passed"
                                        : "checks FAILED")
                      << "\n";
        if (failures > 0) exit_code = kExitMismatch;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    } catch (const covercount::BudgetExceeded& e) {
        if (g_json)
            emit_envelope({{"error",
                            {{"code", e.code()}, {"message", e.what()}}}});
        else
            std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const covercount::Error& e) {
        if (g_json)
            emit_envelope({{"error",
                            {{"code", e.code()}, {"message", e.what()}}}});
        else
            std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return exit_code;
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }

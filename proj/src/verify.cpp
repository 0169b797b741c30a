#include "covercount/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "covercount/closed_form_hurwitz.hpp"
#include "covercount/partitions.hpp"
#include "covercount/s_invariants.hpp"
#include "covercount/twos_invariants.hpp"

namespace covercount {

namespace {

void add_check(VerifyReport& report, std::string name,
               const std::string& expected, const std::string& computed) {
    report.checks.push_back(
        {std::move(name), expected, computed, expected == computed});
}

void add_rational_check(VerifyReport& report, std::string name,
                        const Rational& expected, const Rational& computed) {
    add_check(report, std::move(name), rational_to_string(expected),
              rational_to_string(computed));
}

Partition near_trivial(int v, int d) {
    std::vector<int> parts(static_cast<size_t>(d - v) + 1, 1);
    parts[0] = v;
    return Partition::make(std::move(parts));
}

Partition twos_profile(int k) {
    return Partition::make(std::vector<int>(static_cast<size_t>(k), 2));
}

Rational enumerated(int d, std::vector<Partition> profiles,
                    const WorkBudget& budget) {
    HurwitzQuery q;
    q.degree = d;
    q.profiles = std::move(profiles);
    q.connected = true;
    return hurwitz(q, budget);
}

} // namespace

int VerifyReport::failures() const {
    int n = 0;
    for (const auto& c : checks)
        if (!c.pass) ++n;
    return n;
}

VerifyReport verify_closed_forms(int max_degree, const WorkBudget& budget) {
    VerifyReport report;
    report.suite = "closed-forms";

    for (int k = 1; 2 * k <= max_degree; ++k) {
        const int d = 2 * k;
        {
            std::vector<int> simple(static_cast<size_t>(d) - 1, 1);
            simple[0] = 2;
            add_rational_check(
                report, "twos_complete k=" + std::to_string(k),
                twos_complete(k),
                enumerated(d,
                           {Partition::make({d}), twos_profile(k),
                            twos_profile(k), Partition::make(simple)},
                           budget));
        }
        for (int a = 1; a < d; ++a) {
            const int b = d - a;
            add_rational_check(
                report,
                "twos_cycles k=" + std::to_string(k) + " a=" +
                    std::to_string(a) + " b=" + std::to_string(b),
                twos_cycles(k, a, b),
                enumerated(d,
                           {twos_profile(k), twos_profile(k),
                            Partition::make({a, b})},
                           budget));
        }
        {
            std::vector<int> nearly(static_cast<size_t>(k) + 1, 2);
            nearly[static_cast<size_t>(k) - 1] = 1;
            nearly[static_cast<size_t>(k)] = 1;
            add_rational_check(
                report, "twos_even k=" + std::to_string(k), twos_even(k),
                enumerated(d,
                           {Partition::make({d}), twos_profile(k),
                            Partition::make(nearly)},
                           budget));
        }
    }
    for (int k = 1; 2 * k + 1 <= max_degree; ++k) {
        const int d = 2 * k + 1;
        std::vector<int> odd(static_cast<size_t>(k) + 1, 2);
        odd[static_cast<size_t>(k)] = 1;
        const Partition p = Partition::make(odd);
        add_rational_check(
            report, "twos_odd k=" + std::to_string(k), twos_odd(k),
            enumerated(d, {Partition::make({d}), p, p}, budget));
    }
    for (int d = 2; d <= max_degree; ++d) {
        for (int n = 1; 2 * n <= d; ++n) {
            for (int a = 2; 2 * a <= d + 2; ++a) {
                const int b = d + 2 - a;
                add_rational_check(
                    report,
                    "near_cycle_pair d=" + std::to_string(d) + " n=" +
                        std::to_string(n) + " a=" + std::to_string(a),
                    near_cycle_pair(d, n, a),
                    enumerated(d,
                               {Partition::make({d - n, n}),
                                near_trivial(a, d), near_trivial(b, d)},
                               budget));
            }
        }
    }
    return report;
}

VerifyReport verify_twos(int max_k) {
    VerifyReport report;
    report.suite = "twos";
    for (int k = 2; k <= max_k; ++k) {
        for (const Partition& mu : all_partitions(2 * k)) {
            if (mu.length() > 4) continue;
            const TwosKey key = TwosKey::make(k, mu);
            Integer formula = 3;
            formula <<= static_cast<unsigned long>(mu.length() - 1);
            const Integer closed = n_twos_closed(key);
            const Integer recursive = n_twos_recursive(key);
            std::ostringstream name;
            name << "n_twos k=" << k << " mu=(" << mu.to_string() << ")";
            add_check(report, name.str() + " recursion vs closed",
                      closed.get_str(), recursive.get_str());
            add_check(report, name.str() + " doubling formula",
                      formula.get_str(), closed.get_str());
        }
    }
    return report;
}

VerifyReport verify_s_vectors(const WorkBudget& budget) {
    VerifyReport report;
    report.suite = "s-vectors";
    MemoStore memo;
    auto key = [](const std::string& a, const std::string& b,
                  const std::string& mu) {
        return SKey{ValueMultiset::parse(a), ValueMultiset::parse(b),
                    Partition::parse(mu)};
    };
    struct Row {
        const char* a;
        const char* b;
        const char* mu;
        long expected;
    };
    const Row rows[] = {
        {"2,2,2", "", "2", 1},   {"3,2,2", "", "3", 8},
        {"3,3,2", "", "4", 20},  {"3,3,3", "", "5", 16},
        {"4,2,2", "", "4", 15},  {"3,2,2,2", "", "2,1", 9},
        {"3,2,2", "2", "4", 8},  {"3,2,2,2", "2", "2,2", 10},
    };
    for (const Row& r : rows) {
        std::string name = std::string("s a={") + r.a + "} b={" + r.b +
                           "} mu=(" + r.mu + ")";
        add_rational_check(report, name, Rational(r.expected),
                           s_invariant(key(r.a, r.b, r.mu), memo, budget));
    }
    return report;
}

VerifyReport verify_u_table(int max_degree, const WorkBudget& budget) {
    VerifyReport report;
    report.suite = "u-table";
    MemoStore memo;
    auto u = [&](int d, int a) { return u_value(d, a, memo, budget); };

    for (int d = 2; d <= max_degree; ++d)
        add_rational_check(report, "u(" + std::to_string(d) + ",1) quartic",
                           Rational(u_quartic(d)), u(d, 1));

    // Row recurrence u(d,a) = u(d,a+1) + u(d-1,a) wherever all three
    // cells exist.
    for (int d = 3; d <= max_degree; ++d)
        for (int a = 2; a <= 4 && a + 1 <= std::min(5, d) &&
                        a <= std::min(5, d - 1);
             ++a)
            add_rational_check(report,
                               "u(" + std::to_string(d) + "," +
                                   std::to_string(a) + ") recurrence",
                               u(d, a + 1) + u(d - 1, a), u(d, a));

    // Top row: the a = 6 column vanishes identically, so the recurrence
    // degenerates to u(d,5) = u(d-1,5).
    for (int d = 6; d <= max_degree; ++d)
        add_rational_check(report, "u(" + std::to_string(d) + ",5) top row",
                           u(d - 1, 5), u(d, 5));

    // First column skips a degree: u(d,1) = u(d,2) + u(d-2,1), the d = 3
    // case losing its second term.
    if (max_degree >= 3)
        add_rational_check(report, "u(3,1) recurrence", u(3, 2), u(3, 1));
    for (int d = 4; d <= max_degree; ++d)
        add_rational_check(report, "u(" + std::to_string(d) + ",1) recurrence",
                           u(d, 2) + u(d - 2, 1), u(d, 1));
    return report;
}

VerifyReport verify_invariance(int min_instances, const WorkBudget& budget) {
    VerifyReport report;
    report.suite = "invariance";
    std::mt19937 rng(20240817u);

    // Cover counts must not depend on the order the profiles are given.
    {
        int made = 0;
        while (made < min_instances) {
            const int d = 2 + static_cast<int>(rng() % 4);
            const auto parts = all_partitions(d);
            const int n = 2 + static_cast<int>(rng() % 3);
            std::vector<Partition> profiles;
            for (int i = 0; i < n; ++i)
                profiles.push_back(parts[rng() % parts.size()]);
            const bool connected = (rng() % 2) == 0;
            HurwitzQuery q{d, profiles, connected};
            const Rational base = hurwitz(q, budget);
            std::shuffle(q.profiles.begin(), q.profiles.end(), rng);
            const Rational shuffled = hurwitz(q, budget);
            std::ostringstream name;
            name << "reorder d=" << d << " n=" << n
                 << (connected ? " connected" : " disconnected") << " #"
                 << made;
            add_rational_check(report, name.str(), base, shuffled);
            ++made;
        }
    }

    // The S recursion must not depend on which branch parts or boundary
    // value the first step consumes.
    {
        std::vector<SKey> keys;
        for (int d = 2; d <= 5; ++d)
            for (const SKey& k : enumerate_valid_keys(d)) keys.push_back(k);
        std::shuffle(keys.begin(), keys.end(), rng);

        MemoStore memo;
        int made = 0;
        for (const SKey& key : keys) {
            if (made >= std::max(min_instances, 60)) break;
            const Rational reference = s_invariant(key, memo, budget);
            if (key.mu.length() >= 2) {
                std::vector<std::pair<int, int>> pairs;
                const auto& parts = key.mu.parts();
                for (size_t i = 0; i < parts.size(); ++i)
                    for (size_t j = i + 1; j < parts.size(); ++j) {
                        std::pair<int, int> pr{parts[i], parts[j]};
                        if (std::find(pairs.begin(), pairs.end(), pr) ==
                            pairs.end())
                            pairs.push_back(pr);
                    }
                for (const auto& pr : pairs) {
                    StepChoice choice;
                    choice.parts_nm = pr;
                    std::ostringstream name;
                    name << "choice " << key.canonical() << " parts=("
                         << pr.first << "," << pr.second << ")";
                    add_rational_check(
                        report, name.str(), reference,
                        s_invariant_with_first_choice(key, choice, memo,
                                                      budget));
                    ++made;
                }
            } else if (!key.b.empty()) {
                for (int y : key.b.distinct_values()) {
                    StepChoice choice;
                    choice.y = y;
                    std::ostringstream name;
                    name << "choice " << key.canonical() << " y=" << y;
                    add_rational_check(
                        report, name.str(), reference,
                        s_invariant_with_first_choice(key, choice, memo,
                                                      budget));
                    ++made;
                }
            }
        }
    }

    // Boundary components of size one never change the value.
    {
        std::vector<SKey> keys;
        for (int d = 2; d <= 5; ++d)
            for (const SKey& k : enumerate_valid_keys(d)) keys.push_back(k);
        std::shuffle(keys.begin(), keys.end(), rng);
        MemoStore memo;
        int made = 0;
        for (const SKey& key : keys) {
            if (made >= min_instances) break;
            const Rational reference = s_invariant(key, memo, budget);
            const int ones = 1 + static_cast<int>(rng() % 2);
            SKey padded = key;
            for (int i = 0; i < ones; ++i) padded.b = padded.b.with(1);
            std::ostringstream name;
            name << "strip " << key.canonical() << " +" << ones << "x1";
            add_rational_check(report, name.str(), reference,
                               s_invariant(padded, memo, budget));
            add_check(report, name.str() + " normalize", "equal",
                      normalize_b(padded) == key ? "equal" : "different");
            ++made;
        }
    }
    return report;
}

VerifyReport verify_determinism(const WorkBudget& budget) {
    VerifyReport report;
    report.suite = "determinism";

    const struct {
        int degree;
        std::vector<const char*> profiles;
        bool connected;
    } queries[] = {
        {5, {"2,2,1", "2,2,1", "2,2,1", "2,1,1,1"}, true},
        {5, {"3,2", "3,2", "2,2,1"}, false},
        {6, {"3,2,1", "3,2,1", "2,2,1,1"}, true},
        {4, {"4", "4", "2,1,1", "2,1,1"}, true},
    };
    for (const auto& probe : queries) {
        HurwitzQuery q;
        q.degree = probe.degree;
        for (const char* p : probe.profiles)
            q.profiles.push_back(Partition::parse(p));
        q.connected = probe.connected;
        WorkBudget serial = budget;
        serial.threads = 1;
        const Rational reference = hurwitz(q, serial);
        for (int threads : {1, 2, 4}) {
            WorkBudget wb = budget;
            wb.threads = threads;
            std::ostringstream name;
            name << "hurwitz d=" << probe.degree << " n="
                 << probe.profiles.size() << " threads=" << threads;
            add_rational_check(report, name.str(), reference,
                               hurwitz(q, wb));
        }
        std::ostringstream name;
        name << "hurwitz d=" << probe.degree << " n=" << probe.profiles.size()
             << " repeat";
        add_rational_check(report, name.str(), reference, hurwitz(q, serial));
    }

    {
        const SKey key{ValueMultiset::parse("3,3,3,2"), ValueMultiset(),
                       Partition::parse("3,2")};
        MemoStore memo_a, memo_b;
        const Rational first = s_invariant(key, memo_a, budget);
        add_rational_check(report, "s fresh-memo repeat", first,
                           s_invariant(key, memo_b, budget));
        add_rational_check(report, "s warm-memo repeat", first,
                           s_invariant(key, memo_a, budget));
    }
    {
        const TwosKey key = TwosKey::make(4, Partition::parse("4,2,1,1"));
        add_check(report, "n_twos repeat", n_twos_recursive(key).get_str(),
                  n_twos_recursive(key).get_str());
    }
    return report;
}

std::vector<VerifyReport> run_verify(const std::string& suite,
                                     int max_degree,
                                     const WorkBudget& budget) {
    std::vector<VerifyReport> reports;
    const bool all = suite == "all";
    bool known = all;
    if (all || suite == "appendix" || suite == "closed-forms") {
        reports.push_back(verify_closed_forms(max_degree, budget));
        known = true;
    }
    if (all || suite == "twos") {
        // Recursion-only suite; cheap enough for a fixed grid.
        reports.push_back(verify_twos(5));
        known = true;
    }
    if (all || suite == "s") {
        reports.push_back(verify_s_vectors(budget));
        known = true;
    }
    if (all || suite == "u") {
        reports.push_back(verify_u_table(max_degree, budget));
        known = true;
    }
    if (all || suite == "invariance") {
        reports.push_back(verify_invariance(50, budget));
        known = true;
    }
    if (all || suite == "determinism") {
        reports.push_back(verify_determinism(budget));
        known = true;
    }
    if (!known)
        throw BadArguments("unknown verify suite: " + suite);
    return reports;
}

} // namespace covercount

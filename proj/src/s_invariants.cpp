#include "covercount/s_invariants.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <utility>

namespace covercount {

namespace {

Partition remove_part(const Partition& mu, int value) {
    std::vector<int> parts = mu.parts();
    auto it = std::find(parts.begin(), parts.end(), value);
    if (it == parts.end())
        throw InvalidKey("part " + std::to_string(value) +
                         " not present in (" + mu.to_string() + ")");
    parts.erase(it);
    return Partition::make(std::move(parts));
}

Partition add_part(const Partition& mu, int value) {
    std::vector<int> parts = mu.parts();
    parts.push_back(value);
    return Partition::make(std::move(parts));
}

// (v, 1, 1, ..., 1) of total weight d.
Partition near_trivial_profile(int v, int d) {
    std::vector<int> parts(static_cast<size_t>(d - v) + 1, 1);
    parts[0] = v;
    return Partition::make(std::move(parts));
}

void require_usable(const SKey& key) {
    if (!validate_key(key))
        throw InvalidKey("invalid key " + key.canonical());
    // Size-1 markers are outside the recursion's domain: every reduction
    // coefficient involving them vanishes and the base shape excludes
    // them, so reject them up front rather than return something bogus.
    if (key.a.entries().front().first < 2)
        throw InvalidKey("marker of size 1 in " + key.canonical());
}

} // namespace

std::string SKey::canonical() const {
    return "S|a=" + a.to_string() + "|b=" + b.to_string() +
           "|mu=" + mu.to_string();
}

bool validate_key(const SKey& key) {
    const int d = key.mu.sum();
    if (static_cast<int>(key.a.size()) != key.mu.length() + 2) return false;
    long shifted = 0;
    for (const auto& [v, c] : key.a.entries()) {
        if (v < 1 || v > d) return false;
        shifted += static_cast<long>(v - 1) * c;
    }
    for (const auto& [v, c] : key.b.entries()) {
        if (v < 1 || v > d) return false;
        shifted += static_cast<long>(v - 1) * c;
    }
    // Total branching must match a genus-zero cover of genus-zero target:
    // d - length(mu) + sum (value - 1) == 2d.
    return shifted == static_cast<long>(d) + key.mu.length();
}

SKey normalize_b(SKey key) {
    while (key.b.contains(1)) key.b = key.b.without(1);
    return key;
}

const char* rule_name(ReductionRule rule) {
    switch (rule) {
        case ReductionRule::strip_one: return "strip-one";
        case ReductionRule::reduce_b_merge: return "reduce-b-merge";
        case ReductionRule::reduce_b_transfer: return "reduce-b-transfer";
        case ReductionRule::reduce_a_merge: return "reduce-a-merge";
        case ReductionRule::reduce_a_pair: return "reduce-a-pair";
        case ReductionRule::base: return "base";
    }
    return "?";
}

std::optional<Rational> MemoStore::lookup(const std::string& key) {
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        ++stats_.misses;
        return std::nullopt;
    }
    ++stats_.hits;
    return it->second;
}

void MemoStore::store(const std::string& key, const Rational& value) {
    entries_.insert_or_assign(key, value);
}

void MemoStore::note_depth(int depth) {
    stats_.max_depth = std::max(stats_.max_depth, depth);
}

void MemoStore::load_file(const std::string& path) {
    if (!std::filesystem::exists(path)) return; // fresh cache
    std::ifstream in(path);
    if (!in) throw CacheFormatError("cannot open cache file " + path);
    std::string line;
    if (!std::getline(in, line) || line != "covercount-cache v1")
        throw CacheFormatError("bad cache header in " + path);
    size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos || tab == 0)
            throw CacheFormatError("bad cache line " +
                                   std::to_string(lineno) + " in " + path);
        const std::string key = line.substr(0, tab);
        Rational value;
        try {
            value = parse_rational(line.substr(tab + 1));
        } catch (const Error&) {
            throw CacheFormatError("bad rational on cache line " +
                                   std::to_string(lineno) + " in " + path);
        }
        entries_.insert_or_assign(key, value);
        persisted_.insert(key);
    }
}

void MemoStore::append_new_entries(const std::string& path) {
    std::vector<std::pair<std::string, Rational>> fresh;
    for (const auto& [key, value] : entries_)
        if (!persisted_.count(key)) fresh.emplace_back(key, value);
    if (fresh.empty() && std::filesystem::exists(path)) return;
    const bool need_header = !std::filesystem::exists(path) ||
                             std::filesystem::file_size(path) == 0;
    std::ofstream out(path, std::ios::app);
    if (!out) throw CacheFormatError("cannot write cache file " + path);
    if (need_header) out << "covercount-cache v1\n";
    for (const auto& [key, value] : fresh) {
        // Always the two-part form, so every line parses the same way.
        out << key << '\t' << value.get_num().get_str() << '/'
            << value.get_den().get_str() << '\n';
        persisted_.insert(key);
    }
}

std::vector<ReductionTerm> reduce_b_terms(const SKey& raw, int part_n,
                                          int y) {
    SKey key = normalize_b(raw);
    require_usable(key);
    if (key.mu.count_of(part_n) < 1)
        throw InvalidKey("part " + std::to_string(part_n) + " not in mu of " +
                         key.canonical());
    if (key.b.empty())
        throw InvalidKey("no boundary to reduce in " + key.canonical());
    if (y == 0) y = key.b.max_value();
    if (!key.b.contains(y))
        throw InvalidKey("boundary value " + std::to_string(y) +
                         " not present in " + key.canonical());

    const int n = part_n;
    const Partition mu_rest = remove_part(key.mu, n);
    const ValueMultiset b_rest = key.b.without(y);
    std::vector<ReductionTerm> terms;

    // Absorb the boundary into the chosen branch part.
    if (n - y + 1 >= 1)
        terms.push_back({Rational(1),
                         SKey{key.a, b_rest, add_part(mu_rest, n - y + 1)},
                         ReductionRule::reduce_b_merge});

    // Or trade a marker z against a new boundary of size y + z - n - 2.
    for (int z : key.a.distinct_values()) {
        const int c = y + z - n - 2;
        const int coeff =
            std::min(std::min(z - 1, y - 1), std::min(n, c));
        if (coeff < 1) continue;
        terms.push_back({Rational(coeff),
                         SKey{key.a.without(z), b_rest.with(c), mu_rest},
                         ReductionRule::reduce_b_transfer});
    }
    return terms;
}

std::vector<ReductionTerm> reduce_a_terms(const SKey& raw,
                                          std::pair<int, int> parts_nm,
                                          const WorkBudget& budget) {
    SKey key = normalize_b(raw);
    require_usable(key);
    const int n = parts_nm.first;
    const int m = parts_nm.second;
    if (key.mu.length() < 2)
        throw InvalidKey("need two branch parts in " + key.canonical());
    const int need_n = key.mu.count_of(n);
    if ((n == m && need_n < 2) || need_n < 1 ||
        (n != m && key.mu.count_of(m) < 1))
        throw InvalidKey("parts " + std::to_string(n) + ", " +
                         std::to_string(m) + " not available in " +
                         key.canonical());

    const Partition mu_rest = remove_part(remove_part(key.mu, n), m);
    std::vector<ReductionTerm> terms;

    // Family one: remove one marker z and fuse the two branch parts into
    // a single part n + m - z + 2.
    for (int z : key.a.distinct_values()) {
        if (z > n + m) continue;
        const int coeff =
            std::min(std::min(n, m), std::min(z - 1, n + m - z + 1));
        if (coeff < 1) continue;
        terms.push_back({Rational(coeff),
                         SKey{key.a.without(z), key.b,
                              add_part(mu_rest, n + m - z + 2)},
                         ReductionRule::reduce_a_merge});
    }

    // Family two: remove two markers z1, z2 (never of size two) and open
    // a boundary of size z1 + z2 - n - m - 3.  The coefficient is itself
    // a connected cover count with three branch points, normalised by the
    // symmetry of the glued profile versus the removed markers.
    std::vector<int> pool;
    for (int z : key.a.distinct_values())
        if (z != 2) pool.push_back(z);
    for (size_t i = 0; i < pool.size(); ++i) {
        for (size_t j = i; j < pool.size(); ++j) {
            const int z1 = pool[i], z2 = pool[j];
            if (z1 == z2 && key.a.count_of(z1) < 2) continue;
            const int c = z1 + z2 - n - m - 3;
            if (c < 1) continue;
            const int cover_degree = z1 + z2 - 3;
            HurwitzQuery glue;
            glue.degree = cover_degree;
            glue.profiles = {Partition::make({c, n, m}),
                             near_trivial_profile(z1, cover_degree),
                             near_trivial_profile(z2, cover_degree)};
            glue.connected = true;
            Rational x = hurwitz(glue, budget);
            if (x == 0) continue;
            x *= aut_single(Partition::make({n, m, c}));
            x /= aut_single(Partition::make({z1, z2}));
            x.canonicalize();
            terms.push_back({x,
                             SKey{key.a.without(z1).without(z2),
                                  key.b.with(c), mu_rest},
                             ReductionRule::reduce_a_pair});
        }
    }
    return terms;
}

Rational s_base(const SKey& raw, const WorkBudget& budget) {
    SKey key = normalize_b(raw);
    require_usable(key);
    if (key.mu.length() != 1 || !key.b.empty() || key.a.size() != 3)
        throw InvalidKey("base evaluation needs three markers, no boundary "
                         "and a single branch part, got " +
                         key.canonical());
    const int d = key.degree();
    const std::vector<int> a = key.a.values_desc();
    const Integer aut_a = aut_single(Partition::make({a[0], a[1], a[2]}));

    Rational total(0);
    for (int i = 0; i < 3; ++i) {
        const int ai = a[static_cast<size_t>(i)];
        const int aj = a[static_cast<size_t>((i + 1) % 3)];
        const int ak = a[static_cast<size_t>((i + 2) % 3)];
        const int d2 = d - ai + 2;
        // A marker bigger than the split-off degree admits no cover.
        if (aj > d2 || ak > d2) continue;
        for (int e = 1; 2 * e <= d2; ++e) {
            const int f = d2 - e;
            std::vector<int> waist(static_cast<size_t>(d - d2) + 2, 1);
            waist[0] = e;
            waist[1] = f;
            const Partition waist_profile = Partition::make(waist);

            HurwitzQuery top;
            top.degree = d;
            top.profiles = {Partition::make({d}),
                            near_trivial_profile(ai, d), waist_profile};
            top.connected = true;
            const Rational h_top = hurwitz(top, budget);
            if (h_top == 0) continue;

            HurwitzQuery bottom;
            bottom.degree = d2;
            bottom.profiles = {Partition::make({e, f}),
                               near_trivial_profile(aj, d2),
                               near_trivial_profile(ak, d2)};
            bottom.connected = true;
            const Rational h_bottom = hurwitz(bottom, budget);
            if (h_bottom == 0) continue;

            Rational term = Rational(2 * (aj + ak - 2)) * h_top * h_bottom;
            term *= aut_single(waist_profile);
            term /= factorial(static_cast<unsigned long>(ai - 2)) * aut_a;
            total += term;
        }
    }
    total.canonicalize();
    return total;
}

namespace {

struct Evaluator {
    MemoStore& memo;
    WorkBudget budget;
    int depth_limit;

    Rational eval(const SKey& raw, int depth, const StepChoice* choice) {
        if (raw.mu.empty()) return Rational(0);
        SKey key = normalize_b(raw);
        require_usable(key);
        if (depth > depth_limit)
            throw InternalError("recursion depth " + std::to_string(depth) +
                                " exceeded bound at " + key.canonical());
        memo.note_depth(depth);
        const std::string ck = key.canonical();
        if (!choice) {
            if (auto hit = memo.lookup(ck)) return *hit;
        }

        Rational value(0);
        if (key.mu.length() >= 2) {
            const std::pair<int, int> nm =
                (choice && choice->parts_nm)
                    ? *choice->parts_nm
                    : std::pair<int, int>{key.mu.parts()[0],
                                          key.mu.parts()[1]};
            for (const auto& term : reduce_a_terms(key, nm, budget))
                value += term.coefficient *
                         eval(term.child, depth + 1, nullptr);
        } else if (!key.b.empty()) {
            const int y = (choice && choice->y) ? *choice->y : 0;
            for (const auto& term :
                 reduce_b_terms(key, key.mu.parts()[0], y))
                value += term.coefficient *
                         eval(term.child, depth + 1, nullptr);
        } else {
            value = s_base(key, budget);
        }
        value.canonicalize();
        // Results under an overridden first step are deliberately not
        // memoised: agreement with the default strategy must come from a
        // real recomputation.
        if (!choice) memo.store(ck, value);
        return value;
    }
};

int depth_limit_for(const SKey& key) {
    return 10 * (static_cast<int>(key.a.size()) +
                 static_cast<int>(key.b.size()) +
                 std::max(1, key.mu.length()));
}

} // namespace

Rational s_invariant(const SKey& key, MemoStore& memo,
                     const WorkBudget& budget) {
    Evaluator ev{memo, budget, depth_limit_for(key)};
    return ev.eval(key, 0, nullptr);
}

Rational s_invariant_with_first_choice(const SKey& key,
                                       const StepChoice& choice,
                                       MemoStore& memo,
                                       const WorkBudget& budget) {
    Evaluator ev{memo, budget, depth_limit_for(key)};
    return ev.eval(key, 0, &choice);
}

STrace s_trace(const SKey& raw, MemoStore& memo, const WorkBudget& budget) {
    STrace trace;
    trace.value = Rational(0);
    if (raw.mu.empty()) return trace;

    SKey key = normalize_b(raw);
    if (key.b != raw.b) {
        // Report the stripping itself as the (single) top-level step.
        trace.terms.push_back(
            {Rational(1), key, ReductionRule::strip_one});
        const Rational v = s_invariant(key, memo, budget);
        trace.child_values.push_back(v);
        trace.value = v;
        return trace;
    }
    require_usable(key);

    if (key.mu.length() >= 2) {
        trace.terms = reduce_a_terms(
            key, {key.mu.parts()[0], key.mu.parts()[1]}, budget);
    } else if (!key.b.empty()) {
        trace.terms = reduce_b_terms(key, key.mu.parts()[0], 0);
    } else {
        const Rational v = s_base(key, budget);
        trace.terms.push_back({Rational(1), key, ReductionRule::base});
        trace.child_values.push_back(v);
        trace.value = v;
        return trace;
    }
    for (const auto& term : trace.terms) {
        const Rational v = s_invariant(term.child, memo, budget);
        trace.child_values.push_back(v);
        trace.value += term.coefficient * v;
    }
    trace.value.canonicalize();
    return trace;
}

Rational u_value(int d, int a, MemoStore& memo, const WorkBudget& budget) {
    if (d < 2 || a < 1 || a > 5 || a > d)
        throw InvalidKey("u_value is defined for 2 <= d and 1 <= a <= "
                         "min(5, d); got d=" +
                         std::to_string(d) + ", a=" + std::to_string(a));
    std::vector<int> markers;
    markers.insert(markers.end(), static_cast<size_t>(d - 2), 3);
    markers.insert(markers.end(), static_cast<size_t>(5 - a), 2);
    std::vector<int> mu(static_cast<size_t>(d - a) + 1, 1);
    mu[0] = a;
    SKey key{ValueMultiset::make(markers), ValueMultiset(),
             Partition::make(mu)};
    return s_invariant(key, memo, budget);
}

Integer u_quartic(long long d) {
    if (d < 2)
        throw BadArguments("quartic is stated for d >= 2, got " +
                           std::to_string(d));
    Integer dd(static_cast<long>(d));
    Integer num = dd * (dd - 1) * (2 * (dd - 1) * (dd - 1) + 1);
    Integer out;
    mpz_divexact_ui(out.get_mpz_t(), num.get_mpz_t(), 6);
    return out;
}

std::vector<SKey> enumerate_valid_keys(int degree) {
    std::vector<SKey> out;
    if (degree < 1) return out;
    for (const Partition& mu : all_partitions(degree)) {
        const int len = mu.length();
        const int total_shift = degree + len; // sum of (value-1) over a, b
        const int a_count = len + 2;
        for (int b_shift = 0; b_shift <= total_shift - a_count; ++b_shift) {
            for (const Partition& bs : all_partitions(b_shift)) {
                if (!bs.empty() && bs.parts()[0] > degree - 1) continue;
                std::vector<int> b_values = bs.parts();
                for (int& v : b_values) ++v;
                // Markers need every value >= 2, i.e. shifted parts >= 1.
                for (const Partition& as : partitions_with_length(
                         total_shift - b_shift, a_count, 1, degree - 1)) {
                    std::vector<int> a_values = as.parts();
                    for (int& v : a_values) ++v;
                    SKey key{ValueMultiset::make(a_values),
                             ValueMultiset::make(b_values), mu};
                    if (validate_key(key)) out.push_back(key);
                }
            }
        }
    }
    return out;
}

} // namespace covercount

#include "covercount/permutation_hurwitz.hpp"

#include <algorithm>
#include <numeric>
#include <thread>
#include <utility>

namespace covercount {

namespace {

// Internal permutations are 0-based image vectors.  Products compose left
// to right: (a * b)(x) = b(a(x)).  The public API only exposes 1-based
// words, so the convention is sealed inside this translation unit.
using Perm = std::vector<int>;

void compose_into(const Perm& a, const Perm& b, Perm& out) {
    const size_t d = a.size();
    out.resize(d);
    for (size_t x = 0; x < d; ++x) out[x] = b[static_cast<size_t>(a[x])];
}

// Representative with cycles on consecutive points: (0 1 .. l1-1)(l1 ..).
Perm representative(int d, const Partition& lambda) {
    Perm r(static_cast<size_t>(d));
    int start = 0;
    for (int len : lambda.parts()) {
        for (int i = 0; i < len; ++i)
            r[static_cast<size_t>(start + i)] = start + (i + 1) % len;
        start += len;
    }
    return r;
}

// Visits every permutation of {0..d-1} whose cycle type is lambda exactly
// once.  The cycle through the smallest unused point determines a unique
// (length, ordered tail) pair, so recursing over distinct remaining
// lengths and ordered tails enumerates without repetition.  The vector
// passed to the sink is reused between calls; its address is stable for
// the duration of each call.
template <class F>
void enumerate_class(int d, const Partition& lambda, F&& sink) {
    std::vector<std::pair<int, int>> lens; // (length, remaining count)
    for (int part : lambda.parts()) {
        if (!lens.empty() && lens.back().first == part)
            ++lens.back().second;
        else
            lens.emplace_back(part, 1);
    }
    Perm perm(static_cast<size_t>(d), -1);
    std::vector<char> used(static_cast<size_t>(d), 0);
    int free_points = d;

    auto place_cycles = [&](auto&& self) -> void {
        if (free_points == 0) {
            sink(static_cast<const Perm&>(perm));
            return;
        }
        int p = 0;
        while (used[static_cast<size_t>(p)]) ++p;
        used[static_cast<size_t>(p)] = 1;
        --free_points;
        for (auto& [len, cnt] : lens) {
            if (cnt == 0) continue;
            --cnt;
            // Fill the rest of p's cycle as an ordered tuple of unused
            // points, closing back to p.
            auto extend = [&](auto&& ext, int last, int todo) -> void {
                if (todo == 0) {
                    perm[static_cast<size_t>(last)] = p;
                    self(self);
                    return;
                }
                for (int q = 0; q < d; ++q) {
                    if (used[static_cast<size_t>(q)]) continue;
                    used[static_cast<size_t>(q)] = 1;
                    --free_points;
                    perm[static_cast<size_t>(last)] = q;
                    ext(ext, q, todo - 1);
                    used[static_cast<size_t>(q)] = 0;
                    ++free_points;
                }
            };
            extend(extend, p, len - 1);
            ++cnt;
        }
        used[static_cast<size_t>(p)] = 0;
        ++free_points;
    };
    place_cycles(place_cycles);
}

struct Scratch {
    std::vector<char> visited;
    std::vector<int> count_by_len;
    std::vector<int> parent;

    explicit Scratch(int d)
        : visited(static_cast<size_t>(d)),
          count_by_len(static_cast<size_t>(d) + 1),
          parent(static_cast<size_t>(d)) {}
};

// Cycle type of q equals the multiset encoded in target (target[len] =
// multiplicity)?  Early-outs on the first surplus cycle length.
bool type_matches(const Perm& q, const std::vector<int>& target,
                  Scratch& s) {
    std::fill(s.visited.begin(), s.visited.end(), 0);
    std::copy(target.begin(), target.end(), s.count_by_len.begin());
    const int d = static_cast<int>(q.size());
    for (int i = 0; i < d; ++i) {
        if (s.visited[static_cast<size_t>(i)]) continue;
        int len = 0, x = i;
        do {
            s.visited[static_cast<size_t>(x)] = 1;
            x = q[static_cast<size_t>(x)];
            ++len;
        } while (x != i);
        if (--s.count_by_len[static_cast<size_t>(len)] < 0) return false;
    }
    // Lengths always sum to d, so no multiplicity can stay positive here.
    return true;
}

// The tuple generates a transitive subgroup iff the graph x ~ g(x) over
// all generators g is connected.
bool transitive(int d, const std::vector<const Perm*>& gens, Scratch& s) {
    std::iota(s.parent.begin(), s.parent.end(), 0);
    int components = d;
    auto find = [&](int x) {
        while (s.parent[static_cast<size_t>(x)] != x) {
            s.parent[static_cast<size_t>(x)] =
                s.parent[static_cast<size_t>(s.parent[static_cast<size_t>(x)])];
            x = s.parent[static_cast<size_t>(x)];
        }
        return x;
    };
    for (const Perm* g : gens) {
        for (int i = 0; i < d; ++i) {
            int ra = find(i), rb = find((*g)[static_cast<size_t>(i)]);
            if (ra != rb) {
                s.parent[static_cast<size_t>(ra)] = rb;
                if (--components == 1) return true;
            }
        }
    }
    return components == 1;
}

struct Counts {
    unsigned long long matched = 0;
    unsigned long long connected = 0;
};

// Walks the middle classes depth-first, keeping the running prefix
// product r * m_0 * ... * m_{depth-1} in prefixes[depth].  At a leaf the
// prefix equals the full product without the derived final permutation;
// the tuple closes iff the prefix's cycle type matches the derived class
// (a permutation and its inverse share a type, so the inverse is never
// built).
struct MiddleWalker {
    int d;
    const std::vector<Partition>* middles;
    const std::vector<int>* target_count;
    const Perm* fixed;
    bool need_connected;
    Scratch scratch;
    std::vector<Perm> prefixes;
    std::vector<const Perm*> mid_ptrs;
    Counts counts;

    MiddleWalker(int d_, const std::vector<Partition>& mids,
                 const std::vector<int>& target, const Perm& fixed_rep,
                 bool connected)
        : d(d_), middles(&mids), target_count(&target), fixed(&fixed_rep),
          need_connected(connected), scratch(d_),
          prefixes(mids.size() + 1), mid_ptrs(mids.size(), nullptr) {}

    void leaf(size_t depth) {
        const Perm& q = prefixes[depth];
        if (!type_matches(q, *target_count, scratch)) return;
        ++counts.matched;
        if (!need_connected) return;
        std::vector<const Perm*> gens;
        gens.reserve(mid_ptrs.size() + 2);
        gens.push_back(fixed);
        for (const Perm* m : mid_ptrs) gens.push_back(m);
        gens.push_back(&q);
        if (transitive(d, gens, scratch)) ++counts.connected;
    }

    void walk(size_t depth) {
        if (depth == middles->size()) {
            leaf(depth);
            return;
        }
        enumerate_class(d, (*middles)[depth], [&](const Perm& m) {
            compose_into(prefixes[depth], m, prefixes[depth + 1]);
            mid_ptrs[depth] = &m;
            walk(depth + 1);
        });
    }
};

std::vector<int> target_count_table(int d, const Partition& target) {
    std::vector<int> table(static_cast<size_t>(d) + 1, 0);
    for (int part : target.parts()) ++table[static_cast<size_t>(part)];
    return table;
}

Partition type_of(const Perm& p) {
    const int d = static_cast<int>(p.size());
    std::vector<char> visited(static_cast<size_t>(d), 0);
    std::vector<int> parts;
    for (int i = 0; i < d; ++i) {
        if (visited[static_cast<size_t>(i)]) continue;
        int len = 0, x = i;
        do {
            visited[static_cast<size_t>(x)] = 1;
            x = p[static_cast<size_t>(x)];
            ++len;
        } while (x != i);
        parts.push_back(len);
    }
    return Partition::make(std::move(parts));
}

// Threading only pays when the outermost class can be held in memory;
// beyond this cap the call silently runs single-threaded (the result is
// identical either way).
constexpr size_t kMaterializeCap = size_t{1} << 20;

} // namespace

PermutationWord PermutationWord::make(std::vector<int> images) {
    const int d = static_cast<int>(images.size());
    if (d < 1) throw BadArguments("a permutation needs degree >= 1");
    std::vector<char> seen(static_cast<size_t>(d), 0);
    for (int img : images) {
        if (img < 1 || img > d)
            throw BadArguments("image " + std::to_string(img) +
                               " outside 1.." + std::to_string(d));
        if (seen[static_cast<size_t>(img - 1)]++)
            throw BadArguments("image " + std::to_string(img) +
                               " repeated; not a bijection");
    }
    PermutationWord w;
    w.images = std::move(images);
    return w;
}

Partition cycle_type(const PermutationWord& w) {
    Perm p(w.images.size());
    for (size_t i = 0; i < w.images.size(); ++i) p[i] = w.images[i] - 1;
    return type_of(p);
}

Integer conjugacy_class_size(int degree, const Partition& type) {
    if (type.sum() != degree)
        throw ProfileDegreeMismatch(
            "cycle type (" + type.to_string() + ") sums to " +
            std::to_string(type.sum()) + ", expected " +
            std::to_string(degree));
    // |class| = d! / z where z = prod over lengths m of m^{c_m} * c_m!.
    Integer z = 1;
    const auto& parts = type.parts();
    size_t i = 0;
    while (i < parts.size()) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        for (size_t t = i; t < j; ++t) z *= parts[i];
        z *= factorial(j - i);
        i = j;
    }
    return factorial(static_cast<unsigned long>(degree)) / z;
}

Rational hurwitz(const HurwitzQuery& query, const WorkBudget& budget) {
    const int d = query.degree;
    if (d < 1)
        throw ProfileDegreeMismatch("degree must be >= 1, got " +
                                    std::to_string(d));
    if (budget.max_tuples < 1)
        throw BadArguments("work budget must allow at least one tuple");
    if (budget.threads < 1)
        throw BadArguments("thread count must be >= 1");
    for (const auto& p : query.profiles)
        if (p.sum() != d)
            throw ProfileDegreeMismatch(
                "profile (" + p.to_string() + ") sums to " +
                std::to_string(p.sum()) + ", expected degree " +
                std::to_string(d));

    const Integer dfact = factorial(static_cast<unsigned long>(d));
    const size_t n = query.profiles.size();

    // Zero or one branch points only admit the empty/identity tuple.
    if (n == 0 || (n == 1 && query.profiles[0].length() == d)) {
        if (query.connected) return d == 1 ? Rational(1) : Rational(0);
        Rational h(1, dfact);
        h.canonicalize();
        return h;
    }
    if (n == 1) return Rational(0); // identity cannot have the given type

    // Sort positions by class size: the biggest class is pinned to its
    // representative (contributing a factor of its size), the second
    // biggest is derived as the inverse of the rest, everything else is
    // enumerated.  Counts are invariant under reordering the profiles;
    // the test suite checks that against an oracle that never reorders.
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<Integer> sizes(n);
    for (size_t i = 0; i < n; ++i)
        sizes[i] = conjugacy_class_size(d, query.profiles[i]);
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return sizes[a] > sizes[b];
    });

    const Partition& fix_type = query.profiles[order[0]];
    const Partition& derived_type = query.profiles[order[1]];
    std::vector<Partition> middles;
    middles.reserve(n - 2);
    for (size_t i = 2; i < n; ++i)
        middles.push_back(query.profiles[order[i]]);

    Integer tuple_count = 1;
    for (const auto& m : middles) tuple_count *= conjugacy_class_size(d, m);
    if (tuple_count > budget.max_tuples)
        throw BudgetExceeded("enumeration needs " + tuple_count.get_str() +
                             " tuples, budget allows " +
                             std::to_string(budget.max_tuples));

    const Perm fixed_rep = representative(d, fix_type);
    const std::vector<int> target = target_count_table(d, derived_type);

    Counts total;
    bool threaded = budget.threads > 1 && !middles.empty();
    if (threaded) {
        // The cap keeps the materialised class bounded; fall back to the
        // sequential walk above it.
        Integer first_size = conjugacy_class_size(d, middles[0]);
        if (first_size > static_cast<long>(kMaterializeCap))
            threaded = false;
    }

    if (!threaded) {
        MiddleWalker walker(d, middles, target, fixed_rep, query.connected);
        walker.prefixes[0] = fixed_rep;
        walker.walk(0);
        total = walker.counts;
    } else {
        std::vector<Perm> first_class;
        enumerate_class(d, middles[0],
                        [&](const Perm& m) { first_class.push_back(m); });
        std::vector<Partition> rest(middles.begin() + 1, middles.end());
        const size_t workers =
            std::min<size_t>(static_cast<size_t>(budget.threads),
                             first_class.size());
        std::vector<Counts> partial(workers);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (size_t t = 0; t < workers; ++t) {
            pool.emplace_back([&, t]() {
                MiddleWalker walker(d, rest, target, fixed_rep,
                                    query.connected);
                const size_t lo = first_class.size() * t / workers;
                const size_t hi = first_class.size() * (t + 1) / workers;
                for (size_t i = lo; i < hi; ++i) {
                    compose_into(fixed_rep, first_class[i],
                                 walker.prefixes[0]);
                    // first_class[i] is not handed to the transitivity
                    // check: it equals fixed^-1 * prefix and therefore
                    // lies in the subgroup generated by the remaining
                    // tuple entries, so the orbits are unchanged.
                    walker.walk(0);
                }
                partial[t] = walker.counts;
            });
        }
        for (auto& th : pool) th.join();
        for (const auto& c : partial) {
            total.matched += c.matched;
            total.connected += c.connected;
        }
    }

    const unsigned long long hits =
        query.connected ? total.connected : total.matched;
    Integer hit_count;
    mpz_set_ui(hit_count.get_mpz_t(), static_cast<unsigned long>(hits));
    Rational h(hit_count * sizes[order[0]], dfact);
    h.canonicalize();
    return h;
}

Rational marked_hurwitz(int degree, const std::vector<Partition>& profiles,
                        const WorkBudget& budget) {
    HurwitzQuery q{degree, profiles, true};
    Rational h = hurwitz(q, budget);
    h *= aut_profile_list(profiles);
    h.canonicalize();
    return h;
}

} // namespace covercount

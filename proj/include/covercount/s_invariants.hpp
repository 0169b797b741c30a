#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "covercount/partitions.hpp"
#include "covercount/permutation_hurwitz.hpp"
#include "covercount/rational.hpp"

namespace covercount {

// Key of the S recursion: a multiset of marker sizes `a`, a multiset of
// boundary sizes `b`, and a partition mu recording the branch cycles still
// to be resolved.  The degree of the key is |mu|.
struct SKey {
    ValueMultiset a;
    ValueMultiset b;
    Partition mu;

    int degree() const noexcept { return mu.sum(); }

    // Stable text form used as memo and cache key:
    //   S|a=<desc values>|b=<desc values>|mu=<desc parts>
    std::string canonical() const;

    friend auto operator<=>(const SKey&, const SKey&) = default;
};

// Well-formedness predicate, checked literally:
//   * |a| == length(mu) + 2,
//   * d - length(mu) + sum over a and b of (value - 1) == 2d  (d = |mu|),
//   * every value in a and b is >= 1 and <= d.
// The empty-mu key fails this predicate; its value is fixed to 0 by
// convention inside s_invariant instead.
bool validate_key(const SKey& key);

// Removes all 1s from b; a boundary of size 1 carries no information and
// the invariant is unchanged.  Idempotent.
SKey normalize_b(SKey key);

enum class ReductionRule {
    strip_one,
    reduce_b_merge,
    reduce_b_transfer,
    reduce_a_merge,
    reduce_a_pair,
    base,
};

const char* rule_name(ReductionRule rule);

// One summand of a reduction step: value(parent) = sum of
// coefficient * value(child) over the emitted terms.  Coefficients are
// always strictly positive; vanishing terms are dropped at emission.
struct ReductionTerm {
    Rational coefficient;
    SKey child;
    ReductionRule rule;
};

// Memo table shared across evaluations, with optional persistence.  The
// disk format is line-based:
//   covercount-cache v1
//   <canonical key>\t<rational>
class MemoStore {
public:
    std::optional<Rational> lookup(const std::string& key);
    void store(const std::string& key, const Rational& value);
    void note_depth(int depth);

    struct Stats {
        long long hits = 0;
        long long misses = 0;
        int max_depth = 0;
    };

    const Stats& stats() const noexcept { return stats_; }
    std::size_t size() const noexcept { return entries_.size(); }

    // Merges entries from path into the store; a missing file is treated
    // as an empty cache.  Throws CacheFormatError on a bad header or line.
    void load_file(const std::string& path);

    // Appends every entry not yet persisted to path (creating the file
    // with its header if needed) and marks them persisted.
    void append_new_entries(const std::string& path);

private:
    std::map<std::string, Rational> entries_;
    std::set<std::string> persisted_;
    Stats stats_;
};

// Eliminates one boundary value y by absorbing it into the branch part n
// of key.mu.  Emits the merge term (n shrinks to n - y + 1) unless that
// value would be non-positive, plus one transfer term per distinct marker
// size z with positive coefficient min(z-1, y-1, n, y+z-n-2).  y == 0
// selects the largest boundary value.  Throws InvalidKey when the key is
// invalid or n / y are not present.
std::vector<ReductionTerm> reduce_b_terms(const SKey& key, int part_n,
                                          int y = 0);

// Eliminates two branch parts n and m of key.mu at once.  Two families of
// terms: merging n and m into one part n+m-z+2 while removing a marker z
// (coefficient min(n, m, z-1, n+m-z+1)), and removing a pair of markers
// z1, z2 > 2 while creating a boundary of size z1+z2-n-m-3, with a
// coefficient that is itself a connected cover count (computed by the
// exhaustive enumerator, hence the budget).  Throws InvalidKey /
// BudgetExceeded.
std::vector<ReductionTerm> reduce_a_terms(const SKey& key,
                                          std::pair<int, int> parts_nm,
                                          const WorkBudget& budget = {});

// Direct evaluation of the terminal shape: three markers, no boundary,
// single branch part equal to the degree.  Sums products of two connected
// cover counts over the ways to split off one marker.  Throws InvalidKey
// if the key does not have that shape.
Rational s_base(const SKey& key, const WorkBudget& budget = {});

// Full evaluation: strips boundary 1s, validates, dispatches on the shape
// of mu (two or more parts: reduce_a on the two largest; one part with
// boundary: reduce_b with the largest boundary value; one part without
// boundary: s_base; empty mu: 0), memoising every subresult.  A depth
// guard of 10 * (|a| + |b| + length(mu)) levels throws InternalError if it
// ever trips; the recursion provably terminates well before it.
Rational s_invariant(const SKey& key, MemoStore& memo,
                     const WorkBudget& budget = {});

// Override for the first reduction step, used to test that the result is
// independent of the chosen parts / boundary value.  parts_nm applies when
// mu has two or more parts, y when mu has one part and b is nonempty;
// children are evaluated with the default strategy.  The overridden
// top-level result is not memoised, so agreement with s_invariant is a
// genuine recomputation.
struct StepChoice {
    std::optional<std::pair<int, int>> parts_nm;
    std::optional<int> y;
};

Rational s_invariant_with_first_choice(const SKey& key,
                                       const StepChoice& choice,
                                       MemoStore& memo,
                                       const WorkBudget& budget = {});

// Top-level reduction terms together with the evaluated child values;
// value == sum of coefficient * child value (or the base value).  Feeds
// the CLI --trace output.
struct STrace {
    std::vector<ReductionTerm> terms;
    std::vector<Rational> child_values;
    Rational value;
};

STrace s_trace(const SKey& key, MemoStore& memo,
               const WorkBudget& budget = {});

// The two-parameter specialisation used for the closing table: markers
// {3^(d-2), 2^(5-a)} and branch cycles (a, 1^(d-a)).  Defined for
// 2 <= d and 1 <= a <= min(5, d); anything else throws InvalidKey.
Rational u_value(int d, int a, MemoStore& memo,
                 const WorkBudget& budget = {});

// Closed quartic d(d-1)(2(d-1)^2+1)/6 that u_value(d, 1) must equal;
// throws BadArguments for d < 2.
Integer u_quartic(long long d);

// Every valid key of the given degree whose marker sizes are all >= 2 and
// whose boundary is normalized (no 1s), in deterministic order.  Used by
// the invariance test suites to draw instances.
std::vector<SKey> enumerate_valid_keys(int degree);

} // namespace covercount

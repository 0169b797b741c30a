#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "covercount/errors.hpp"
#include "covercount/rational.hpp"

namespace covercount {

// A partition of a non-negative integer: parts stored non-increasing, all
// parts >= 1, the empty partition is the unique partition of 0.  Instances
// are immutable once constructed, so the canonical order can be relied on.
class Partition {
public:
    Partition() = default;

    // Sorts the raw parts into canonical order.  Throws NonPositivePart if
    // any part is < 1.  Applying make to parts() of a Partition returns an
    // equal Partition (canonicalisation is idempotent).
    static Partition make(std::vector<int> raw);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int sum() const noexcept { return sum_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    // Number of parts equal to value.
    int count_of(int value) const;

    // Comma-separated parts in canonical order; empty string for the empty
    // partition.  parse is the exact inverse and trims surrounding spaces.
    std::string to_string() const;
    static Partition parse(const std::string& text);

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int sum_ = 0;
};

// A finite multiset of positive integers, stored as sorted
// (value, multiplicity) pairs.  Unlike Partition this type supports cheap
// single-element insertion and removal, which the recursion on marker sets
// performs constantly.
class ValueMultiset {
public:
    ValueMultiset() = default;

    static ValueMultiset make(const std::vector<int>& values);

    const std::vector<std::pair<int, int>>& entries() const noexcept {
        return entries_;
    }

    int size() const noexcept { return size_; }
    int sum() const noexcept { return sum_; }
    bool empty() const noexcept { return entries_.empty(); }

    int count_of(int value) const;
    bool contains(int value) const { return count_of(value) > 0; }

    // Largest value; requires a non-empty multiset.
    int max_value() const;

    // Copy with one occurrence of value added / removed.  Removing an
    // absent value throws BadArguments.
    ValueMultiset with(int value) const;
    ValueMultiset without(int value) const;

    // Distinct values in increasing order.
    std::vector<int> distinct_values() const;

    // All elements expanded, non-increasing.
    std::vector<int> values_desc() const;

    // Comma-separated expansion in non-increasing order; "" when empty.
    std::string to_string() const;
    static ValueMultiset parse(const std::string& text);

    friend auto operator<=>(const ValueMultiset&, const ValueMultiset&) =
        default;

private:
    std::vector<std::pair<int, int>> entries_; // ascending by value
    int size_ = 0;
    int sum_ = 0;
};

// Convenience wrapper matching the CLI's comma-separated syntax.
Partition make_partition(const std::vector<int>& raw);

// |Aut| of a single profile: product over distinct part values of
// (multiplicity)!.  This is the number of ways to permute equal parts.
Integer aut_single(const Partition& p);

// Product of aut_single over a list of profiles.
Integer aut_profile_list(const std::vector<Partition>& profiles);

// All partitions of n (n >= 0), in reverse lexicographic order; the list
// for n = 0 holds just the empty partition.
std::vector<Partition> all_partitions(int n);

// All partitions of n with exactly len parts, each in [min_part, max_part].
std::vector<Partition> partitions_with_length(int n, int len, int min_part,
                                              int max_part);

// Riemann-Hurwitz defect of a candidate branching datum: how many simple
// branch points are missing to reach genus g, i.e.
//   (2d - 2 + 2g) - sum_i (d - length(profile_i)).
// Throws ProfileDegreeMismatch if any profile does not sum to degree.
int rh_defect(int degree, int genus, const std::vector<Partition>& profiles);

// Appends copies of the simple profile (2,1,...,1) until the defect is
// zero.  Throws OverRamified if the defect is negative (too much
// ramification already) and DegreeTooSmall if degree < 2 while padding is
// actually required.
std::vector<Partition> pad_with_simple(int degree, int genus,
                                       std::vector<Partition> profiles);

} // namespace covercount

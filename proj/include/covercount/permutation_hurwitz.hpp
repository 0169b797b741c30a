#pragma once

#include <cstdint>
#include <vector>

#include "covercount/partitions.hpp"
#include "covercount/rational.hpp"

namespace covercount {

// A permutation of {1,...,d} given by its image word: images[i-1] is the
// image of i.  make validates bijectivity.
struct PermutationWord {
    std::vector<int> images;

    static PermutationWord make(std::vector<int> images);
    int degree() const noexcept { return static_cast<int>(images.size()); }
};

Partition cycle_type(const PermutationWord& w);

// Work limits for the exhaustive enumerator.  max_tuples bounds the number
// of permutation tuples visited (the product of the enumerated conjugacy
// class sizes, checked before any enumeration starts).  threads > 1 splits
// the outermost enumerated class across worker threads; results are
// bitwise identical regardless of the split.
struct WorkBudget {
    std::int64_t max_tuples = 100'000'000;
    int threads = 1;
};

// A Hurwitz enumeration problem: count tuples (s_1,...,s_n) of permutations
// in S_degree with prescribed cycle types multiplying to the identity,
// weighted by 1/degree!.  With connected set, only tuples generating a
// transitive subgroup are counted.
struct HurwitzQuery {
    int degree = 0;
    std::vector<Partition> profiles;
    bool connected = false;
};

// The count described above, exactly.  Throws ProfileDegreeMismatch if any
// profile does not sum to the degree (or degree < 1), BudgetExceeded if the
// enumeration would visit more tuples than budget.max_tuples.
Rational hurwitz(const HurwitzQuery& query, const WorkBudget& budget = {});

// Connected count times the product of |Aut| of each profile; this weights
// each cover by its labelled branch points and is the normalisation the
// recursion on marker sets consumes.
Rational marked_hurwitz(int degree, const std::vector<Partition>& profiles,
                        const WorkBudget& budget = {});

// Size of the conjugacy class in S_degree with the given cycle type:
// degree! / (prod_m m^{c_m} c_m!) where c_m counts parts equal to m.
Integer conjugacy_class_size(int degree, const Partition& type);

} // namespace covercount

#pragma once

#include "covercount/partitions.hpp"
#include "covercount/rational.hpp"

namespace covercount {

// Key for the family of invariants indexed by an integer k >= 1 and a
// nonempty partition mu of 2k.  The invariant counts certain genus-zero
// covers with two maximally ramified points of even local degree; the
// library computes it two independent ways (closed form and recursion) so
// they can be cross-checked.
struct TwosKey {
    int k = 0;
    Partition mu;

    // Throws BadArguments unless k >= 1 and mu is a nonempty partition
    // of 2k.
    static TwosKey make(int k, Partition mu);

    friend auto operator<=>(const TwosKey&, const TwosKey&) = default;
};

// Closed form 3 * 2^(length(mu) - 1), valid only for 2k > 2; throws
// DegreeTooSmall at 2k <= 2 where the closed form does not hold (the true
// values there are 1).
Integer n_twos_closed(const TwosKey& key);

// Recursive evaluation by splitting two parts of mu at a time, memoised
// per call.  Defined for every valid key including 2k = 2.  By default the
// two largest parts are split first.
Integer n_twos_recursive(const TwosKey& key);

// Same recursion, but the first split uses the parts at positions i and j
// (0-based, i != j) of key.mu.parts(); all deeper splits use the default
// choice.  The result must not depend on the choice; tests rely on this
// hook to check that.  Throws BadArguments for out-of-range positions or
// when mu has fewer than two parts.
Integer n_twos_recursive_with_first_pair(const TwosKey& key, int i, int j);

} // namespace covercount

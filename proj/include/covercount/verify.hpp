#pragma once

#include <string>
#include <vector>

#include "covercount/permutation_hurwitz.hpp"
#include "covercount/rational.hpp"

namespace covercount {

// One verification check: a named quantity computed two independent ways.
struct VerifyCheck {
    std::string name;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct VerifyReport {
    std::string suite;
    std::vector<VerifyCheck> checks;

    int failures() const;
};

// Closed-form families against the exhaustive enumerator, every parameter
// choice with degree <= max_degree.
VerifyReport verify_closed_forms(int max_degree, const WorkBudget& budget);

// Recursion against closed form for 2 <= k <= max_k over all mu with at
// most four parts.
VerifyReport verify_twos(int max_k);

// Frozen reference values of the S recursion (base shapes and one key
// that exercises the two-part reduction).
VerifyReport verify_s_vectors(const WorkBudget& budget);

// The closing table: every defined cell for 2 <= d <= max_degree checked
// against the two recurrences and, for a = 1, the quartic.
VerifyReport verify_u_table(int max_degree, const WorkBudget& budget);

// Invariance suites: cover counts under profile reordering, the S
// recursion under first-step choices, boundary 1 stripping.  Each records
// at least min_instances instances.
VerifyReport verify_invariance(int min_instances, const WorkBudget& budget);

// Determinism: repeated and multi-threaded evaluations must agree
// exactly.
VerifyReport verify_determinism(const WorkBudget& budget);

// Dispatch by suite name: "appendix" (alias "closed-forms"), "twos", "s",
// "u", "invariance", "determinism", or "all".  Throws BadArguments for an
// unknown name.
std::vector<VerifyReport> run_verify(const std::string& suite,
                                     int max_degree,
                                     const WorkBudget& budget);

} // namespace covercount

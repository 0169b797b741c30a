#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace covercount {

// Every failure the library can signal derives from Error and carries a
// stable machine-readable code alongside the human-readable message.  The
// CLI maps codes to exit statuses, so codes must not change once published.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define COVERCOUNT_DEFINE_ERROR(Name, code_literal)                          \
    class Name : public Error {                                              \
    public:                                                                   \
        explicit Name(const std::string& message)                            \
            : Error(code_literal, message) {}                                \
    }

// A part or multiset value that must be a positive integer was not.
COVERCOUNT_DEFINE_ERROR(NonPositivePart, "non-positive-part");
// A ramification profile does not sum to the degree of the cover.
COVERCOUNT_DEFINE_ERROR(ProfileDegreeMismatch, "profile-degree-mismatch");
// An enumeration would exceed the configured work budget.
COVERCOUNT_DEFINE_ERROR(BudgetExceeded, "budget-exceeded");
// Padding with simple branch points cannot reach the requested genus
// because the profiles already carry too much ramification.
COVERCOUNT_DEFINE_ERROR(OverRamified, "over-ramified");
// The requested invariant is undefined below a minimum degree.
COVERCOUNT_DEFINE_ERROR(DegreeTooSmall, "degree-too-small");
// A strictly positive argument was required.
COVERCOUNT_DEFINE_ERROR(NonPositive, "non-positive");
// Arguments fail the preconditions of a closed-form evaluation.
COVERCOUNT_DEFINE_ERROR(BadArguments, "bad-arguments");
// A recursion branch that is provably impossible for well-formed input
// was reached anyway; indicates a caller bug or a broken invariant.
COVERCOUNT_DEFINE_ERROR(UnreachableCase, "unreachable-case");
// A recursion key violates the well-formedness predicate.
COVERCOUNT_DEFINE_ERROR(InvalidKey, "invalid-key");
// An internal consistency guard fired (for example the recursion depth
// bound); never expected on any input, valid or not.
COVERCOUNT_DEFINE_ERROR(InternalError, "internal-error");
// A persistent cache file is malformed or has an unknown version tag.
COVERCOUNT_DEFINE_ERROR(CacheFormatError, "cache-format-error");

#undef COVERCOUNT_DEFINE_ERROR

} // namespace covercount

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "covercount/permutation_hurwitz.hpp"
#include "naive_oracle.hpp"

using namespace covercount;

namespace {

Partition P(const std::string& text) { return Partition::parse(text); }

Rational conn(int d, std::vector<Partition> profiles,
              const WorkBudget& budget = {}) {
    return hurwitz({d, std::move(profiles), true}, budget);
}

Rational disc(int d, std::vector<Partition> profiles,
              const WorkBudget& budget = {}) {
    return hurwitz({d, std::move(profiles), false}, budget);
}

} // namespace

TEST_CASE("permutation words") {
    const PermutationWord w = PermutationWord::make({2, 3, 1, 4});
    CHECK(cycle_type(w) == P("3,1"));
    CHECK(cycle_type(PermutationWord::make({1})) == P("1"));
    CHECK(cycle_type(PermutationWord::make({2, 1, 4, 3})) == P("2,2"));
    CHECK_THROWS_AS(PermutationWord::make({}), BadArguments);
    CHECK_THROWS_AS(PermutationWord::make({1, 1}), BadArguments);
    CHECK_THROWS_AS(PermutationWord::make({0, 1}), BadArguments);
    CHECK_THROWS_AS(PermutationWord::make({3, 1}), BadArguments);
}

TEST_CASE("conjugacy class sizes") {
    CHECK(conjugacy_class_size(5, P("2,2,1")) == 15);
    CHECK(conjugacy_class_size(5, P("5")) == 24);
    CHECK(conjugacy_class_size(5, P("3,1,1")) == 20);
    CHECK(conjugacy_class_size(5, P("1,1,1,1,1")) == 1);
    CHECK(conjugacy_class_size(6, P("3,2,1")) == 120);
    CHECK(conjugacy_class_size(1, P("1")) == 1);
    CHECK_THROWS_AS(conjugacy_class_size(4, P("3")), ProfileDegreeMismatch);

    // The oracle's class materialisation doubles as an independent count.
    for (int d = 1; d <= 5; ++d)
        for (const Partition& t : all_partitions(d))
            CHECK(conjugacy_class_size(d, t) ==
                  static_cast<long>(oracle::all_of_type(d, t).size()));
}

TEST_CASE("hand-checked values") {
    CHECK(conn(2, {P("2"), P("2"), P("2"), P("2")}) == Rational(1, 2));
    CHECK(conn(3, {P("3"), P("3"), P("1,1,1")}) == Rational(1, 3));
    CHECK(conn(4, {P("4"), P("2,1,1"), P("3,1")}) == Rational(1));
    CHECK(conn(4, {P("4"), P("2,1,1"), P("2,2")}) == Rational(1, 2));
    CHECK(conn(3, {P("3"), P("2,1"), P("2,1")}) == Rational(1));
    CHECK(conn(3, {P("1,1,1"), P("3"), P("3")}) == Rational(1, 3));
    CHECK(disc(2, {P("2"), P("2"), P("1,1")}) == Rational(1, 2));
    CHECK(conn(2, {P("2"), P("2"), P("1,1")}) == Rational(1, 2));
    CHECK(conn(4, {P("2,2"), P("2,2"), P("2,2")}) == Rational(1, 4));
    CHECK(disc(4, {P("2,2"), P("2,2"), P("2,2")}) == Rational(1, 4));

    // Two-part branch points over a pair of almost-trivial profiles.
    CHECK(conn(4, {P("3,1"), P("2,1,1"), P("4")}) == Rational(1));
    CHECK(conn(4, {P("2,2"), P("2,1,1"), P("4")}) == Rational(1, 2));
    CHECK(conn(4, {P("2,2"), P("3,1"), P("3,1")}) == Rational(1));
    CHECK(conn(4, {P("3,1"), P("3,1"), P("3,1")}) == Rational(1));
}

TEST_CASE("degenerate branch data") {
    CHECK(conn(1, {}) == Rational(1));
    CHECK(disc(1, {}) == Rational(1));
    CHECK(disc(3, {}) == Rational(1, 6));
    CHECK(conn(3, {}) == Rational(0));
    CHECK(disc(3, {P("1,1,1")}) == Rational(1, 6));
    CHECK(conn(3, {P("1,1,1")}) == Rational(0));
    CHECK(disc(3, {P("2,1")}) == Rational(0));
    CHECK(conn(1, {P("1"), P("1")}) == Rational(1));
    CHECK(disc(2, {P("2"), P("2")}) == Rational(1, 2));
    CHECK(disc(2, {P("2"), P("1,1")}) == Rational(0));
}

TEST_CASE("marked counts") {
    CHECK(marked_hurwitz(4, {P("2,2"), P("2,2"), P("2,2")}) == Rational(2));
    CHECK(marked_hurwitz(4, {P("4"), P("4"), P("1,1,1,1")}) == Rational(6));
    CHECK(marked_hurwitz(1, {}) == Rational(1));
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(disc(0, {}), ProfileDegreeMismatch);
    CHECK_THROWS_AS(disc(3, {P("2")}), ProfileDegreeMismatch);
    WorkBudget tiny;
    tiny.max_tuples = 10;
    CHECK_THROWS_AS(
        conn(5, {P("2,2,1"), P("2,2,1"), P("2,2,1"), P("2,2,1")}, tiny),
        BudgetExceeded);
    WorkBudget zero;
    zero.max_tuples = 0;
    CHECK_THROWS_AS(disc(2, {P("2"), P("2")}, zero), BadArguments);
    WorkBudget negthreads;
    negthreads.threads = 0;
    CHECK_THROWS_AS(disc(2, {P("2"), P("2")}, negthreads), BadArguments);
}

TEST_CASE("agrees with the exhaustive reference on small degrees") {
    for (int d = 1; d <= 4; ++d) {
        const auto parts = all_partitions(d);
        const size_t p = parts.size();
        // All ordered tuples of up to four profiles.
        for (int n = 0; n <= 4; ++n) {
            std::vector<size_t> idx(static_cast<size_t>(n), 0);
            while (true) {
                std::vector<Partition> profiles;
                for (size_t i : idx) profiles.push_back(parts[i]);
                for (bool connected : {false, true}) {
                    const Rational fast =
                        hurwitz({d, profiles, connected});
                    const Rational slow =
                        oracle::oracle_hurwitz(d, profiles, connected);
                    CAPTURE(d);
                    CAPTURE(n);
                    CAPTURE(connected);
                    CHECK(fast == slow);
                }
                size_t pos = 0;
                while (pos < idx.size() && ++idx[pos] == p) {
                    idx[pos] = 0;
                    ++pos;
                }
                if (pos == idx.size()) break;
            }
        }
    }
}

TEST_CASE("agrees with the exhaustive reference at degree five") {
    const int d = 5;
    const auto parts = all_partitions(d);
    for (const Partition& p1 : parts)
        for (const Partition& p2 : parts)
            for (bool connected : {false, true})
                CHECK(hurwitz({d, {p1, p2}, connected}) ==
                      oracle::oracle_hurwitz(d, {p1, p2}, connected));

    // Triples, capped so the oracle's full product stays affordable.
    for (const Partition& p1 : parts) {
        for (const Partition& p2 : parts) {
            for (const Partition& p3 : parts) {
                Integer work = conjugacy_class_size(d, p1);
                work *= conjugacy_class_size(d, p2);
                work *= conjugacy_class_size(d, p3);
                if (work > 20000) continue;
                const std::vector<Partition> profiles{p1, p2, p3};
                for (bool connected : {false, true})
                    CHECK(hurwitz({d, profiles, connected}) ==
                          oracle::oracle_hurwitz(d, profiles, connected));
            }
        }
    }
}

#include "covercount/twos_invariants.hpp"

#include <map>
#include <string>
#include <utility>

namespace covercount {

namespace {

using Memo = std::map<std::pair<int, std::string>, Integer>;

Partition drop_two_positions(const Partition& mu, int i, int j) {
    std::vector<int> rest;
    rest.reserve(mu.parts().size() - 2);
    for (int t = 0; t < mu.length(); ++t)
        if (t != i && t != j) rest.push_back(mu.parts()[static_cast<size_t>(t)]);
    return Partition::make(std::move(rest));
}

Integer eval(int k, const Partition& mu, Memo& memo,
             const std::pair<int, int>* first_pair);

// One splitting step on the parts at positions i, j (values a >= b after
// swapping).  Every branch strictly reduces either k or the part count,
// so the recursion terminates; the case analysis below is exhaustive for
// even degree, and the guard throws if that reasoning is ever violated.
Integer split(int k, const Partition& mu, int i, int j, Memo& memo) {
    const int d = 2 * k;
    int a = mu.parts()[static_cast<size_t>(i)];
    int b = mu.parts()[static_cast<size_t>(j)];
    if (a < b) std::swap(a, b);
    const Partition rest = drop_two_positions(mu, i, j);
    const int rest_sum = rest.sum();

    // Joining the two parts never changes k.
    Integer joined =
        eval(k, Partition::make([&] {
                 std::vector<int> parts = rest.parts();
                 parts.push_back(a + b);
                 return parts;
             }()),
             memo, nullptr);

    if (a > b) {
        Integer tail = eval(k - b, Partition::make([&] {
                                std::vector<int> parts = rest.parts();
                                parts.push_back(a - b);
                                return parts;
                            }()),
                            memo, nullptr);
        int coeff;
        if (d - 2 * b > 2) {
            coeff = 1;
        } else if (a - b == 2 && rest_sum == 0) {
            coeff = 3;
        } else if (a - b == 1 && rest_sum == 1) {
            coeff = 6;
        } else {
            throw UnreachableCase(
                "split with a=" + std::to_string(a) + " b=" +
                std::to_string(b) + " rest=" + std::to_string(rest_sum));
        }
        return joined + coeff * tail;
    }

    // a == b: the second branch bottoms out once the leftover weight is
    // at most 2; below that the leftover key is fixed and only a
    // multiplicity remains.
    if (rest_sum == 0) return joined + 3;
    if (rest_sum == 2) {
        if (rest.length() == 1) return joined + 6;  // rest = (2)
        return joined + 12;                          // rest = (1,1)
    }
    if (rest_sum > 2)
        return joined + 2 * eval(k - a, rest, memo, nullptr);
    throw UnreachableCase("split leftover weight " +
                          std::to_string(rest_sum) + " at k=" +
                          std::to_string(k));
}

Integer eval(int k, const Partition& mu, Memo& memo,
             const std::pair<int, int>* first_pair) {
    if (mu.length() == 1)
        return Integer(2 * k == 2 ? 1 : 3);
    if (mu.length() == 2 && mu.parts()[0] == 1) // mu = (1,1), degree 2
        return Integer(1);

    const std::pair<int, std::string> key{k, mu.to_string()};
    if (!first_pair) {
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    // Default: split the two largest parts (positions 0 and 1).
    const int i = first_pair ? first_pair->first : 0;
    const int j = first_pair ? first_pair->second : 1;
    Integer value = split(k, mu, i, j, memo);
    if (!first_pair) memo.emplace(key, value);
    return value;
}

} // namespace

TwosKey TwosKey::make(int k, Partition mu) {
    if (k < 1)
        throw BadArguments("twos key requires k >= 1, got " +
                           std::to_string(k));
    if (mu.empty())
        throw BadArguments("twos key requires a nonempty partition");
    if (mu.sum() != 2 * k)
        throw BadArguments("twos key requires |mu| = 2k, got |mu| = " +
                           std::to_string(mu.sum()) + " and 2k = " +
                           std::to_string(2 * k));
    TwosKey key;
    key.k = k;
    key.mu = std::move(mu);
    return key;
}

Integer n_twos_closed(const TwosKey& key) {
    if (2 * key.k <= 2)
        throw DegreeTooSmall(
            "closed form needs degree > 2; use the recursion at degree 2");
    Integer v = 3;
    v <<= static_cast<unsigned long>(key.mu.length() - 1);
    return v;
}

Integer n_twos_recursive(const TwosKey& key) {
    Memo memo;
    return eval(key.k, key.mu, memo, nullptr);
}

Integer n_twos_recursive_with_first_pair(const TwosKey& key, int i, int j) {
    if (i == j || i < 0 || j < 0 || i >= key.mu.length() ||
        j >= key.mu.length())
        throw BadArguments("invalid part positions " + std::to_string(i) +
                           ", " + std::to_string(j));
    if (key.mu.length() < 2)
        throw BadArguments("need two parts to choose a pair");
    // Degree-2 keys are base cases; choice is moot but stays legal.
    if (2 * key.k == 2) return n_twos_recursive(key);
    Memo memo;
    std::pair<int, int> pair{i, j};
    return eval(key.k, key.mu, memo, &pair);
}

} // namespace covercount

#include "covercount/closed_form_hurwitz.hpp"

#include <algorithm>
#include <string>

#include "covercount/errors.hpp"

namespace covercount {

Rational twos_complete(int k) {
    if (k < 1)
        throw NonPositive("twos_complete requires k >= 1, got " +
                          std::to_string(k));
    Rational v(k, 2);
    v.canonicalize();
    return v;
}

Rational twos_cycles(int k, int a, int b) {
    if (k < 1)
        throw NonPositive("twos_cycles requires k >= 1, got " +
                          std::to_string(k));
    if (a < 1 || b < 1)
        throw BadArguments("twos_cycles requires positive cycle lengths");
    if (a + b != 2 * k)
        throw BadArguments("twos_cycles requires a + b = 2k, got " +
                           std::to_string(a) + " + " + std::to_string(b) +
                           " != " + std::to_string(2 * k));
    // Only the balanced split supports a cover at all.
    if (a != b) return Rational(0);
    Rational v(1, 2 * k);
    v.canonicalize();
    return v;
}

Rational twos_even(int k) {
    if (k < 1)
        throw NonPositive("twos_even requires k >= 1, got " +
                          std::to_string(k));
    return Rational(1, 2);
}

Rational twos_odd(int k) {
    if (k < 1)
        throw NonPositive("twos_odd requires k >= 1, got " +
                          std::to_string(k));
    return Rational(1);
}

Rational near_cycle_pair(int d, int n, int a) {
    if (d < 2)
        throw BadArguments("near_cycle_pair requires degree >= 2, got " +
                           std::to_string(d));
    if (n < 1 || 2 * n > d)
        throw BadArguments("near_cycle_pair requires 1 <= n <= d/2, got n=" +
                           std::to_string(n));
    if (a < 2 || 2 * a > d + 2)
        throw BadArguments(
            "near_cycle_pair requires 2 <= a <= d/2 + 1, got a=" +
            std::to_string(a));
    Rational v(std::min(a - 1, n));
    // The (n,n) profile fixes an extra symmetry, halving the count.
    if (d == 2 * n) v /= 2;
    v.canonicalize();
    return v;
}

} // namespace covercount

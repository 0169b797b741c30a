#pragma once

#include "covercount/rational.hpp"

namespace covercount {

// Closed forms for several families of genus-zero connected double and
// triple Hurwitz numbers.  Each function checks its domain and throws
// (NonPositive / BadArguments) outside it; none of them silently returns 0
// for inputs it does not cover.  The equality of every family with the
// exhaustive enumerator is property-tested over all degrees the test
// budget allows.

// Degree 2k, profiles (2k), (2^k), (2^k), (2,1^{2k-2}).  Value k/2.
Rational twos_complete(int k);

// Degree 2k, profiles (2^k), (2^k), (a,b) with a+b = 2k.  Value 1/(2k)
// when a = b = k, otherwise 0.  Arguments may come in either order.
Rational twos_cycles(int k, int a, int b);

// Degree 2k, profiles (2k), (2^k), (2^{k-1},1,1).  Value 1/2.
Rational twos_even(int k);

// Degree 2k+1, profiles (2k+1), (2^k,1), (2^k,1).  Value 1.
Rational twos_odd(int k);

// Degree d, profiles (d-n,n), (a,1^{d-a}), (b,1^{d-b}) with a+b = d+2,
// 1 <= n <= d/2 and 2 <= a <= d/2+1.  Value min(a-1,n), halved when the
// two-part profile is (n,n).
Rational near_cycle_pair(int d, int n, int a);

} // namespace covercount

#include "covercount/rational.hpp"

#include "covercount/errors.hpp"

namespace covercount {

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer falling_factorial(unsigned long n, unsigned long k) {
    if (k > n) throw BadArguments("falling_factorial requires k <= n");
    Integer r = 1;
    for (unsigned long i = 0; i < k; ++i) r *= Integer(n - i);
    return r;
}

std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw BadArguments("empty rational literal");
    Rational q;
    // mpq_set_str accepts "num" and "num/den" but not a zero denominator,
    // and leaves the value unreduced, so canonicalise afterwards.
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw BadArguments("malformed rational literal: " + text);
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
        throw BadArguments("zero denominator in rational literal: " + text);
    q.canonicalize();
    return q;
}

} // namespace covercount

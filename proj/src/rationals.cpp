#include "fliess/rationals.hpp"

#include "fliess/errors.hpp"

namespace fliess {

Rat parse_rational(const std::string& s) {
    if (s.empty())
        throw parse_error("empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw parse_error("malformed rational literal: '" + s + "'");
    if (q.get_den() == 0)
        throw parse_error("zero denominator in rational literal: '" + s + "'");
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

std::string coeff_prefix(const Rat& q, bool leading) {
    std::string sign;
    Rat mag = q;
    if (q < 0) {
        sign = leading ? "-" : "- ";
        mag = -q;
    } else if (!leading) {
        sign = "+ ";
    }
    if (mag == 1)
        return sign;
    return sign + rat_to_string(mag) + " ";
}

Rat binomial(unsigned long n, unsigned long k) {
    if (k > n)
        return Rat(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rat(b);
}

Rat rat_pow(const Rat& base, unsigned long k) {
    Rat r(1);
    Rat b = base;
    while (k > 0) {
        if (k & 1)
            r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

} // namespace fliess

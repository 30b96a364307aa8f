#pragma once

#include <gmpxx.h>

#include <string>

namespace fliess {

// Exact rational scalar used throughout the symbolic layer. Arithmetic keeps
// values canonical; only the evaluation layer works in double.
using Rat = mpq_class;

// Parses "3", "-7/2", "0". Throws parse_error on malformed input or zero
// denominator.
Rat parse_rational(const std::string& s);

std::string rat_to_string(const Rat& q);

// Sign-and-magnitude prefix for pretty printers: "" / "-" on the leading
// term, "+ " / "- " afterwards, magnitude omitted when 1.
std::string coeff_prefix(const Rat& q, bool leading);

inline double to_double(const Rat& q) { return q.get_d(); }
inline double to_double(double x) { return x; }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

// Exact binomial coefficient as a rational (integer-valued).
Rat binomial(unsigned long n, unsigned long k);

// Exact integer power, th^k, k >= 0.
Rat rat_pow(const Rat& base, unsigned long k);

template <class R>
R scalar_cast(const Rat& q);

template <>
inline Rat scalar_cast<Rat>(const Rat& q) {
    return q;
}

template <>
inline double scalar_cast<double>(const Rat& q) {
    return q.get_d();
}

} // namespace fliess

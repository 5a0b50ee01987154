#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace csp {

// All optimality and feasibility decisions in this project are made over
// exact rationals. Never introduce a floating-point shortcut here.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Integer rat_num(const Rational& q) { return numerator(q); }
inline Integer rat_den(const Rational& q) { return denominator(q); }

// Largest integer <= q.
inline Integer rat_floor(const Rational& q) {
    Integer n = numerator(q), d = denominator(q);
    Integer f = n / d;
    if (n % d != 0 && n < 0) --f;
    return f;
}

// Smallest integer >= q.
inline Integer rat_ceil(const Rational& q) {
    Integer n = numerator(q), d = denominator(q);
    Integer c = n / d;
    if (n % d != 0 && n > 0) ++c;
    return c;
}

// Canonical text form: "p" when the denominator is 1, "p/q" otherwise.
inline std::string rat_str(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

// Parses "p" or "p/q". Returns false on malformed input or zero denominator.
bool parse_rational(const std::string& text, Rational& out);

} // namespace csp

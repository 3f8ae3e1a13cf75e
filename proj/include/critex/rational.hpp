#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>

namespace critex {

using Int = mpz_class;
using Rat = mpq_class;

// floor(a/b), b > 0
Int floor_div(const Int& a, const Int& b);

// Canonicalized rational from a raw numerator/denominator pair. The mpq
// two-argument constructor does not reduce, and GMP comparisons assume
// canonical form, so raw construction must go through here.
inline Rat make_rat(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}
inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Int rat_floor(const Rat& x);
Int rat_ceil(const Rat& x);

// Parses "17", "-3/4". Throws std::invalid_argument on malformed input.
Rat parse_rat(std::string_view s);

// "17", "-3/4" (lowest terms, denominator omitted when 1)
std::string rat_str(const Rat& x);

// floor(sqrt(n)), n >= 0
Int isqrt(const Int& n);

// Largest s with s^2 | n; returns (s, n / s^2). n >= 0.
std::pair<Int, Int> extract_square(const Int& n);

// Dyadic rounding with denominator 2^bits: first <= x, second >= x.
Rat dyadic_below(const Rat& x, unsigned bits);
Rat dyadic_above(const Rat& x, unsigned bits);

}  // namespace critex

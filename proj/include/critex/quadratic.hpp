#pragma once

#include "critex/rational.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace critex {

/// Exact element a + b*sqrt(d) of a real quadratic field.
///
/// d is squarefree and nonnegative; d == 0 iff b == 0, so rationals embed
/// canonically. Sign, floor and same-field comparison are fully symbolic
/// (compare a^2 against b^2*d); no floating point is involved anywhere.
/// Comparison across two distinct irrational fields falls back to directed
/// rational-interval refinement, which terminates because such values are
/// never equal.
class Quad {
public:
    Quad() : a_(0), b_(0), d_(0) {}
    Quad(long v) : a_(v), b_(0), d_(0) {}
    Quad(const Int& v) : a_(Rat(v)), b_(0), d_(0) {}
    Quad(const Rat& r) : a_(r), b_(0), d_(0) { a_.canonicalize(); }
    Quad(Rat a, Rat b, const Int& d);

    /// sqrt(n) for integer n >= 0, with the square part extracted.
    static Quad sqrt_of(const Int& n);

    const Rat& rational_part() const { return a_; }
    const Rat& surd_coeff() const { return b_; }
    const Int& surd() const { return d_; }
    bool is_rational() const { return d_ == 0; }
    /// The rational value; throws if irrational.
    const Rat& as_rational() const;

    Quad operator-() const { return Quad(-a_, -b_, d_, unchecked{}); }
    Quad operator+(const Quad& o) const;
    Quad operator-(const Quad& o) const;
    Quad operator*(const Quad& o) const;
    Quad operator/(const Quad& o) const;
    Quad& operator+=(const Quad& o) { return *this = *this + o; }
    Quad& operator-=(const Quad& o) { return *this = *this - o; }
    Quad& operator*=(const Quad& o) { return *this = *this * o; }
    Quad& operator/=(const Quad& o) { return *this = *this / o; }

    Quad conjugate() const { return Quad(a_, -b_, d_, unchecked{}); }

    int sign() const;

    /// Exact comparison; requires a common field (throws incompatible_fields
    /// when both sides are irrational over distinct d).
    static int cmp_same_field(const Quad& x, const Quad& y);

    /// Total-order comparison for any two values, refining rational
    /// enclosures when the fields differ.
    static int cmp(const Quad& x, const Quad& y);

    bool operator==(const Quad& o) const { return cmp(*this, o) == 0; }
    bool operator!=(const Quad& o) const { return cmp(*this, o) != 0; }
    bool operator<(const Quad& o) const { return cmp(*this, o) < 0; }
    bool operator<=(const Quad& o) const { return cmp(*this, o) <= 0; }
    bool operator>(const Quad& o) const { return cmp(*this, o) > 0; }
    bool operator>=(const Quad& o) const { return cmp(*this, o) >= 0; }

    Int floor() const;
    Int ceil() const;

    /// Rational enclosure [lo, hi] with 2^-bits-scale width.
    std::pair<Rat, Rat> enclosure(unsigned bits) const;

    double to_double() const;
    std::string str() const;                  // "5/2 + 1/2*sqrt(5)"
    std::string decimal(int digits = 12) const;

private:
    struct unchecked {};
    Quad(Rat a, Rat b, Int d, unchecked) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}
    void require_same_field(const Quad& o) const;

    Rat a_, b_;
    Int d_;
};

struct incompatible_fields : std::domain_error {
    incompatible_fields() : std::domain_error("quadratic values lie in distinct fields") {}
};

/// Spec-facing exact comparison (throws on incompatible fields): -1, 0, +1.
inline int quad_cmp(const Quad& x, const Quad& y) { return Quad::cmp_same_field(x, y); }

Int floor_quad(const Quad& x);

/// Parses expressions like "1/2", "(3*sqrt(65)-5)/80", "2+(1+sqrt(5))/2".
/// Grammar: + - * / over integers, sqrt(rational>=0), parentheses.
Quad parse_quad(std::string_view s);

std::ostream& operator<<(std::ostream& os, const Quad& q);

}  // namespace critex

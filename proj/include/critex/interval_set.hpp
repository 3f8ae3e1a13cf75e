#pragma once

#include "critex/quadratic.hpp"

#include <optional>
#include <vector>

namespace critex {

/// Finite union of disjoint nonempty open intervals inside a declared
/// ambient open interval (lo, hi). Endpoints are exact Quad values.
///
/// Adding intervals merges only proper overlaps; two pieces touching at a
/// single point stay separate (their union is not open), which is what
/// "minus the closure" subtraction needs.
class IntervalSet {
public:
    struct Interval {
        Quad lo, hi;  // open
    };

    IntervalSet(Quad ambient_lo, Quad ambient_hi);
    static IntervalSet full(Quad ambient_lo, Quad ambient_hi);

    const Quad& ambient_lo() const { return amb_lo_; }
    const Quad& ambient_hi() const { return amb_hi_; }
    const std::vector<Interval>& intervals() const { return iv_; }

    bool empty() const { return iv_.empty(); }

    /// Union with the open interval (lo, hi), clipped to the ambient.
    void add(const Quad& lo, const Quad& hi);

    /// Removes the closed interval [lo, hi].
    void subtract_closure(const Quad& lo, const Quad& hi);
    /// Removes the closure of every interval of `removed`.
    void subtract_closure(const IntervalSet& removed);

    bool contains(const Quad& x) const;
    bool intersects_open(const Quad& lo, const Quad& hi) const;

    /// Pointwise intersection; keeps this set's ambient.
    IntervalSet intersect(const IntervalSet& other) const;

    /// Rounds every endpoint outward to dyadics with denominator 2^bits.
    /// Endpoints must be rational. The result covers the original set.
    void round_outward(unsigned bits);

    /// Bridges the smallest gaps until at most max_intervals pieces remain;
    /// the result covers the original set.
    void coarsen(size_t max_intervals);

    std::optional<std::pair<Quad, Quad>> hull() const;

    std::string str() const;  // "(1,3)∪(7/2,4)" or "∅"

    bool operator==(const IntervalSet& o) const;

private:
    Quad amb_lo_, amb_hi_;
    std::vector<Interval> iv_;  // sorted, pairwise disjoint, each lo < hi
};

}  // namespace critex

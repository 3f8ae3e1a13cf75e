#include "critex/interval_set.hpp"

#include <algorithm>

namespace critex {

IntervalSet::IntervalSet(Quad ambient_lo, Quad ambient_hi)
    : amb_lo_(std::move(ambient_lo)), amb_hi_(std::move(ambient_hi)) {}

IntervalSet IntervalSet::full(Quad ambient_lo, Quad ambient_hi) {
    IntervalSet s(ambient_lo, ambient_hi);
    if (s.amb_lo_ < s.amb_hi_) s.iv_.push_back({s.amb_lo_, s.amb_hi_});
    return s;
}

void IntervalSet::add(const Quad& lo_in, const Quad& hi_in) {
    Quad lo = lo_in < amb_lo_ ? amb_lo_ : lo_in;
    Quad hi = hi_in > amb_hi_ ? amb_hi_ : hi_in;
    if (!(lo < hi)) return;
    std::vector<Interval> out;
    out.reserve(iv_.size() + 1);
    size_t i = 0;
    // Pieces ending at or before lo stay separate: (a,lo)∪(lo,hi) is not open.
    while (i < iv_.size() && iv_[i].hi <= lo) out.push_back(iv_[i++]);
    // Merge every interval that properly overlaps (lo, hi).
    Quad mlo = lo, mhi = hi;
    while (i < iv_.size() && iv_[i].lo < hi) {
        if (iv_[i].lo < mlo) mlo = iv_[i].lo;
        if (iv_[i].hi > mhi) mhi = iv_[i].hi;
        ++i;
    }
    out.push_back({std::move(mlo), std::move(mhi)});
    while (i < iv_.size()) out.push_back(iv_[i++]);
    iv_ = std::move(out);
}

void IntervalSet::subtract_closure(const Quad& lo, const Quad& hi) {
    if (lo > hi) return;
    std::vector<Interval> out;
    out.reserve(iv_.size() + 1);
    for (auto& seg : iv_) {
        if (seg.hi <= lo || seg.lo >= hi) {
            out.push_back(seg);
            continue;
        }
        if (seg.lo < lo) out.push_back({seg.lo, lo});
        if (hi < seg.hi) out.push_back({hi, seg.hi});
    }
    iv_ = std::move(out);
}

void IntervalSet::subtract_closure(const IntervalSet& removed) {
    for (auto& seg : removed.iv_) subtract_closure(seg.lo, seg.hi);
}

bool IntervalSet::contains(const Quad& x) const {
    for (auto& seg : iv_)
        if (seg.lo < x && x < seg.hi) return true;
    return false;
}

bool IntervalSet::intersects_open(const Quad& lo, const Quad& hi) const {
    for (auto& seg : iv_) {
        Quad l = seg.lo > lo ? seg.lo : lo;
        Quad h = seg.hi < hi ? seg.hi : hi;
        if (l < h) return true;
    }
    return false;
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
    IntervalSet out(amb_lo_, amb_hi_);
    for (auto& a : iv_) {
        for (auto& b : other.iv_) {
            Quad lo = a.lo > b.lo ? a.lo : b.lo;
            Quad hi = a.hi < b.hi ? a.hi : b.hi;
            if (lo < hi) out.add(lo, hi);
        }
    }
    return out;
}

void IntervalSet::round_outward(unsigned bits) {
    std::vector<Interval> rounded;
    rounded.reserve(iv_.size());
    for (auto& seg : iv_) {
        Quad lo(dyadic_below(seg.lo.as_rational(), bits));
        Quad hi(dyadic_above(seg.hi.as_rational(), bits));
        if (lo < amb_lo_) lo = amb_lo_;
        if (hi > amb_hi_) hi = amb_hi_;
        rounded.push_back({std::move(lo), std::move(hi)});
    }
    iv_.clear();
    for (auto& seg : rounded) add(seg.lo, seg.hi);
}

void IntervalSet::coarsen(size_t max_intervals) {
    if (max_intervals < 1) max_intervals = 1;
    while (iv_.size() > max_intervals) {
        size_t best = 0;
        Quad best_gap = iv_[1].lo - iv_[0].hi;
        for (size_t i = 1; i + 1 < iv_.size(); ++i) {
            Quad gap = iv_[i + 1].lo - iv_[i].hi;
            if (gap < best_gap) {
                best_gap = gap;
                best = i;
            }
        }
        iv_[best].hi = iv_[best + 1].hi;
        iv_.erase(iv_.begin() + best + 1);
    }
}

std::optional<std::pair<Quad, Quad>> IntervalSet::hull() const {
    if (iv_.empty()) return std::nullopt;
    return std::make_pair(iv_.front().lo, iv_.back().hi);
}

std::string IntervalSet::str() const {
    if (iv_.empty()) return "∅";
    std::string out;
    for (size_t i = 0; i < iv_.size(); ++i) {
        if (i) out += "∪";
        out += "(" + iv_[i].lo.str() + "," + iv_[i].hi.str() + ")";
    }
    return out;
}

bool IntervalSet::operator==(const IntervalSet& o) const {
    if (iv_.size() != o.iv_.size()) return false;
    for (size_t i = 0; i < iv_.size(); ++i)
        if (iv_[i].lo != o.iv_[i].lo || iv_[i].hi != o.iv_[i].hi) return false;
    return true;
}

}  // namespace critex

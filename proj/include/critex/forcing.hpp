#pragma once

#include "critex/interval_set.hpp"
#include "critex/matclass.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace critex {

struct Triplet {
    long m, k, l;
};

/// The three-case exponent condition: k=l -> 1/k > beta; k>l ->
/// (1+m)/(k+ml) >= beta; k<l -> (2+m)/(k+(m+1)l) >= beta.
bool p3_holds(const Triplet& t, const Quad& beta);

/// Open interval of tails delta admitting the triplet; upper bound absent
/// means unbounded. May be empty for l >= 2.
struct P2Interval {
    Rat lo;
    std::optional<Rat> hi;
    bool empty() const { return hi && !(lo < *hi); }
};
P2Interval p2_interval(const Triplet& t);

/// ceil(L*(1+beta)) - 2: admissible sets live in (1, this).
long ambient_upper(const PeriodPair& pp, const Quad& beta);

/// Enumerates every triplet (m,k,l) with 0 <= m <= m_hi, k+l > 0, l <= k+1,
/// beta*(k+l*m) <= m+2, and (l,k) in the solution lattice of the class.
/// These bounds cover every triplet that can shrink an admissible set,
/// both in the P3 form and in the backward-reduction form.
void for_each_lattice_triplet(const ClassName& c, const PeriodPair& pp, const Quad& beta,
                              long m_hi, const std::function<void(const Triplet&)>& fn);

struct AdmissibleOptions {
    bool proportional_filter = true;  // skip (m,Tk,Tl) once (m,k,l) applied
};

/// D(beta, A): the ambient (1, ceil(L(1+beta))-2) minus the closure of the
/// P2 interval of every lattice triplet satisfying P3.
IntervalSet admissible_set(const ClassName& c, const Quad& beta, const PeriodPair& pp,
                           const AdmissibleOptions& opt = {});

}  // namespace critex

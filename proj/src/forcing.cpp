#include "critex/forcing.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

namespace critex {

bool p3_holds(const Triplet& t, const Quad& beta) {
    if (t.k + t.l <= 0) return false;
    if (t.k == t.l) return Quad(Rat(1, t.k)) > beta;
    if (t.k > t.l) return Quad(make_rat(1 + t.m, t.k + t.m * t.l)) >= beta;
    return Quad(make_rat(2 + t.m, t.k + (t.m + 1) * t.l)) >= beta;
}

P2Interval p2_interval(const Triplet& t) {
    Rat floor_lo(t.m + 1);
    if (t.l == 0) {
        Rat lo(t.m + t.k - 1);
        return {std::max(lo, floor_lo), std::nullopt};
    }
    if (t.l == 1) {
        Rat lo = Rat(t.m) + make_rat(t.k - 1, 2);
        return {std::max(lo, floor_lo), std::nullopt};
    }
    Rat lo = Rat(t.m) + make_rat(t.k - 1, t.l + 1);
    Rat hi = Rat(t.m) + make_rat(t.k + 1, t.l - 1);
    return {std::max(lo, floor_lo), hi};
}

long ambient_upper(const PeriodPair& pp, const Quad& beta) {
    Quad bound = Quad(pp.L) * (Quad(1) + beta);
    Int u = bound.ceil() - 2;
    if (!u.fits_slong_p()) throw std::overflow_error("ambient bound too large");
    return u.get_si();
}

void for_each_lattice_triplet(const ClassName& c, const PeriodPair& pp, const Quad& beta,
                              long m_hi, const std::function<void(const Triplet&)>& fn) {
    for (long m = 0; m <= m_hi; ++m) {
        SolutionLattice lat = solution_lattice(c, m, pp);
        // k >= l-1 plus the k bound below give l*(1+m) <= (m+2)/beta + 1.
        Quad budget = Quad(m + 2) / beta;
        Int lcap_i = ((budget + Quad(1)) / Quad(m + 1)).floor();
        if (sgn(lcap_i) < 0) continue;
        long lcap = lcap_i.fits_slong_p() ? lcap_i.get_si() : std::numeric_limits<long>::max() / 4;
        for (long l = 0; l <= lcap; l += lat.l_step) {
            // beta*(k + l*m) <= m+2  =>  k <= (m+2)/beta - l*m
            Int kcap_i = (budget - Quad(l * m)).floor();
            if (sgn(kcap_i) < 0) break;
            if (!kcap_i.fits_slong_p()) throw std::overflow_error("triplet bound too large");
            long kcap = kcap_i.get_si();
            long t = l / lat.l_step;
            long k0 = t * lat.k_at_lstep % lat.k_step;
            long kmin = std::max<long>(l == 0 ? 1 : 0, l - 1);  // k+l > 0 and l <= k+1
            long k = k0 + (kmin > k0 ? (kmin - k0 + lat.k_step - 1) / lat.k_step * lat.k_step : 0);
            for (; k <= kcap; k += lat.k_step) fn({m, k, l});
        }
    }
}

IntervalSet admissible_set(const ClassName& c, const Quad& beta, const PeriodPair& pp,
                           const AdmissibleOptions& opt) {
    long U = ambient_upper(pp, beta);
    IntervalSet d = IntervalSet::full(Quad(1), Quad(U));
    if (d.empty()) return d;

    std::vector<std::vector<Triplet>> by_m(std::max<long>(U - 1, 0));
    for_each_lattice_triplet(c, pp, beta, U - 2, [&](const Triplet& t) {
        if (p3_holds(t, beta)) by_m[t.m].push_back(t);
    });
    for (auto& cands : by_m) {
        std::sort(cands.begin(), cands.end(), [](const Triplet& a, const Triplet& b) {
            return std::tie(a.m, a.k, a.l) < std::tie(b.m, b.k, b.l);
        });
        std::stable_sort(cands.begin(), cands.end(), [](const Triplet& a, const Triplet& b) {
            return a.k + a.l < b.k + b.l;
        });
        std::vector<Triplet> applied;
        for (const Triplet& t : cands) {
            if (opt.proportional_filter) {
                bool skip = false;
                for (const Triplet& a : applied) {
                    if (a.k + a.l == 0) continue;
                    long T = 0;
                    if (a.k > 0) T = t.k / a.k;
                    else if (a.l > 0) T = t.l / a.l;
                    if (T >= 2 && t.k == T * a.k && t.l == T * a.l) {
                        skip = true;
                        break;
                    }
                }
                if (skip) continue;
            }
            P2Interval iv = p2_interval(t);
            if (iv.empty()) continue;
            Quad hi = iv.hi ? Quad(*iv.hi) : Quad(U);
            d.subtract_closure(Quad(iv.lo), hi);
            applied.push_back(t);
        }
    }
    return d;
}

}  // namespace critex

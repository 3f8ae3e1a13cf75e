#pragma once

#include "critex/cfrac.hpp"
#include "critex/cgap.hpp"
#include "critex/matclass.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace critex {

/// Replaces the 'a' positions of u by successive letters of y and the 'b'
/// positions by successive letters of y'. Alphabets must be disjoint.
std::string colour(std::string_view u, const ConstantGap& y, const ConstantGap& yp);

/// Parikh-window membership |l*(delta-m) - k| < delta-m+1 with k+l > 0,
/// including the m+1 < delta requirement.
bool s2_member(const Int& l, const Int& k, const Int& m, const Quad& delta);

struct PhiRecord {
    size_t period_pos = 0;  // position within the continued-fraction period
    long m = 0, k = 0, l = 0;
    Quad delta, x, phi;
};

struct EstarResult {
    Quad value;  // 1 + max phi over the class cycle
    PhiRecord best;
    std::vector<std::string> anomalies;  // empty-cell diagnostics, never silent
};

/// Exact asymptotic critical exponent of colour(u, y, y') where u has slope
/// cf and the constant gap periods are pp.P, pp.Pp. Iterates matrix classes
/// until the (class, period-position) pair repeats, then maximizes
/// (1+m+x)/(k+lm+lx) over the solution lattice inside the Parikh window,
/// with exact tail values delta and reversed limits x.
EstarResult estar_exact(const ContinuedFraction& cf, const PeriodPair& pp);

struct RunsReport {
    Rat exponent{0};  // max (run+p)/p over periods p in [n_lo, n_hi]
    size_t period = 0, pos = 0, run_len = 0;
    bool infinite_suspect = false;  // maximal run touches the prefix end
};

/// Scans every period length p in [n_lo, n_hi] for the longest segment with
/// w[i] == w[i+p]; the witness factor is w[pos, pos+run_len+p).
RunsReport max_exponent_in_window(std::string_view w, size_t n_lo, size_t n_hi);

/// Max exponent over repetitions whose matched extension (the repeated
/// overlap, i.e. the bispecial part) has length in [run_lo, run_hi]; the
/// period is unconstrained. This is the window the long-factor repetition
/// bounds speak about.
RunsReport max_exponent_long_bispecials(std::string_view w, size_t run_lo, size_t run_hi);

struct OracleReport {
    RunsReport runs;
    std::string coloured_head;  // first letters of the scanned prefix
};

/// Empirical lower bound for the repetition exponent of the coloured
/// sequence over the period window; prefix generated from cf.
OracleReport oracle_estimate(const ContinuedFraction& cf, const ConstantGap& y,
                             const ConstantGap& yp, size_t prefix_len, size_t n_lo, size_t n_hi);

}  // namespace critex

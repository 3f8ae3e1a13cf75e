#pragma once

#include "critex/cfrac.hpp"

#include <array>
#include <string>
#include <vector>

namespace critex {

/// Prefix of the standard Sturmian sequence of slope cf, over {a, b} with b
/// the most frequent letter. Length >= min_len; deterministic.
std::string sturmian_prefix(const ContinuedFraction& cf, size_t min_len);

/// Parikh vectors as (count_a, count_b).
struct ParikhVec {
    Int a, b;
    bool operator==(const ParikhVec& o) const { return a == o.a && b == o.b; }
};

struct ReturnParikh {
    ParikhVec r, s, z;  // prefix return word, other return word, bispecial
};

/// Return-word Parikh vectors at convergent index N (the state) and offset
/// 0 <= m < a_{N+1}: V(r) = (p_N, q_N), V(s) = (m p_N + p_{N-1}, m q_N + q_{N-1}),
/// V(z) = V(r) + V(s) - (1,1).
ReturnParikh return_word_parikh(const ConvergentState& st, long m, uint32_t a_next);

/// Whether some factor has l letters 'a' and k letters 'b': |l*delta - k| < delta + 1
/// for delta = 1/theta > 1.
bool parikh_admissible(const Int& l, const Int& k, const Quad& delta);

/// Exact asymptotic critical exponent of the Sturmian sequence of slope cf.
Quad estar_sturmian(const ContinuedFraction& cf);

/// Exact critical exponent: sup over all convergent indices of
/// a_{N+1} + (Q_{N-1} - 2)/Q_N, plus 2. The scan stops once the tail is
/// certified to stay below its residue-class limit.
Quad e_sturmian(const ContinuedFraction& cf);

/// Zeckendorf digits c_{k-1}...c_2 of i (no two adjacent ones).
std::string zeckendorf_digits(unsigned long i, int k);

struct RtStarWitness {
    std::string word;          // binary prefix of the coded sequence
    Rat measured;              // max exponent over the long-factor window
    Rat bound;                 // 1 + 2/(F_k - 3)
    size_t n_lo = 0, n_hi = 0; // period window scanned
    bool within_bound = false;
    std::string source;        // description of the balanced source sequence
};

/// Builds the Fibonacci-coded binary sequence over blocks 110 + (i)_Zeck from
/// a balanced source with d = 2*floor(F_k/2) letters, and measures its
/// long-factor repetition exponent. k >= 7; prefix_len >= 4000.
RtStarWitness rt_star_witness(int k, size_t prefix_len);

}  // namespace critex

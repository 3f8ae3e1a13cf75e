#include "critex/sturmian.hpp"

#include "critex/balanced.hpp"
#include "critex/cgap.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace critex {

std::string sturmian_prefix(const ContinuedFraction& cf, size_t min_len) {
    if (min_len < 1) throw std::invalid_argument("min_len must be >= 1");
    if (!cf.periodic()) throw degenerate_period{};
    // Standard words: s_{-1} = a, s_0 = b, s_n = s_{n-1}^{a_n} s_{n-2}.
    // prev/cur always hold complete standard words; a partially assembled
    // word is returned directly (it is a prefix of the full s_n).
    std::string prev = "a", cur = "b";
    for (size_t n = 1; cur.size() < min_len; ++n) {
        uint32_t a = cf.quotient(n);
        std::string next;
        next.reserve(std::min<size_t>(cur.size() * a + prev.size(), min_len + cur.size()));
        for (uint32_t i = 0; i < a && next.size() < min_len; ++i) next += cur;
        if (next.size() < min_len) next += prev;
        if (next.size() >= min_len) return next;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

ReturnParikh return_word_parikh(const ConvergentState& st, long m, uint32_t a_next) {
    if (m < 0 || (unsigned long)m >= a_next) throw std::out_of_range("m must satisfy 0 <= m < a_{N+1}");
    ReturnParikh out;
    out.r = {st.p, st.q};
    out.s = {m * st.p + st.p_prev, m * st.q + st.q_prev};
    out.z = {out.r.a + out.s.a - 1, out.r.b + out.s.b - 1};
    return out;
}

bool parikh_admissible(const Int& l, const Int& k, const Quad& delta) {
    Quad lhs = Quad(Rat(l)) * delta - Quad(Rat(k));
    if (lhs.sign() < 0) lhs = -lhs;
    return lhs < delta + Quad(1);
}

Quad estar_sturmian(const ContinuedFraction& cf) {
    return estar_exact(cf, PeriodPair(1, 1)).value;
}

Quad e_sturmian(const ContinuedFraction& cf) {
    if (!cf.periodic()) throw degenerate_period{};
    const size_t s = cf.pre.size(), p = cf.period.size();

    // Residue-class limits of a_{N+1} + Q_{N-1}/Q_N.
    std::vector<Quad> xlim(p), limit_term(p);
    for (size_t i = 0; i < p; ++i) {
        xlim[i] = cf.reversed_limit((i + p - 1) % p);
        limit_term[i] = Quad(cf.period[i]) + xlim[i];
    }

    // Exact scan of a_{N+1} + (Q_{N-1} - 2)/Q_N. Stop once a full window of
    // 2p consecutive indices in the periodic regime satisfies
    // |x_N - xlim| <= 2/Q_N: that bound propagates down each residue class
    // (|x_{N+2p} - xlim| <= |x_N - xlim| * Q_N/Q_{N+2p}), so all later terms
    // are at most their class limit.
    Quad best_finite(Rat(-1));
    ConvergentState st = ConvergentState::initial();
    size_t consecutive_ok = 0;
    const size_t cap = s + 220 * p + 220;
    for (size_t N = 0;; ++N) {
        uint32_t a_next = cf.quotient(N + 1);
        Rat frac(st.Q_prev - 2, st.Q);
        frac.canonicalize();
        Rat term = Rat((long)a_next) + frac;
        if (Quad(term) > best_finite) best_finite = Quad(term);
        if (N >= s) {
            size_t i = (N - s) % p;
            Rat xn(st.Q_prev, st.Q);
            xn.canonicalize();
            Quad err = Quad(xn) - xlim[i];
            if (err.sign() < 0) err = -err;
            Rat tol(2, st.Q);
            tol.canonicalize();
            consecutive_ok = (err <= Quad(tol)) ? consecutive_ok + 1 : 0;
            if (consecutive_ok >= 2 * p) break;
        }
        if (N > cap) throw std::runtime_error("tail certification did not converge");
        st = st.advanced(a_next);
    }

    Quad best = best_finite;
    for (size_t i = 0; i < p; ++i)
        if (limit_term[i] > best) best = limit_term[i];
    return Quad(2) + best;
}

std::string zeckendorf_digits(unsigned long i, int k) {
    if (k < 4) throw std::invalid_argument("k too small for a Zeckendorf code");
    // Fibonacci numbers F_2..F_{k-1} with F_1 = F_2 = 1.
    std::vector<unsigned long> fib(k, 0);
    fib[1] = 1;
    for (int j = 2; j < k; ++j) fib[j] = fib[j - 1] + fib[j - 2];
    std::string digits;
    bool prev_one = false;
    for (int j = k - 1; j >= 2; --j) {
        if (!prev_one && fib[j] <= i) {
            digits += '1';
            i -= fib[j];
            prev_one = true;
        } else {
            digits += '0';
            prev_one = false;
        }
    }
    if (i != 0) throw std::invalid_argument("value does not fit the digit range");
    return digits;
}

RtStarWitness rt_star_witness(int k, size_t prefix_len) {
    if (k < 7) throw std::invalid_argument("k must be >= 7");
    if (prefix_len < 4000) throw std::invalid_argument("prefix too short to measure");
    std::vector<unsigned long> fib(k + 1, 0);
    fib[1] = 1;
    for (int j = 2; j <= k; ++j) fib[j] = fib[j - 1] + fib[j - 2];
    unsigned long Fk = fib[k];
    unsigned long d = 2 * (Fk / 2);
    if (d != 12)
        throw std::invalid_argument("balanced source construction available for k = 7 only");

    // Balanced 12-ary source: colouring of the slope-[0,1,(2)] sequence by
    // the uniform-gap words of period 6. Every letter has gap 6 on its own
    // side, so matches at two consecutive positions need both letter counts
    // across the gap to be multiples of 6 -- the first such window is long,
    // which keeps the long-bispecial repetition ratios small.
    ConstantGap y("012345"), yp("6789ab");
    ContinuedFraction theta = ContinuedFraction::parse("0;1,(2)");

    size_t block = (size_t)k + 1;
    size_t src_len = prefix_len / block + 2;
    std::string u = sturmian_prefix(theta, src_len);
    u.resize(src_len);
    std::string v = colour(u, y, yp);

    const char* letters = "0123456789abcdefghijklmnopqrstuvwxyz";
    std::string word;
    word.reserve(prefix_len + block);
    for (char c : v) {
        unsigned long i = (unsigned long)(std::strchr(letters, c) - letters);
        word += "110";
        word += zeckendorf_digits(i, k);
        if (word.size() >= prefix_len) break;
    }
    word.resize(prefix_len);

    RtStarWitness w;
    w.n_lo = 3 * block;
    w.n_hi = prefix_len / 4;
    w.word = std::move(word);
    w.measured = max_exponent_long_bispecials(w.word, w.n_lo, w.n_hi).exponent;
    w.bound = Rat(1) + Rat(2, Fk - 3);
    w.bound.canonicalize();
    w.within_bound = w.measured <= w.bound;
    w.source = "colouring of slope 0;1,(2) by the uniform constant gap words 012345 / 6789ab";
    return w;
}

}  // namespace critex

#include "critex/balanced.hpp"

#include "critex/sturmian.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace critex {

std::string colour(std::string_view u, const ConstantGap& y, const ConstantGap& yp) {
    std::set<char> ay(y.word().begin(), y.word().end());
    for (char c : yp.word())
        if (ay.count(c)) throw alphabet_collision{};
    std::string out;
    out.reserve(u.size());
    size_t i = 0, j = 0;
    for (char c : u) {
        if (c == 'a') out += y.at(i++);
        else if (c == 'b') out += yp.at(j++);
        else throw std::invalid_argument("source word must be over {a,b}");
    }
    return out;
}

bool s2_member(const Int& l, const Int& k, const Int& m, const Quad& delta) {
    if (l + k <= 0) return false;
    Quad dm = delta - Quad(Rat(m));
    if (!(Quad(1) < dm)) return false;  // m+1 < delta
    Quad lhs = Quad(Rat(l)) * dm - Quad(Rat(k));
    if (lhs.sign() < 0) lhs = -lhs;
    return lhs < dm + Quad(1);
}

namespace {

// Minimizes den = k + l*m + l*x over the solution lattice intersected with
// the window |l*dm - k| < dm + 1, where dm = delta - m. The numerator
// 1 + m + x is fixed, so this maximizes phi for the given m.
struct CellBest {
    bool found = false;
    long k = 0, l = 0;
    Quad den;
};

CellBest minimize_denominator(const SolutionLattice& lat, long m, const Quad& dm, const Quad& x) {
    CellBest best;
    const Quad width = dm + Quad(1);
    const Quad mx = Quad(m) + x;  // > 0
    for (long t = 0;; ++t) {
        long l = t * lat.l_step;
        if (best.found && !(Quad(l) * mx < best.den)) break;
        if (t > 0 && l > (1L << 40) / std::max(1L, lat.k_step)) break;  // safety, never hit
        Quad center = Quad(l) * dm;
        Quad wlo = center - width, whi = center + width;
        long k0 = (t * lat.k_at_lstep) % lat.k_step;
        Int kfirst_i = wlo.floor() + 1;
        long kmin = l == 0 ? 1 : 0;
        long kfirst = kfirst_i.fits_slong_p() ? std::max(kfirst_i.get_si(), kmin) : kmin;
        long k = k0 + (kfirst > k0 ? (kfirst - k0 + lat.k_step - 1) / lat.k_step * lat.k_step : 0);
        for (; Quad(k) < whi; k += lat.k_step) {
            Quad den = Quad(k + l * m) + Quad(l) * x;
            if (!best.found || den < best.den) best = {true, k, l, den};
        }
        if (t > 4 * lat.k_step * lat.l_step + 4096 && !best.found) break;  // diagnostic path
    }
    return best;
}

}  // namespace

EstarResult estar_exact(const ContinuedFraction& cf, const PeriodPair& pp) {
    if (!cf.periodic()) throw degenerate_period{};
    const size_t s = cf.pre.size(), p = cf.period.size();

    // Walk (class, period position) until it repeats; the repeating cycle
    // carries the limsup.
    std::map<std::pair<ClassName, size_t>, size_t> seen;
    std::vector<std::pair<ClassName, size_t>> order;
    ClassName cls = initial_class(pp);
    size_t N = 0, cycle_from = 0;
    while (true) {
        if (N >= s) {
            auto key = std::make_pair(cls, (N - s) % p);
            auto it = seen.find(key);
            if (it != seen.end()) {
                cycle_from = it->second;
                break;
            }
            seen.emplace(key, N);
            order.push_back(key);
        }
        cls = step(cls, cf.quotient(N + 1), pp);
        ++N;
    }

    EstarResult result;
    bool have = false;
    for (size_t idx = cycle_from - s; idx < order.size(); ++idx) {
        const auto& [c, i] = order[idx];
        Quad delta = cf.tail_value(s + i);
        Quad x = cf.reversed_limit((i + p - 1) % p);
        if (delta.surd() != x.surd())
            throw std::logic_error("tail and reversed limit landed in distinct fields");
        long a_next = cf.period[i];
        for (long m = 0; m < a_next; ++m) {
            SolutionLattice lat = solution_lattice(c, m, pp);
            Quad dm = delta - Quad(m);
            CellBest cell = minimize_denominator(lat, m, dm, x);
            if (!cell.found) {
                result.anomalies.push_back("empty solution cell at period position " +
                                           std::to_string(i) + ", m=" + std::to_string(m));
                continue;
            }
            Quad phi = (Quad(1 + m) + x) / cell.den;
            if (!have || phi > result.best.phi) {
                result.best = {i, m, cell.k, cell.l, delta, x, phi};
                have = true;
            }
        }
    }
    if (!have) throw std::logic_error("no solution cell produced a value");
    result.value = Quad(1) + result.best.phi;
    return result;
}

RunsReport max_exponent_in_window(std::string_view w, size_t n_lo, size_t n_hi) {
    if (n_lo < 1 || n_lo > n_hi) throw std::invalid_argument("bad period window");
    if (n_hi * 3 > w.size()) throw std::invalid_argument("window too wide for the prefix");
    RunsReport best;
    for (size_t pnum = n_lo; pnum <= n_hi; ++pnum) {
        size_t run = 0;
        for (size_t i = 0; i + pnum < w.size(); ++i) {
            if (w[i] == w[i + pnum]) {
                ++run;
                // exponent (run + p)/p improves iff run/p improves
                if (run * best.period > best.run_len * pnum ||
                    (best.period == 0 && run > 0)) {
                    best.period = pnum;
                    best.run_len = run;
                    best.pos = i + 1 - run;
                }
            } else {
                run = 0;
            }
        }
    }
    if (best.period == 0) {  // no repetition at all in the window
        best.period = n_lo;
        best.run_len = 0;
        best.exponent = Rat(1);
        return best;
    }
    best.exponent = Rat(Int((unsigned long)(best.run_len + best.period)), Int((unsigned long)best.period));
    best.exponent.canonicalize();
    best.infinite_suspect = best.pos + best.run_len + best.period + 1 >= w.size() &&
                            best.run_len >= 2 * best.period;
    return best;
}

RunsReport max_exponent_long_bispecials(std::string_view w, size_t run_lo, size_t run_hi) {
    if (run_lo < 1 || run_lo > run_hi) throw std::invalid_argument("bad bispecial window");
    RunsReport best;
    for (size_t pnum = 1; pnum + run_lo < w.size(); ++pnum) {
        size_t run = 0;
        for (size_t i = 0; i + pnum < w.size(); ++i) {
            if (w[i] != w[i + pnum]) {
                run = 0;
                continue;
            }
            ++run;
            if (run < run_lo || run > run_hi) continue;
            if (run * best.period > best.run_len * pnum || best.period == 0) {
                best.period = pnum;
                best.run_len = run;
                best.pos = i + 1 - run;
            }
        }
    }
    if (best.period == 0) {
        best.period = 1;
        best.exponent = Rat(1);
        return best;
    }
    best.exponent = Rat(Int((unsigned long)(best.run_len + best.period)),
                        Int((unsigned long)best.period));
    best.exponent.canonicalize();
    return best;
}

OracleReport oracle_estimate(const ContinuedFraction& cf, const ConstantGap& y,
                             const ConstantGap& yp, size_t prefix_len, size_t n_lo, size_t n_hi) {
    if (n_hi * 3 > prefix_len) throw std::invalid_argument("window must satisfy n_hi <= prefix/3");
    std::string u = sturmian_prefix(cf, prefix_len);
    u.resize(prefix_len);
    std::string v = colour(u, y, yp);
    OracleReport rep;
    rep.runs = max_exponent_in_window(v, n_lo, n_hi);
    rep.coloured_head = v.substr(0, std::min<size_t>(64, v.size()));
    return rep;
}

}  // namespace critex

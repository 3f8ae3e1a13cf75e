#include "critex/matclass.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace critex {

PeriodPair::PeriodPair(long P_, long Pp_) : P(P_), Pp(Pp_) {
    if (P < 1 || Pp < 1) throw std::invalid_argument("periods must be positive");
    H = std::gcd(P, Pp);
    Y = P / H;
    Yp = Pp / H;
    L = std::lcm(P, Pp);
}

namespace {

long mod(long v, long m) {
    long r = v % m;
    return r < 0 ? r + m : r;
}

std::array<long, 2> canonical_row(std::array<long, 2> row, long m) {
    if (m == 1) return {0, 0};
    row = {mod(row[0], m), mod(row[1], m)};
    std::array<long, 2> best = row;
    for (long c = 2; c < m; ++c) {
        if (std::gcd(c, m) != 1) continue;
        std::array<long, 2> cand{mod(c * row[0], m), mod(c * row[1], m)};
        if (cand < best) best = cand;
    }
    return best;
}

ClassName make_class(std::array<long, 2> row1, std::array<long, 2> row2, const PeriodPair& pp) {
    ClassName c;
    c.y = pp.Y;
    c.yp = pp.Yp;
    c.r1 = canonical_row(row1, pp.Y);
    c.r2 = canonical_row(row2, pp.Yp);
    return c;
}

// Solves a*x = b (mod m); returns (solvable, x0, step) with solutions
// x = x0 + t*step.
struct CongruenceSolution {
    bool ok;
    long x0, step;
};

long inv_mod(long a, long m) {
    long t = 0, nt = 1, r = m, nr = mod(a, m);
    while (nr != 0) {
        long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    return mod(t, m);
}

CongruenceSolution solve_congruence(long a, long b, long m) {
    if (m == 1) return {true, 0, 1};
    a = mod(a, m);
    b = mod(b, m);
    long g = std::gcd(a, m);
    if (b % g != 0) return {false, 0, 0};
    long m2 = m / g;
    long x0 = mod((b / g) % m2 * inv_mod(a / g, m2), m2);
    return {true, x0, m2};
}

}  // namespace

std::string ClassName::str() const {
    auto row = [](const std::array<long, 2>& r, long m) {
        return "(" + std::to_string(r[0]) + "," + std::to_string(r[1]) + ") mod " + std::to_string(m);
    };
    return "(" + row(r1, y) + " ; " + row(r2, yp) + ")";
}

ClassName class_of(const Int& a11, const Int& a12, const Int& a21, const Int& a22,
                   const PeriodPair& pp) {
    Int det = a11 * a22 - a12 * a21;
    if (det != 1 && det != -1) throw non_unimodular{};
    auto red = [](const Int& v, long m) {
        Int r = v % m;
        if (sgn(r) < 0) r += m;
        return r.get_si();
    };
    return make_class({red(a11, pp.Y), red(a12, pp.Y)}, {red(a21, pp.Yp), red(a22, pp.Yp)}, pp);
}

ClassName class_of_residue_rows(std::array<long, 2> row1, std::array<long, 2> row2,
                                const PeriodPair& pp) {
    return make_class(row1, row2, pp);
}

ClassName initial_class(const PeriodPair& pp) {
    return make_class({1, 0}, {0, 1}, pp);
}

ClassName step(const ClassName& c, long a, const PeriodPair& pp) {
    if (a < 1) throw std::invalid_argument("step label must be >= 1");
    // A * (0 1; 1 a): each row (u, v) -> (v, u + a*v) mod its modulus
    std::array<long, 2> row1{c.r1[1], mod(c.r1[0] + mod(a, pp.Y) * c.r1[1], pp.Y)};
    std::array<long, 2> row2{c.r2[1], mod(c.r2[0] + mod(a, pp.Yp) * c.r2[1], pp.Yp)};
    return make_class(row1, row2, pp);
}

ClassName twist(const ClassName& c, long m, const PeriodPair& pp) {
    // A * (1 0; m 1): each row (u, v) -> (u + m*v, v)
    std::array<long, 2> row1{mod(c.r1[0] + mod(m, pp.Y) * c.r1[1], pp.Y), c.r1[1]};
    std::array<long, 2> row2{mod(c.r2[0] + mod(m, pp.Yp) * c.r2[1], pp.Yp), c.r2[1]};
    return make_class(row1, row2, pp);
}

bool SolutionLattice::contains(const Int& l, const Int& k) const {
    if (l % l_step != 0) return false;
    Int t = l / l_step;
    Int rem = k - t * k_at_lstep;
    return rem % k_step == 0;
}

SolutionLattice solution_lattice(const ClassName& c, long m, const PeriodPair& pp) {
    ClassName b = twist(c, m, pp);
    long H = pp.H;
    // (l,k) = H*(lambda,kappa) with  b.r1 rows: u1*lambda + v1*kappa = 0 (mod Y),
    //                                u2*lambda + v2*kappa = 0 (mod Y').
    auto kappa_progression = [&](long lambda) -> CongruenceSolution {
        auto s1 = solve_congruence(b.r1[1], -b.r1[0] * lambda, pp.Y);
        auto s2 = solve_congruence(b.r2[1], -b.r2[0] * lambda, pp.Yp);
        if (!s1.ok || !s2.ok) return {false, 0, 0};
        // CRT over coprime-by-construction moduli s1.step | Y, s2.step | Y'
        long M = s1.step * s2.step;
        long t = mod((s2.x0 - s1.x0) % s2.step * inv_mod(s1.step, s2.step), s2.step);
        long x = mod(s1.x0 + s1.step * t, M);
        return {true, x, M};
    };

    SolutionLattice lat;
    // kappa axis: lambda = 0 always admits kappa = 0
    auto s0 = kappa_progression(0);
    if (!s0.ok || s0.x0 != 0) throw std::logic_error("kappa axis congruence must admit 0");
    lat.k_step = H * s0.step;
    // lambda axis: minimal positive lambda with any solution
    for (long lambda = 1;; ++lambda) {
        auto s = kappa_progression(lambda);
        if (s.ok) {
            lat.l_step = H * lambda;
            lat.k_at_lstep = H * s.x0;
            break;
        }
        if (lambda > pp.Y * pp.Yp + 1) throw std::logic_error("lattice scan overran Y*Y'");
    }
    return lat;
}

std::vector<ClassName> all_classes(const PeriodPair& pp) {
    std::set<ClassName> seen;
    for (long a = 0; a < pp.Y; ++a)
        for (long b = 0; b < pp.Y; ++b) {
            if (std::gcd(std::gcd(a, b), pp.Y) != 1) continue;
            for (long c = 0; c < pp.Yp; ++c)
                for (long d = 0; d < pp.Yp; ++d) {
                    if (std::gcd(std::gcd(c, d), pp.Yp) != 1) continue;
                    seen.insert(make_class({a, b}, {c, d}, pp));
                }
        }
    return {seen.begin(), seen.end()};
}

std::vector<ClassName> reachable_classes(const PeriodPair& pp, long a_max) {
    std::set<ClassName> seen;
    std::deque<ClassName> queue{initial_class(pp)};
    seen.insert(queue.front());
    while (!queue.empty()) {
        ClassName cur = queue.front();
        queue.pop_front();
        for (long a = 1; a <= a_max; ++a) {
            ClassName next = step(cur, a, pp);
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace critex

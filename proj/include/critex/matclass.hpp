#pragma once

#include "critex/rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace critex {

/// Periods of the two constant gap sequences with the derived quantities
/// H = gcd, Y = P/H, Y' = P'/H (coprime), L = lcm. L = 1 is permitted so the
/// exact E* evaluator can handle the plain Sturmian case; the tails graph
/// rejects it separately.
struct PeriodPair {
    long P, Pp;
    long H, Y, Yp, L;

    PeriodPair(long P_, long Pp_);

    bool operator==(const PeriodPair& o) const { return P == o.P && Pp == o.Pp; }
};

/// Canonical name of an equivalence class of unimodular matrices: rows
/// reduced mod Y and mod Y', each row scaled to its lexicographically least
/// unit multiple. A modulus of 1 collapses a row to (0,0).
struct ClassName {
    long y = 1, yp = 1;
    std::array<long, 2> r1{0, 0};
    std::array<long, 2> r2{0, 0};

    auto tie() const { return std::tie(y, yp, r1, r2); }
    bool operator==(const ClassName& o) const { return tie() == o.tie(); }
    bool operator<(const ClassName& o) const { return tie() < o.tie(); }

    std::string str() const;  // "((1,0) mod 3 ; (0,1) mod 4)"
};

struct non_unimodular : std::invalid_argument {
    non_unimodular() : std::invalid_argument("matrix is not unimodular") {}
};

/// Class of an integer matrix (row-major a11,a12,a21,a22); |det| must be 1.
ClassName class_of(const Int& a11, const Int& a12, const Int& a21, const Int& a22,
                   const PeriodPair& pp);

/// Canonicalizes raw residue rows (row1 mod Y, row2 mod Y') without the
/// unimodularity check; the caller asserts the rows come from one.
ClassName class_of_residue_rows(std::array<long, 2> row1, std::array<long, 2> row2,
                                const PeriodPair& pp);

/// Class of the identity (the initial convergent matrix).
ClassName initial_class(const PeriodPair& pp);

/// Class of A * (0 1; 1 a) for any representative A; a >= 1.
ClassName step(const ClassName& c, long a, const PeriodPair& pp);

/// Class of A * (1 0; m 1).
ClassName twist(const ClassName& c, long m, const PeriodPair& pp);

/// Integer lattice {(l,k) : A (1 0; m 1) (l,k)^T = 0 mod (P,P')} in
/// triangular basis {(l_step, k_at_lstep), (0, k_step)}.
struct SolutionLattice {
    long l_step = 1;      // minimal positive l with a solution
    long k_at_lstep = 0;  // minimal nonnegative k paired with l_step
    long k_step = 1;      // minimal positive k with (0,k) in the lattice

    bool contains(const Int& l, const Int& k) const;
};

SolutionLattice solution_lattice(const ClassName& c, long m, const PeriodPair& pp);

/// Every class that lifts to an integer unimodular matrix:
/// gcd(row1, Y) = gcd(row2, Y') = 1, canonicalized. Sorted.
std::vector<ClassName> all_classes(const PeriodPair& pp);

/// Breadth-first closure of `step` from the initial class over labels
/// 1..a_max. Sorted.
std::vector<ClassName> reachable_classes(const PeriodPair& pp, long a_max);

}  // namespace critex

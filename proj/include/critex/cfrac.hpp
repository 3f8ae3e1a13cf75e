#pragma once

#include "critex/quadratic.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace critex {

/// Eventually periodic continued fraction [0; a_1, ..., a_s, (b_1, ..., b_p)].
/// All partial quotients are >= 1. The period may be empty only for finite
/// fractions used in tests; every operation that needs an infinite expansion
/// throws degenerate_period on an empty period.
struct ContinuedFraction {
    std::vector<uint32_t> pre;
    std::vector<uint32_t> period;

    /// Text form `0;a1,...,as,(b1,...,bp)`, e.g. "0;1,(2)" or "0;(1)".
    static ContinuedFraction parse(std::string_view s);
    std::string str() const;

    /// a_n for n >= 1, extending periodically. Throws on exhausted finite CF.
    uint32_t quotient(size_t n) const;

    bool periodic() const { return !period.empty(); }

    /// Exact value in (0, 1).
    Quad value() const;

    /// delta_N = [a_{N+1}; a_{N+2}, ...] > 1.
    Quad tail_value(size_t N) const;

    /// Limit of Q_{N-1}/Q_N along indices whose last consumed quotient is
    /// period[j]; equals the value of [0; (period reversed, starting at j)].
    Quad reversed_limit(size_t j) const;

    bool operator==(const ContinuedFraction& o) const = default;
};

struct degenerate_period : std::domain_error {
    degenerate_period() : std::domain_error("continued fraction has no period") {}
};

/// Convergent triple (p, q, Q = p + q) advanced by the standard recurrence
/// X_{N+1} = a_{N+1} X_N + X_{N-1}. Immutable; advanced() returns a new state.
struct ConvergentState {
    size_t n = 0;
    Int p_prev{1}, p{0};
    Int q_prev{0}, q{1};
    Int Q_prev{1}, Q{1};

    static ConvergentState initial() { return {}; }
    ConvergentState advanced(uint32_t a) const;
};

}  // namespace critex

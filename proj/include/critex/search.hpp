#pragma once

#include "critex/balanced.hpp"
#include "critex/tails_graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace critex {

struct PairLog {
    long P = 0, Pp = 0;
    std::string status;  // pruned-by-bound / no-scc / candidates:<n> / sturmian-base-case
    std::optional<Quad> best;
    std::optional<ContinuedFraction> theta;
    bool complete = true;
};

struct SearchResult {
    int d = 0;
    Quad best;
    long P = 0, Pp = 0;
    ContinuedFraction theta;
    std::vector<PairLog> log;  // final certification pass, sorted by pair
    size_t walk_cap = 0;
    bool complete = true;  // every surviving pair fully enumerated at the final beta
    int passes = 0;
};

/// Known critical-exponent thresholds for balanced sequences, minus 1;
/// the default starting beta of the search.
Quad default_beta_init(int d);

/// Minimal asymptotic critical exponent over d-ary balanced sequences:
/// enumerate period pairs, build and reduce each tails graph, evaluate the
/// candidate tails exactly, and lower beta until stable. Deterministic for
/// any jobs count.
SearchResult rtb_star(int d, std::optional<Quad> beta_init = std::nullopt, size_t walk_cap = 0,
                      int jobs = 1);

}  // namespace critex

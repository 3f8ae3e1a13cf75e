#pragma once

#include "critex/cfrac.hpp"
#include "critex/forcing.hpp"
#include "critex/interval_set.hpp"
#include "critex/matclass.hpp"

#include <optional>
#include <string>
#include <vector>

namespace critex {

struct GraphEdge {
    int src, dst;
    long label;
    bool alive = true;
};

/// Labeled digraph of admissible tails for (pp, beta): vertices are the
/// reachable matrix classes carrying their admissible sets, an edge
/// (v, a, step(v,a)) exists iff D(v) meets (a, a+1). Reductions only delete.
struct TailsGraph {
    PeriodPair pp;
    Quad beta;
    long a_max = 0;
    std::vector<ClassName> verts;
    std::vector<IntervalSet> dsets;
    std::vector<char> vert_alive;
    std::vector<GraphEdge> edges;
    std::vector<std::vector<int>> out_edges, in_edges;  // indices into edges
    int initial = -1;
    int total_classes = 0;  // abstract class count, for reporting

    int vertex_of(const ClassName& c) const;
    bool edge_alive(int v, long label) const;
};

struct L_not_greater_than_1 : std::invalid_argument {
    L_not_greater_than_1() : std::invalid_argument("tails graph requires lcm(P,P') > 1") {}
};

TailsGraph build_graph(const PeriodPair& pp, const Quad& beta);

/// Strongly connected components over alive vertices/edges; only components
/// with an internal edge count (size >= 2, or a single vertex with a loop).
/// Deterministic order, vertices sorted within each component.
std::vector<std::vector<int>> strongly_connected(const TailsGraph& g);

struct ReduceOptions {
    int max_outer_passes = 64;
    int max_range_passes = 64;
    unsigned dyadic_bits = 48;
    // The true sustainable-tail sets are Cantor-like; unbounded refinement
    // fragments them exponentially. Merging down to this many pieces keeps
    // every set a sound outer cover.
    size_t max_islands = 12;
};

struct ReduceStats {
    int outer_passes = 0;
    int edges_deleted = 0;
    int dset_shrinks = 0;
};

/// Iterates SCC trimming, forward reduction (achievable-tail windows) and
/// backward reduction (reversed-history ranges vs solution-lattice triplets)
/// to a fixpoint. Deletions are outer-approximation sound.
ReduceStats reduce_to_fixpoint(TailsGraph& g, const ReduceOptions& opt = {});

struct TailCandidate {
    std::vector<long> cycle;      // labels of the closed walk
    int anchor = -1;              // start vertex of the walk
    std::vector<long> preperiod;  // labels of a shortest path from the initial class
};

/// Closed walks of length <= walk_cap in every surviving component,
/// deduplicated up to rotation and primitive-root repetition, each with a
/// shortest preperiod. Sets complete=false if the walk budget was exhausted.
std::vector<TailCandidate> extract_candidates(const TailsGraph& g, size_t walk_cap,
                                              size_t walk_budget, bool& complete);

ContinuedFraction candidate_theta(const TailCandidate& c);

/// Checks that the eventual class/label cycle of theta survives in g:
/// every cycle vertex alive, its tail value inside the vertex's admissible
/// set, and the labeled edge alive. Used to audit reduction soundness.
bool replay_survives(const TailsGraph& g, const ContinuedFraction& theta);

std::string to_dot(const TailsGraph& g, const std::vector<TailCandidate>& bold = {});
std::string graph_json(const TailsGraph& g, const std::vector<std::vector<int>>& sccs,
                       const std::vector<TailCandidate>& candidates);

}  // namespace critex

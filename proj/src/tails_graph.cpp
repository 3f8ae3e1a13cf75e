#include "critex/tails_graph.hpp"

#include "json.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace critex {

int TailsGraph::vertex_of(const ClassName& c) const {
    auto it = std::lower_bound(verts.begin(), verts.end(), c);
    if (it == verts.end() || !(*it == c)) return -1;
    return (int)(it - verts.begin());
}

bool TailsGraph::edge_alive(int v, long label) const {
    for (int e : out_edges[v])
        if (edges[e].label == label && edges[e].alive) return true;
    return false;
}

TailsGraph build_graph(const PeriodPair& pp, const Quad& beta) {
    if (pp.L <= 1) throw L_not_greater_than_1{};
    TailsGraph g{pp, beta};
    long U = ambient_upper(pp, beta);
    g.a_max = U - 1;
    g.total_classes = (int)all_classes(pp).size();
    g.verts = reachable_classes(pp, std::max(g.a_max, 1L));
    g.initial = g.vertex_of(initial_class(pp));
    g.vert_alive.assign(g.verts.size(), 1);
    g.out_edges.assign(g.verts.size(), {});
    g.in_edges.assign(g.verts.size(), {});
    for (size_t v = 0; v < g.verts.size(); ++v)
        g.dsets.push_back(admissible_set(g.verts[v], beta, pp));
    for (size_t v = 0; v < g.verts.size(); ++v) {
        for (long a = 1; a <= g.a_max; ++a) {
            if (!g.dsets[v].intersects_open(Quad(a), Quad(a + 1))) continue;
            int w = g.vertex_of(step(g.verts[v], a, pp));
            int e = (int)g.edges.size();
            g.edges.push_back({(int)v, w, a, true});
            g.out_edges[v].push_back(e);
            g.in_edges[w].push_back(e);
        }
    }
    return g;
}

namespace {

struct TarjanState {
    const TailsGraph& g;
    std::vector<int> index, low, comp;
    std::vector<char> on_stack;
    std::vector<int> stack;
    int counter = 0, comp_count = 0;

    explicit TarjanState(const TailsGraph& g_)
        : g(g_), index(g_.verts.size(), -1), low(g_.verts.size(), 0),
          comp(g_.verts.size(), -1), on_stack(g_.verts.size(), 0) {}

    void dfs(int v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = 1;
        for (int e : g.out_edges[v]) {
            if (!g.edges[e].alive) continue;
            int w = g.edges[e].dst;
            if (!g.vert_alive[w]) continue;
            if (index[w] == -1) {
                dfs(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            while (true) {
                int w = stack.back();
                stack.pop_back();
                on_stack[w] = 0;
                comp[w] = comp_count;
                if (w == v) break;
            }
            ++comp_count;
        }
    }
};

}  // namespace

std::vector<std::vector<int>> strongly_connected(const TailsGraph& g) {
    TarjanState t(g);
    for (size_t v = 0; v < g.verts.size(); ++v)
        if (g.vert_alive[v] && t.index[v] == -1) t.dfs((int)v);
    std::vector<std::vector<int>> groups(t.comp_count);
    for (size_t v = 0; v < g.verts.size(); ++v)
        if (g.vert_alive[v]) groups[t.comp[v]].push_back((int)v);
    std::vector<std::vector<int>> out;
    for (auto& grp : groups) {
        bool nontrivial = grp.size() >= 2;
        if (!nontrivial && grp.size() == 1) {
            for (int e : g.out_edges[grp[0]])
                if (g.edges[e].alive && g.edges[e].dst == grp[0]) nontrivial = true;
        }
        if (nontrivial) {
            std::sort(grp.begin(), grp.end());
            out.push_back(grp);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct Range {
    Rat lo, hi;
    bool empty = false;
};

Rat rat_of(const Quad& q) {
    return q.as_rational();
}

// Outward dyadic rounding keeps the ranges on a finite grid, so the
// shrinking fixpoint iteration terminates.
Range rounded(const Rat& lo, const Rat& hi, unsigned bits) {
    return {dyadic_below(lo, bits), dyadic_above(hi, bits), false};
}

bool trim_to_sccs(TailsGraph& g) {
    auto sccs = strongly_connected(g);
    std::vector<int> comp_of(g.verts.size(), -1);
    for (size_t c = 0; c < sccs.size(); ++c)
        for (int v : sccs[c]) comp_of[v] = (int)c;
    bool changed = false;
    for (size_t v = 0; v < g.verts.size(); ++v) {
        if (g.vert_alive[v] && comp_of[v] == -1) {
            g.vert_alive[v] = 0;
            changed = true;
        }
    }
    for (auto& e : g.edges) {
        if (!e.alive) continue;
        if (comp_of[e.src] == -1 || comp_of[e.src] != comp_of[e.dst]) {
            e.alive = false;
            changed = true;
        }
    }
    return changed;
}

// Tail-set reduction. The admissible set of a vertex is restricted to the
// values extendable forward (delta = a + 1/delta' with delta' surviving at
// the successor) and backward (some predecessor value b + 1/delta survives
// there); a tail occurring infinitely often along an admissible path has
// both. Interval sets, not hulls: the windows must distinguish separate
// islands of D, and outward dyadic rounding keeps the endpoints on a finite
// grid so the shrinking iteration terminates.
bool tail_set_pass(TailsGraph& g, const ReduceOptions& opt, ReduceStats& stats) {
    bool changed_any = false;
    for (int pass = 0; pass < opt.max_range_passes; ++pass) {
        bool changed = false;
        for (size_t v = 0; v < g.verts.size(); ++v) {
            if (!g.vert_alive[v] || g.dsets[v].empty()) continue;
            const Quad& alo = g.dsets[v].ambient_lo();
            const Quad& ahi = g.dsets[v].ambient_hi();

            IntervalSet fwd(alo, ahi);
            for (int ei : g.out_edges[v]) {
                auto& e = g.edges[ei];
                if (!e.alive || !g.vert_alive[e.dst]) continue;
                for (auto& seg : g.dsets[e.dst].intervals()) {
                    // delta = label + 1/delta', delta' in (lo, hi)
                    Rat wlo = Rat(e.label) + Rat(1) / rat_of(seg.hi);
                    Rat whi = Rat(e.label) + Rat(1) / rat_of(seg.lo);
                    fwd.add(Quad(wlo), Quad(whi));
                }
            }
            fwd.round_outward(opt.dyadic_bits);
            fwd.coarsen(opt.max_islands);

            IntervalSet bwd(alo, ahi);
            for (int ei : g.in_edges[v]) {
                auto& e = g.edges[ei];
                if (!e.alive || !g.vert_alive[e.src]) continue;
                for (auto& seg : g.dsets[e.src].intervals()) {
                    // predecessor tail x = label + 1/delta must lie in (lo, hi),
                    // so delta ranges over 1/((lo,hi) - label) clipped to x's
                    // own unit window.
                    Rat clo = std::max(rat_of(seg.lo), Rat(e.label));
                    Rat chi = std::min(rat_of(seg.hi), Rat(e.label + 1));
                    if (!(clo < chi)) continue;
                    Rat wlo = chi == Rat(e.label + 1) ? Rat(1) : Rat(1) / (chi - Rat(e.label));
                    Quad whi = clo == Rat(e.label) ? ahi : Quad(Rat(1) / (clo - Rat(e.label)));
                    bwd.add(Quad(wlo), whi);
                }
            }
            bwd.round_outward(opt.dyadic_bits);
            bwd.coarsen(opt.max_islands);

            IntervalSet next = g.dsets[v].intersect(fwd).intersect(bwd);
            next.coarsen(opt.max_islands);
            if (!(next == g.dsets[v])) {
                g.dsets[v] = std::move(next);
                ++stats.dset_shrinks;
                changed = true;
            }
        }
        // refilter edges against the shrunk sets
        for (auto& e : g.edges) {
            if (!e.alive) continue;
            bool ok = g.vert_alive[e.src] && g.vert_alive[e.dst];
            if (ok) {
                bool window_hit = false;
                for (auto& seg : g.dsets[e.dst].intervals()) {
                    Rat wlo = Rat(e.label) + Rat(1) / rat_of(seg.hi);
                    Rat whi = Rat(e.label) + Rat(1) / rat_of(seg.lo);
                    if (g.dsets[e.src].intersects_open(Quad(wlo), Quad(whi))) window_hit = true;
                }
                ok = window_hit;
            }
            if (!ok) {
                e.alive = false;
                ++stats.edges_deleted;
                changed = true;
            }
        }
        if (!changed) break;
        changed_any = true;
    }
    return changed_any;
}

// Backward reduction: x-range(w) over-approximates the reversed-history
// values lim Q_{N-1}/Q_N along long alive paths into w. A lattice triplet
// whose f-minimum over the range exceeds beta forces its P2 interval out of
// D(w).
bool backward_pass(TailsGraph& g, const ReduceOptions& opt, ReduceStats& stats) {
    std::vector<Range> xr(g.verts.size(), Range{Rat(0), Rat(1), false});
    for (int pass = 0; pass < opt.max_range_passes; ++pass) {
        bool changed = false;
        for (size_t v = 0; v < g.verts.size(); ++v) {
            if (!g.vert_alive[v]) continue;
            std::optional<std::pair<Rat, Rat>> acc;
            bool has_in = false;
            for (int ei : g.in_edges[v]) {
                auto& e = g.edges[ei];
                if (!e.alive || !g.vert_alive[e.src]) continue;
                has_in = true;
                const Range& ru = xr[e.src];
                if (ru.empty) continue;
                Rat lo = Rat(1) / (Rat(e.label) + ru.hi);
                Rat hi = Rat(1) / (Rat(e.label) + ru.lo);
                if (!acc) acc = {lo, hi};
                else {
                    acc->first = std::min(acc->first, lo);
                    acc->second = std::max(acc->second, hi);
                }
            }
            if (!has_in) continue;  // outside any cycle; trimmed elsewhere
            Range next;
            if (!acc) next.empty = true;
            else next = rounded(acc->first, acc->second, opt.dyadic_bits);
            if (!xr[v].empty && !next.empty) {
                next.lo = std::max(next.lo, xr[v].lo);
                next.hi = std::min(next.hi, xr[v].hi);
                if (next.lo > next.hi) next.empty = true;
            }
            bool differs = next.empty != xr[v].empty ||
                           (!next.empty && (next.lo != xr[v].lo || next.hi != xr[v].hi));
            if (differs) {
                xr[v] = next;
                changed = true;
            }
        }
        if (!changed) break;
    }

    bool changed_any = false;
    long U = ambient_upper(g.pp, g.beta);
    for (size_t v = 0; v < g.verts.size(); ++v) {
        if (!g.vert_alive[v] || g.dsets[v].empty() || xr[v].empty) continue;
        const Rat& xlo = xr[v].lo;
        const Rat& xhi = xr[v].hi;
        bool shrunk = false;
        for_each_lattice_triplet(g.verts[v], g.pp, g.beta, U - 2, [&](const Triplet& t) {
            // min of f(x) = (1+m+x)/(k+lm+lx) over [xlo, xhi]: monotone with
            // the sign of k-l, constant 1/k when k = l.
            bool forces;
            if (t.k == t.l) {
                forces = Quad(Rat(1, t.k)) > g.beta;
            } else {
                const Rat& at = t.k > t.l ? xlo : xhi;
                Rat den = Rat(t.k + t.l * t.m) + Rat(t.l) * at;
                if (sgn(den) <= 0) return;  // f unbounded there; no finite minimum claim
                Rat f = (Rat(1 + t.m) + at) / den;
                forces = Quad(f) > g.beta;
            }
            if (!forces) return;
            P2Interval iv = p2_interval(t);
            if (iv.empty()) return;
            Quad hi = iv.hi ? Quad(*iv.hi) : Quad(U);
            IntervalSet before = g.dsets[v];
            g.dsets[v].subtract_closure(Quad(iv.lo), hi);
            if (!(g.dsets[v] == before)) shrunk = true;
        });
        if (shrunk) {
            ++stats.dset_shrinks;
            changed_any = true;
            for (int ei : g.out_edges[v]) {
                auto& e = g.edges[ei];
                if (!e.alive) continue;
                if (!g.dsets[v].intersects_open(Quad(e.label), Quad(e.label + 1))) {
                    e.alive = false;
                    ++stats.edges_deleted;
                }
            }
        }
    }
    return changed_any;
}

}  // namespace

ReduceStats reduce_to_fixpoint(TailsGraph& g, const ReduceOptions& opt) {
    ReduceStats stats;
    for (int pass = 0; pass < opt.max_outer_passes; ++pass) {
        ++stats.outer_passes;
        bool changed = trim_to_sccs(g);
        changed |= tail_set_pass(g, opt, stats);
        changed |= backward_pass(g, opt, stats);
        if (!changed) break;
    }
    return stats;
}

namespace {

std::vector<std::pair<int, long>> canonical_rotation(std::vector<std::pair<int, long>> w) {
    std::vector<std::pair<int, long>> best = w;
    for (size_t r = 1; r < w.size(); ++r) {
        std::rotate(w.begin(), w.begin() + 1, w.end());
        if (w < best) best = w;
    }
    return best;
}

bool is_primitive(const std::vector<std::pair<int, long>>& w) {
    for (size_t d = 1; d < w.size(); ++d) {
        if (w.size() % d != 0) continue;
        bool rep = true;
        for (size_t i = d; i < w.size() && rep; ++i)
            if (w[i] != w[i % d]) rep = false;
        if (rep) return false;
    }
    return true;
}

std::vector<long> bfs_preperiod(const TailsGraph& g, const ClassName& target) {
    ClassName start = initial_class(g.pp);
    if (start == target) return {};
    std::map<ClassName, std::pair<ClassName, long>> parent;  // class -> (prev, label)
    std::deque<ClassName> queue{start};
    parent.emplace(start, std::make_pair(start, 0L));
    long a_hi = std::max(g.a_max, 1L);
    while (!queue.empty()) {
        ClassName cur = queue.front();
        queue.pop_front();
        for (long a = 1; a <= a_hi; ++a) {
            ClassName next = step(cur, a, g.pp);
            if (parent.count(next)) continue;
            parent.emplace(next, std::make_pair(cur, a));
            if (next == target) {
                std::vector<long> path;
                ClassName at = next;
                while (!(at == start)) {
                    auto& [prev, label] = parent.at(at);
                    path.push_back(label);
                    at = prev;
                }
                std::reverse(path.begin(), path.end());
                return path;
            }
            queue.push_back(next);
        }
    }
    throw std::logic_error("anchor not reachable from the initial class");
}

}  // namespace

std::vector<TailCandidate> extract_candidates(const TailsGraph& g, size_t walk_cap,
                                              size_t walk_budget, bool& complete) {
    complete = true;
    auto sccs = strongly_connected(g);
    std::set<std::vector<std::pair<int, long>>> seen;
    std::vector<TailCandidate> out;
    size_t budget = walk_budget;

    for (auto& comp : sccs) {
        if (comp.size() > walk_cap) complete = false;  // simple cycles may exceed the cap
        std::set<int> in_comp(comp.begin(), comp.end());
        std::vector<std::pair<int, long>> walk;  // (vertex, label taken from it)
        std::function<void(int, int)> dfs = [&](int anchor, int at) {
            if (budget == 0) {
                complete = false;
                return;
            }
            --budget;
            if (!walk.empty() && at == anchor) {
                auto canon = canonical_rotation(walk);
                if (is_primitive(canon) && seen.insert(canon).second) {
                    TailCandidate cand;
                    cand.anchor = canon.front().first;
                    for (auto& [v, lab] : canon) cand.cycle.push_back(lab);
                    cand.preperiod = bfs_preperiod(g, g.verts[cand.anchor]);
                    out.push_back(std::move(cand));
                }
                // walks may extend past the anchor (non-simple closed walks)
            }
            if (walk.size() >= walk_cap) return;
            for (int ei : g.out_edges[at]) {
                auto& e = g.edges[ei];
                if (!e.alive || !in_comp.count(e.dst)) continue;
                walk.push_back({at, e.label});
                dfs(anchor, e.dst);
                walk.pop_back();
            }
        };
        for (int v : comp) {
            walk.clear();
            dfs(v, v);
        }
    }
    std::sort(out.begin(), out.end(), [](const TailCandidate& a, const TailCandidate& b) {
        return std::make_tuple(a.cycle.size(), std::cref(a.cycle), a.anchor, std::cref(a.preperiod)) <
               std::make_tuple(b.cycle.size(), std::cref(b.cycle), b.anchor, std::cref(b.preperiod));
    });
    return out;
}

ContinuedFraction candidate_theta(const TailCandidate& c) {
    ContinuedFraction cf;
    for (long a : c.preperiod) cf.pre.push_back((uint32_t)a);
    for (long a : c.cycle) cf.period.push_back((uint32_t)a);
    return cf;
}

bool replay_survives(const TailsGraph& g, const ContinuedFraction& theta) {
    if (!theta.periodic()) throw degenerate_period{};
    const size_t s = theta.pre.size(), p = theta.period.size();
    std::map<std::pair<ClassName, size_t>, size_t> seen;
    std::vector<std::pair<ClassName, size_t>> order;
    ClassName cls = initial_class(g.pp);
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
        cls = step(cls, theta.quotient(N + 1), g.pp);
        ++N;
    }
    for (size_t idx = cycle_from - s; idx < order.size(); ++idx) {
        const auto& [c, i] = order[idx];
        int v = g.vertex_of(c);
        if (v < 0 || !g.vert_alive[v]) return false;
        Quad delta = theta.tail_value(s + i);
        if (!g.dsets[v].contains(delta)) return false;
        if (!g.edge_alive(v, theta.period[i])) return false;
    }
    return true;
}

std::string to_dot(const TailsGraph& g, const std::vector<TailCandidate>& bold) {
    std::set<std::pair<int, long>> bold_edges;
    for (auto& cand : bold) {
        int at = cand.anchor;
        for (long lab : cand.cycle) {
            bold_edges.insert({at, lab});
            for (int ei : g.out_edges[at]) {
                if (g.edges[ei].alive && g.edges[ei].label == lab) {
                    at = g.edges[ei].dst;
                    break;
                }
            }
        }
    }
    std::string dot = "digraph tails {\n  rankdir=LR;\n";
    for (size_t v = 0; v < g.verts.size(); ++v) {
        if (!g.vert_alive[v]) continue;
        dot += "  v" + std::to_string(v) + " [label=\"" + g.verts[v].str() + "\\nD=" +
               g.dsets[v].str() + "\"];\n";
    }
    for (auto& e : g.edges) {
        if (!e.alive) continue;
        dot += "  v" + std::to_string(e.src) + " -> v" + std::to_string(e.dst) + " [label=\"" +
               std::to_string(e.label) + "\"";
        if (bold_edges.count({e.src, e.label})) dot += ", style=bold, penwidth=2";
        dot += "];\n";
    }
    dot += "}\n";
    return dot;
}

std::string graph_json(const TailsGraph& g, const std::vector<std::vector<int>>& sccs,
                       const std::vector<TailCandidate>& candidates) {
    nlohmann::json j;
    j["P"] = g.pp.P;
    j["Pp"] = g.pp.Pp;
    j["beta"] = g.beta.str();
    j["a_max"] = g.a_max;
    j["classes_total"] = g.total_classes;
    j["classes_reachable"] = g.verts.size();
    auto verts = nlohmann::json::array();
    for (size_t v = 0; v < g.verts.size(); ++v) {
        if (!g.vert_alive[v]) continue;
        verts.push_back({{"id", v}, {"name", g.verts[v].str()}, {"dset", g.dsets[v].str()}});
    }
    j["vertices"] = verts;
    auto edges = nlohmann::json::array();
    for (auto& e : g.edges)
        if (e.alive) edges.push_back({{"src", e.src}, {"label", e.label}, {"dst", e.dst}});
    j["edges"] = edges;
    j["sccs"] = sccs;
    auto cands = nlohmann::json::array();
    for (auto& c : candidates)
        cands.push_back({{"cycle", c.cycle}, {"anchor", c.anchor}, {"preperiod", c.preperiod},
                         {"theta", candidate_theta(c).str()}});
    j["candidates"] = cands;
    return j.dump(2);
}

}  // namespace critex

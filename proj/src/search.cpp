#include "critex/search.hpp"

#include "critex/cgap.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace critex {

Quad default_beta_init(int d) {
    switch (d) {
        case 2: return Quad(1) + (Quad(1) + Quad::sqrt_of(5)) / Quad(2);
        case 3: return Quad(1) + Quad(1) / Quad::sqrt_of(2);
        case 4: return (Quad::sqrt_of(5) + Quad(1)) / Quad(4);
        default:
            if (d >= 5 && d <= 10) return Quad(Rat(1, d - 3));
            throw std::invalid_argument("search supported for 2 <= d <= 10");
    }
}

namespace {

struct PairWork {
    PairCandidate pc;
    PairLog log;
};

// Evaluates one period pair at the current beta; fills log.best with the
// least exact E* among the extracted candidate tails. Candidates come
// shortest-cycle first and the scan stops at the first strict improvement
// over `target` (the search lowers beta and revisits, so the final
// certification pass always scans every candidate).
void evaluate_pair(PairWork& w, const Quad& beta, const std::optional<Quad>& target,
                   size_t walk_cap, size_t walk_budget) {
    auto& log = w.log;
    log = PairLog{};
    log.P = w.pc.P;
    log.Pp = w.pc.Pp;
    if (w.pc.P == 1 && w.pc.Pp == 1) {
        // Sturmian base case: the least asymptotic critical exponent over
        // binary balanced sequences is attained at slope [0;(1)].
        ContinuedFraction fib = ContinuedFraction::parse("0;(1)");
        log.status = "sturmian-base-case";
        log.best = estar_exact(fib, PeriodPair(1, 1)).value;
        log.theta = fib;
        return;
    }
    if (Quad(Rat(1, w.pc.P * w.pc.Pp)) > beta) {
        log.status = "pruned-by-bound";
        return;
    }
    PeriodPair pp(w.pc.P, w.pc.Pp);
    TailsGraph g = build_graph(pp, beta);
    reduce_to_fixpoint(g);
    auto sccs = strongly_connected(g);
    if (sccs.empty()) {
        log.status = "no-scc";
        return;
    }
    size_t cap = walk_cap;
    if (cap == 0) {
        size_t edges_alive = 0;
        for (auto& e : g.edges) edges_alive += e.alive;
        // hard ceiling: walk enumeration is exponential in the cap, and the
        // surviving components at the certification beta are small; a miss
        // is reported through the complete flag
        cap = std::min<size_t>(std::max<size_t>(2 * edges_alive, 12), 32);
    }
    bool complete = true;
    auto cands = extract_candidates(g, cap, walk_budget, complete);
    log.complete = complete;
    log.status = "candidates:" + std::to_string(cands.size()) + (complete ? "" : " (walk budget hit)");
    const size_t eval_budget = 4000;
    size_t evaluated = 0;
    for (auto& cand : cands) {
        if (evaluated++ >= eval_budget) {
            log.complete = false;
            log.status += " (evaluation truncated)";
            break;
        }
        ContinuedFraction theta = candidate_theta(cand);
        Quad value = estar_exact(theta, pp).value;
        if (!log.best || value < *log.best) {
            log.best = value;
            log.theta = theta;
        }
        if (target && log.best && *log.best < *target) break;
    }
}

}  // namespace

SearchResult rtb_star(int d, std::optional<Quad> beta_init, size_t walk_cap, int jobs) {
    if (d < 2 || d > 10) throw std::invalid_argument("search supported for 2 <= d <= 10");
    Quad beta = beta_init ? *beta_init : default_beta_init(d);
    const size_t walk_budget = 2'000'000;

    std::vector<PairWork> work;
    for (auto& pc : enumerate_pairs(d, beta)) work.push_back({pc, {}});
    std::sort(work.begin(), work.end(), [](const PairWork& a, const PairWork& b) {
        return std::tie(a.pc.P, a.pc.Pp) < std::tie(b.pc.P, b.pc.Pp);
    });
    if (work.empty()) throw std::runtime_error("no period pairs to search");

    SearchResult result;
    result.d = d;
    result.walk_cap = walk_cap;

    std::optional<Quad> best;
    for (int pass = 1;; ++pass) {
        result.passes = pass;
        // Evaluate every pair at the current beta (deterministic merge).
        // first pass: anything below the threshold 1+beta lowers beta
        std::optional<Quad> target = best ? *best : Quad(1) + beta;
        auto run_range = [&](size_t lo, size_t hi) {
            for (size_t i = lo; i < hi; ++i)
                evaluate_pair(work[i], beta, target, walk_cap, walk_budget);
        };
        int n_jobs = std::max(1, jobs);
        if (n_jobs == 1 || work.size() < 2) {
            run_range(0, work.size());
        } else {
            std::vector<std::thread> pool;
            std::mutex next_mutex;
            size_t next = 0;
            for (int t = 0; t < n_jobs; ++t)
                pool.emplace_back([&] {
                    while (true) {
                        size_t i;
                        {
                            std::lock_guard<std::mutex> lock(next_mutex);
                            if (next >= work.size()) return;
                            i = next++;
                        }
                        evaluate_pair(work[i], beta, target, walk_cap, walk_budget);
                    }
                });
            for (auto& th : pool) th.join();
        }

        std::optional<Quad> round_best;
        const PairWork* round_winner = nullptr;
        for (auto& w : work) {
            if (!w.log.best) continue;
            if (!round_best || *w.log.best < *round_best) {
                round_best = w.log.best;
                round_winner = &w;
            }
        }
        if (!round_best) throw std::runtime_error("no candidate tail found at the starting beta");

        if (!best || *round_best < *best) {
            best = round_best;
            result.P = round_winner->pc.P;
            result.Pp = round_winner->pc.Pp;
            result.theta = *round_winner->log.theta;
            beta = *best - Quad(1);  // ties survive at this beta; reequilibrate all pairs
            continue;
        }
        break;  // stable: the last pass certified no strict improvement
    }

    result.best = *best;
    result.complete = true;
    for (auto& w : work) {
        result.log.push_back(w.log);
        if (!w.log.complete) result.complete = false;
    }
    return result;
}

}  // namespace critex

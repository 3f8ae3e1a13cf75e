// Acceptance suite: one line per criterion, exit nonzero if any fails.

#include "critex/balanced.hpp"
#include "critex/cgap.hpp"
#include "critex/forcing.hpp"
#include "critex/search.hpp"
#include "critex/sturmian.hpp"
#include "critex/tails_graph.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <set>

using namespace critex;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << name;
    if (!detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << std::endl;
    if (!ok) ++failures;
}

bool decimal_close(const Quad& v, double expect, double tol) {
    return std::abs(v.to_double() - expect) <= tol;
}

struct TableRow {
    int d;
    const char* theta;
    long P, Pp;
    Quad value;
    double decimal;
};

std::vector<TableRow> table1() {
    Quad s5 = Quad::sqrt_of(5);
    return {
        {2, "0;(1)", 1, 1, Quad(2) + (Quad(1) + s5) / Quad(2), 3.618034},
        {3, "0;1,(2)", 1, 2, Quad(2) + Quad(1) / Quad::sqrt_of(2), 2.707107},
        {4, "0;(1)", 2, 2, Quad(1) + (s5 + Quad(1)) / Quad(4), 1.809017},
        {5, "0;1,(2)", 2, 4, Quad(Rat(3, 2)), 1.5},
        {6, "0;4,(1,2,1,1,1)", 1, 16, (Quad(75) + Quad(3) * Quad::sqrt_of(65)) / Quad(80),
         1.239835},
        {7, "0;5,1,(1,1,1,5,2)", 1, 32, (Quad(49) + Quad::sqrt_of(577)) / Quad(64), 1.140950},
        {8, "0;(1)", 8, 8, Quad(1) + (Quad(3) - s5) / Quad(16), 1.047746},
        {9, "0;1,(4)", 8, 16, (Quad(21) - Quad::sqrt_of(20)) / Quad(16), 1.032992},
        {10, "0;6,(1,1,1,1,2,1,2,1,1,1)", 4, 64,
         (Quad(364) - Quad(21) * Quad::sqrt_of(7)) / Quad(304), 1.0146027},
    };
}

void criterion1_table_2_to_5() {
    auto rows = table1();
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    for (int d = 2; d <= 5; ++d) {
        const TableRow& row = rows[d - 2];
        SearchResult r = rtb_star(d);
        bool exact = r.best == row.value;
        bool dec = decimal_close(r.best, row.decimal, 1e-6);
        bool pairs_ok = r.P == row.P && r.Pp == row.Pp;
        if (!(exact && dec && pairs_ok)) {
            ok = false;
            detail += "d=" + std::to_string(d) + " got " + r.best.str() + " (" +
                      std::to_string(r.P) + "," + std::to_string(r.Pp) + ") ";
        }
    }
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > 10.0) {
        ok = false;
        detail += "runtime " + std::to_string(secs) + "s exceeds 10s";
    } else {
        detail += "runtime " + std::to_string(secs) + "s";
    }
    report("1. table reproduction d=2..5 (exact + 1e-6 decimals, < 10 s)", ok, detail);
}

void criterion2_table_6_to_10() {
    auto rows = table1();
    bool ok = true;
    std::string detail;
    auto t0 = std::chrono::steady_clock::now();
    for (int d = 6; d <= 8; ++d) {
        const TableRow& row = rows[d - 2];
        SearchResult r = rtb_star(d);
        if (!(r.best == row.value && decimal_close(r.best, row.decimal, 1e-6) && r.P == row.P &&
              r.Pp == row.Pp)) {
            ok = false;
            detail += "d=" + std::to_string(d) + " got " + r.best.str() + " ";
        }
    }
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    detail += "search d=6..8 " + std::to_string(secs) + "s";
    // d=9 and d=10 are extended runs: verify the table values exactly through
    // the direct evaluator with the published slopes.
    for (int d : {9, 10}) {
        const TableRow& row = rows[d - 2];
        EstarResult r = estar_exact(ContinuedFraction::parse(row.theta), PeriodPair(row.P, row.Pp));
        if (!(r.value == row.value && decimal_close(r.value, row.decimal, 1e-6))) {
            ok = false;
            detail += " d=" + std::to_string(d) + " direct evaluation mismatch";
        }
    }
    report("2. table reproduction d=6..8 search; d=9,10 direct evaluation", ok, detail);
}

void criterion3_worked_dsets() {
    bool ok = true;
    std::string detail;
    {
        PeriodPair pp(2, 4);
        Quad beta(Rat(1, 2));
        std::map<std::string, std::string> expect{
            {"((0,0) mod 1 ; (1,0) mod 2)", "∅"},
            {"((0,0) mod 1 ; (0,1) mod 2)", "(1,4)"},
            {"((0,0) mod 1 ; (1,1) mod 2)", "(1,4)"},
        };
        for (auto& [name, dset] : expect) {
            bool found = false;
            for (auto& c : all_classes(pp))
                if (c.str() == name && admissible_set(c, beta, pp).str() == dset) found = true;
            if (!found) {
                ok = false;
                detail += "(2,4) " + name + " ";
            }
        }
    }
    {
        PeriodPair pp(3, 4);
        Quad beta(Rat(1, 3));
        std::map<std::string, std::string> expect{
            {"((0,1) mod 3 ; (0,1) mod 4)", "∅"},       {"((1,0) mod 3 ; (1,0) mod 4)", "∅"},
            {"((1,0) mod 3 ; (1,2) mod 4)", "∅"},       {"((1,1) mod 3 ; (2,1) mod 4)", "∅"},
            {"((1,2) mod 3 ; (1,3) mod 4)", "∅"},       {"((0,1) mod 3 ; (1,1) mod 4)", "∅"},
            {"((0,1) mod 3 ; (1,0) mod 4)", "(1,2)"},   {"((1,1) mod 3 ; (1,0) mod 4)", "(1,2)"},
            {"((1,2) mod 3 ; (1,0) mod 4)", "(1,2)"},   {"((0,1) mod 3 ; (1,3) mod 4)", "(1,2)"},
            {"((1,0) mod 3 ; (1,3) mod 4)", "(1,4)"},   {"((1,1) mod 3 ; (1,3) mod 4)", "(1,5/2)"},
            {"((1,0) mod 3 ; (0,1) mod 4)", "(1,3)∪(7/2,4)"},
            {"((1,0) mod 3 ; (2,1) mod 4)", "(3/2,4)"},
            {"((1,0) mod 3 ; (1,1) mod 4)", "(1,2)∪(5/2,4)"},
            {"((1,2) mod 3 ; (0,1) mod 4)", "(1,2)"},
            {"((1,1) mod 3 ; (0,1) mod 4)", "(1,2)∪(4,9/2)"},
            {"((0,1) mod 3 ; (1,2) mod 4)", "∅"},       {"((1,1) mod 3 ; (1,2) mod 4)", "(2,3)"},
            {"((1,2) mod 3 ; (1,2) mod 4)", "(1,2)"},   {"((1,2) mod 3 ; (1,1) mod 4)", "(3,4)"},
            {"((0,1) mod 3 ; (2,1) mod 4)", "(1,3)"},   {"((1,2) mod 3 ; (2,1) mod 4)", "(1,3)"},
            {"((1,1) mod 3 ; (1,1) mod 4)", "(1,4)"},
        };
        auto classes = all_classes(pp);
        if (classes.size() != 24) {
            ok = false;
            detail += "(3,4) class count " + std::to_string(classes.size()) + " ";
        }
        int matched = 0;
        for (auto& c : classes) {
            auto it = expect.find(c.str());
            if (it == expect.end()) {
                ok = false;
                detail += "unexpected class " + c.str() + " ";
            } else if (admissible_set(c, beta, pp).str() != it->second) {
                ok = false;
                detail += "D mismatch at " + c.str() + " ";
            } else {
                ++matched;
            }
        }
        detail += std::to_string(matched) + "/24 rows match";
    }
    report("3. worked admissible sets: (2,4) at 1/2 and all 24 rows of (3,4) at 1/3", ok, detail);
}

void criterion4_graph_shapes() {
    bool ok = true;
    std::string detail;
    auto nm1 = [](long a, long b, long yp) {
        return "((0,0) mod 1 ; (" + std::to_string(a) + "," + std::to_string(b) + ") mod " +
               std::to_string(yp) + ")";
    };
    {
        TailsGraph g = build_graph(PeriodPair(2, 4), Quad(Rat(1, 2)));
        std::multiset<std::string> edges;
        for (auto& e : g.edges)
            if (e.alive)
                edges.insert(g.verts[e.src].str() + "|" + std::to_string(e.label) + "|" +
                             g.verts[e.dst].str());
        std::multiset<std::string> expect{
            nm1(1, 1, 2) + "|1|" + nm1(1, 0, 2), nm1(1, 1, 2) + "|3|" + nm1(1, 0, 2),
            nm1(0, 1, 2) + "|2|" + nm1(1, 0, 2), nm1(0, 1, 2) + "|1|" + nm1(1, 1, 2),
            nm1(0, 1, 2) + "|3|" + nm1(1, 1, 2), nm1(1, 1, 2) + "|2|" + nm1(1, 1, 2),
        };
        auto sccs = strongly_connected(g);
        bool shape = edges == expect && sccs.size() == 1 && sccs[0].size() == 1;
        if (!shape) {
            ok = false;
            detail += "(2,4) shape ";
        }
    }
    {
        Quad beta = (Quad::sqrt_of(5) + Quad(1)) / Quad(4);
        TailsGraph g = build_graph(PeriodPair(1, 4), beta);
        size_t alive = 0;
        for (auto& e : g.edges) alive += e.alive;
        if (!(g.verts.size() == 6 && alive == 4 && strongly_connected(g).empty())) {
            ok = false;
            detail += "(1,4) shape ";
        }
    }
    {
        Quad beta = (Quad(3) * Quad::sqrt_of(65) - Quad(5)) / Quad(80);
        TailsGraph g = build_graph(PeriodPair(1, 16), beta);
        auto sccs = strongly_connected(g);
        bool pre = sccs.size() == 1 && sccs[0].size() == 8;
        reduce_to_fixpoint(g);
        bool complete = true;
        auto cands = extract_candidates(g, 12, 1000000, complete);
        std::multiset<long> labels;
        if (cands.size() == 1)
            labels = std::multiset<long>(cands[0].cycle.begin(), cands[0].cycle.end());
        if (!(pre && cands.size() == 1 && labels == std::multiset<long>{1, 1, 1, 1, 2})) {
            ok = false;
            detail += "(1,16) reduction ";
        }
    }
    {
        Quad beta = (Quad(60) - Quad(21) * Quad::sqrt_of(7)) / Quad(304);
        TailsGraph g = build_graph(PeriodPair(4, 64), beta);
        reduce_to_fixpoint(g);
        auto sccs = strongly_connected(g);
        size_t alive = 0;
        for (auto& e : g.edges) alive += e.alive;
        if (!(sccs.size() == 1 && sccs[0].size() == 8 && alive == 9)) {
            ok = false;
            detail += "(4,64) two-cycle component (got " +
                      std::to_string(sccs.empty() ? 0 : sccs[0].size()) + " verts, " +
                      std::to_string(alive) + " edges) ";
        }
    }
    report("4. graph shapes: (2,4), (1,4), reduced (1,16), reduced (4,64)", ok, detail);
}

void criterion5_oracle_crosscheck() {
    bool ok = true;
    std::string detail;
    auto pick = [&](long period, int offset) {
        for (int d = 1; d <= 9; ++d)
            if (achievable_periods(d).count(period)) return construct_constant_gap(d, period, offset);
        throw std::logic_error("period not achievable");
    };
    for (auto& row : table1()) {
        ConstantGap y = pick(row.P, 0);
        ConstantGap yp = pick(row.Pp, (int)y.alphabet_size());
        // window [100, prefix/4]: repetition scales grow geometrically with
        // the continued-fraction period, so a decade-wide window can fall
        // between two scales (it does for d=6)
        auto rep = oracle_estimate(ContinuedFraction::parse(row.theta), y, yp, 100000, 100, 25000);
        double est = rep.runs.exponent.get_d();
        double exact = row.value.to_double();
        if (std::abs(est - exact) > 0.02) {
            ok = false;
            detail += "d=" + std::to_string(row.d) + " est " + std::to_string(est) + " vs " +
                      std::to_string(exact) + " ";
        }
    }
    report("5. oracle within 0.02 of each exact optimum (prefix 1e5, window [100,25000])", ok,
           detail);
}

void criterion6_replay() {
    bool ok = true;
    std::string detail;
    for (auto& row : table1()) {
        if (row.P == 1 && row.Pp == 1) continue;  // no graph for L = 1
        Quad beta = row.value - Quad(1);
        TailsGraph g = build_graph(PeriodPair(row.P, row.Pp), beta);
        reduce_to_fixpoint(g);
        if (!replay_survives(g, ContinuedFraction::parse(row.theta))) {
            ok = false;
            detail += "d=" + std::to_string(row.d) + " ";
        }
    }
    report("6. every optimum survives the reductions of its own graph", ok, detail);
}

void criterion7_property_suites() {
    int rc = std::system("./tests/property_tests >/dev/null 2>&1");
    bool ran_here = rc != -1 && WIFEXITED(rc) && WEXITSTATUS(rc) == 0;
    if (!ran_here) {
        // fall back to the sibling path when run from the tests directory
        rc = std::system("./property_tests >/dev/null 2>&1");
        ran_here = rc != -1 && WIFEXITED(rc) && WEXITSTATUS(rc) == 0;
    }
    report("7. standalone property suites (matrix equivalence, D-grid, catalogs, balance, "
           "formulas, lower bound)",
           ran_here);
}

void criterion8_rtstar_witness() {
    RtStarWitness w = rt_star_witness(7, 100000);
    bool ok = w.bound == Rat(6, 5) && w.within_bound;
    report("8. RT* -> 1 witness: measured long-factor exponent <= 1.2 at k=7",
           ok, "measured " + rat_str(w.measured));
}

}  // namespace

int main() {
    criterion1_table_2_to_5();
    criterion2_table_6_to_10();
    criterion3_worked_dsets();
    criterion4_graph_shapes();
    criterion5_oracle_crosscheck();
    criterion6_replay();
    criterion7_property_suites();
    criterion8_rtstar_witness();
    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "FAILURES: " + std::to_string(failures))
              << std::endl;
    return failures == 0 ? 0 : 1;
}

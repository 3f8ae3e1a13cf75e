// critex: exact critical-exponent toolkit for Sturmian and balanced
// sequences. Subcommands: estar, esturmian, graph, dset, pairs, rtbstar,
// oracle, rtstar-witness.

#include "CLI11.hpp"

#include "critex/balanced.hpp"
#include "critex/cgap.hpp"
#include "critex/forcing.hpp"
#include "critex/search.hpp"
#include "critex/sturmian.hpp"
#include "critex/tails_graph.hpp"

#include "json.hpp"

#include <fstream>
#include <iostream>

using namespace critex;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitIncomplete = 3;

std::pair<long, long> parse_pp(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("--pp expects P,P'");
    return {std::stol(s.substr(0, comma)), std::stol(s.substr(comma + 1))};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

std::string quad_report(const Quad& v) {
    return v.str() + " = " + v.decimal(12);
}

int cmd_estar(const std::string& cf_str, const std::string& pp_str, bool json) {
    ContinuedFraction cf = ContinuedFraction::parse(cf_str);
    auto [P, Pp] = parse_pp(pp_str);
    EstarResult r = estar_exact(cf, PeriodPair(P, Pp));
    if (json) {
        nlohmann::json j;
        j["theta"] = cf.str();
        j["P"] = P;
        j["Pp"] = Pp;
        j["estar"] = r.value.str();
        j["estar_decimal"] = r.value.decimal(12);
        j["best"] = {{"period_pos", r.best.period_pos}, {"m", r.best.m},
                     {"k", r.best.k},                   {"l", r.best.l},
                     {"delta", r.best.delta.str()},     {"x", r.best.x.str()}};
        j["anomalies"] = r.anomalies;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "E*  = " << quad_report(r.value) << "\n";
        std::cout << "attained at period position " << r.best.period_pos << " with (m,k,l) = ("
                  << r.best.m << "," << r.best.k << "," << r.best.l << ")\n";
        std::cout << "delta = " << quad_report(r.best.delta) << "\n";
        std::cout << "x     = " << quad_report(r.best.x) << "\n";
        for (auto& a : r.anomalies) std::cout << "note: " << a << "\n";
    }
    return 0;
}

int cmd_esturmian(const std::string& cf_str) {
    ContinuedFraction cf = ContinuedFraction::parse(cf_str);
    std::cout << "E   = " << quad_report(e_sturmian(cf)) << "\n";
    std::cout << "E*  = " << quad_report(estar_sturmian(cf)) << "\n";
    return 0;
}

int cmd_graph(const std::string& pp_str, const std::string& beta_str, bool reduce,
              const std::string& dot_path, const std::string& json_path, size_t walk_cap) {
    auto [P, Pp] = parse_pp(pp_str);
    PeriodPair pp(P, Pp);
    Quad beta = parse_quad(beta_str);
    TailsGraph g = build_graph(pp, beta);
    if (reduce) reduce_to_fixpoint(g);
    auto sccs = strongly_connected(g);
    bool complete = true;
    size_t alive_edges = 0;
    for (auto& e : g.edges) alive_edges += e.alive;
    size_t cap = walk_cap ? walk_cap : std::min<size_t>(std::max<size_t>(2 * alive_edges, 12), 32);
    auto cands = extract_candidates(g, cap, 2000000, complete);
    std::cout << "classes: " << g.total_classes << " total, " << g.verts.size()
              << " reachable; alive edges: " << alive_edges << "; sccs: " << sccs.size()
              << "; candidates (walk cap " << cap << "): " << cands.size()
              << (complete ? "" : " [incomplete]") << "\n";
    for (auto& c : cands) std::cout << "  tail " << candidate_theta(c).str() << "\n";
    if (!dot_path.empty()) write_file(dot_path, to_dot(g, cands));
    if (!json_path.empty()) write_file(json_path, graph_json(g, sccs, cands));
    return complete ? 0 : kExitIncomplete;
}

int cmd_dset(const std::string& pp_str, const std::string& beta_str) {
    auto [P, Pp] = parse_pp(pp_str);
    PeriodPair pp(P, Pp);
    Quad beta = parse_quad(beta_str);
    for (auto& c : all_classes(pp))
        std::cout << c.str() << "  ->  " << admissible_set(c, beta, pp).str() << "\n";
    return 0;
}

int cmd_pairs(int d, const std::string& cap_str) {
    Quad cap = cap_str.empty() ? default_beta_init(d) : parse_quad(cap_str);
    for (auto& pc : enumerate_pairs(d, cap))
        std::cout << "(" << pc.P << "," << pc.Pp << ") on " << pc.da << "+" << pc.db
                  << " letters\n";
    return 0;
}

int cmd_rtbstar(int d, const std::string& beta_str, size_t walk_cap, int jobs, bool json) {
    std::optional<Quad> beta;
    if (!beta_str.empty()) beta = parse_quad(beta_str);
    if (d >= 9) std::cerr << "note: d=" << d << " is an extended run; expect a long search\n";
    SearchResult r = rtb_star(d, beta, walk_cap, jobs);
    if (json) {
        nlohmann::json j;
        j["d"] = r.d;
        j["rtb_star"] = r.best.str();
        j["rtb_star_decimal"] = r.best.decimal(12);
        j["P"] = r.P;
        j["Pp"] = r.Pp;
        j["theta"] = r.theta.str();
        j["passes"] = r.passes;
        j["complete"] = r.complete;
        auto log = nlohmann::json::array();
        for (auto& pl : r.log) {
            nlohmann::json e{{"P", pl.P}, {"Pp", pl.Pp}, {"status", pl.status}};
            if (pl.best) e["best"] = pl.best->str();
            if (pl.theta) e["theta"] = pl.theta->str();
            log.push_back(e);
        }
        j["pairs"] = log;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "RTB*(" << r.d << ") = " << quad_report(r.best) << "\n";
        std::cout << "attained with (P,P') = (" << r.P << "," << r.Pp << "), theta = "
                  << r.theta.str() << "\n";
        for (auto& pl : r.log) {
            std::cout << "  (" << pl.P << "," << pl.Pp << "): " << pl.status;
            if (pl.best) std::cout << "  best " << pl.best->decimal(9);
            std::cout << "\n";
        }
        if (!r.complete) std::cout << "warning: some walk enumerations hit the budget\n";
    }
    return r.complete ? 0 : kExitIncomplete;
}

int cmd_oracle(const std::string& cf_str, const std::string& y_str, const std::string& yp_str,
               size_t prefix_len, size_t n_lo, size_t n_hi) {
    ContinuedFraction cf = ContinuedFraction::parse(cf_str);
    if (!ConstantGap::is_constant_gap(y_str))
        throw std::invalid_argument("--y is not a constant gap word: " + y_str);
    if (!ConstantGap::is_constant_gap(yp_str))
        throw std::invalid_argument("--y2 is not a constant gap word: " + yp_str);
    OracleReport rep = oracle_estimate(cf, ConstantGap(y_str), ConstantGap(yp_str), prefix_len,
                                       n_lo, n_hi);
    std::cout << "coloured prefix: " << rep.coloured_head << "...\n";
    std::cout << "estimate: " << rat_str(rep.runs.exponent) << " = "
              << Quad(rep.runs.exponent).decimal(6) << " (period " << rep.runs.period
              << ", position " << rep.runs.pos << ", run " << rep.runs.run_len << ")\n";
    if (rep.runs.infinite_suspect)
        std::cout << "warning: repetition reaches the prefix end; the true exponent may be "
                     "unbounded (periodic input?)\n";
    return 0;
}

int cmd_rtstar_witness(int k, size_t prefix_len) {
    RtStarWitness w = rt_star_witness(k, prefix_len);
    std::cout << "source: " << w.source << "\n";
    std::cout << "prefix: " << w.word.substr(0, 72) << "...\n";
    std::cout << "measured exponent over periods [" << w.n_lo << "," << w.n_hi
              << "]: " << rat_str(w.measured) << " = " << Quad(w.measured).decimal(6) << "\n";
    std::cout << "bound 1 + 2/(F_k - 3) = " << rat_str(w.bound) << "\n";
    std::cout << (w.within_bound ? "within bound" : "EXCEEDS BOUND") << "\n";
    return w.within_bound ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact critical exponents of Sturmian and balanced sequences"};
    app.require_subcommand(1);

    std::string cf_str, pp_str = "1,1", beta_str, y_str, yp_str, dot_path, json_path, cap_str;
    size_t prefix_len = 100000, n_lo = 100, n_hi = 1000, walk_cap = 0;
    int d = 5, k = 7, jobs = 1;
    bool reduce = false, json = false;

    auto* estar = app.add_subcommand("estar", "exact asymptotic critical exponent");
    estar->add_option("cf", cf_str, "slope, e.g. \"0;1,(2)\"")->required();
    estar->add_option("--pp", pp_str, "periods P,P'");
    estar->add_flag("--json", json);

    auto* esturm = app.add_subcommand("esturmian", "exact Sturmian E and E*");
    esturm->add_option("cf", cf_str)->required();

    auto* graph = app.add_subcommand("graph", "build (and reduce) the admissible-tails graph");
    graph->add_option("--pp", pp_str)->required();
    graph->add_option("--beta", beta_str, "e.g. 1/2 or (3*sqrt(65)-5)/80")->required();
    graph->add_flag("--reduce", reduce);
    graph->add_option("--dot", dot_path);
    graph->add_option("--json", json_path);
    graph->add_option("--walk-cap", walk_cap);

    auto* dset = app.add_subcommand("dset", "admissible sets per matrix class");
    dset->add_option("--pp", pp_str)->required();
    dset->add_option("--beta", beta_str)->required();

    auto* pairs = app.add_subcommand("pairs", "candidate period pairs for an alphabet size");
    pairs->add_option("d", d)->required();
    pairs->add_option("--beta", cap_str, "lower-bound cap (default: built-in threshold)");

    auto* rtb = app.add_subcommand("rtbstar", "search the least asymptotic critical exponent");
    rtb->add_option("d", d)->required();
    rtb->add_option("--beta", beta_str, "starting beta (default: built-in threshold)");
    rtb->add_option("--walk-cap", walk_cap);
    rtb->add_option("--jobs", jobs);
    rtb->add_flag("--json", json);

    auto* oracle = app.add_subcommand("oracle", "empirical repetition exponent of a colouring");
    oracle->add_option("cf", cf_str)->required();
    oracle->add_option("--y", y_str, "constant gap word for a")->required();
    oracle->add_option("--y2", yp_str, "constant gap word for b")->required();
    oracle->add_option("--prefix-len,-n", prefix_len);
    oracle->add_option("--n-lo", n_lo);
    oracle->add_option("--n-hi", n_hi);

    auto* wit = app.add_subcommand("rtstar-witness", "binary sequence with tiny long-factor exponent");
    wit->add_option("--k", k, "Fibonacci index (>= 7)");
    wit->add_option("--prefix-len,-n", prefix_len);

    CLI11_PARSE(app, argc, argv);

    try {
        if (estar->parsed()) return cmd_estar(cf_str, pp_str, json);
        if (esturm->parsed()) return cmd_esturmian(cf_str);
        if (graph->parsed()) return cmd_graph(pp_str, beta_str, reduce, dot_path, json_path, walk_cap);
        if (dset->parsed()) return cmd_dset(pp_str, beta_str);
        if (pairs->parsed()) return cmd_pairs(d, cap_str);
        if (rtb->parsed()) return cmd_rtbstar(d, beta_str, walk_cap, jobs, json);
        if (oracle->parsed()) return cmd_oracle(cf_str, y_str, yp_str, prefix_len, n_lo, n_hi);
        if (wit->parsed()) return cmd_rtstar_witness(k, prefix_len);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <unistd.h>

#include "cfcon/cfc.hpp"
#include "cfcon/experiments.hpp"
#include "cfcon/generators.hpp"
#include "cfcon/hamilton.hpp"
#include "cfcon/io.hpp"
#include "cfcon/rng.hpp"
#include "cfcon/structure.hpp"
#include "oracles.hpp"

using namespace cfcon;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failures;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1fs", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << id << "] " << name << " :: " << o.detail << " (" << buf
              << ")" << std::endl;
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    return buf;
}

ExperimentSpec spec_of(int n, ExperimentMode mode, double param, int trials, std::uint64_t seed) {
    ExperimentSpec s;
    s.n = n;
    s.mode = mode;
    s.param = param;
    s.trials = trials;
    s.master_seed = seed;
    s.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    return s;
}

Outcome connectivity() {
    Outcome o;
    const double as[] = {-2.0, 0.0, 2.0};
    const double targets[] = {0.00062, 0.3679, 0.8734};
    std::ostringstream d;
    for (int i = 0; i < 3; ++i) {
        ExperimentResult r = run_connectivity_experiment(spec_of(2000, ExperimentMode::offset, as[i], 500, 1000 + i));
        const double f = r.aggregates.fraction_connected;
        const bool ok = std::abs(f - targets[i]) <= 0.07;
        o.pass = o.pass && ok;
        d << "a=" << as[i] << ": " << fmt(f) << " vs " << targets[i] << (ok ? "" : " (out of range)") << "; ";
    }
    o.detail = d.str();
    return o;
}

Outcome thm_desk_scale() {
    ExperimentResult r = run_cfc_experiment(spec_of(500, ExperimentMode::hamilton_margin, 3.0, 100, 2000));
    int connected = 0, good = 0, constructive = 0;
    for (const TrialRecord& t : r.trials) {
        if (!t.connected) continue;
        ++connected;
        const bool tag = t.method == "constructive" || t.method == "randomized";
        if (t.certified && t.bound && *t.bound <= 2 && tag) ++good;
        if (t.method == "constructive") ++constructive;
    }
    Outcome o;
    const double f = connected ? static_cast<double>(good) / connected : 0.0;
    o.pass = connected > 0 && f >= 0.95;
    o.detail = std::to_string(good) + "/" + std::to_string(connected) + " connected samples certified <= 2 (" +
               fmt(f) + "), constructive " + std::to_string(constructive);
    return o;
}

Outcome exact_ground_truth() {
    Outcome o;
    std::ostringstream d;
    auto expect = [&](const std::string& name, const Graph& g, int want) {
        ExactResult r = cfc_exact(g, 4);
        const bool ok = r.value && *r.value == want;
        if (!ok) {
            o.pass = false;
            d << name << " got " << (r.value ? std::to_string(*r.value) : "none") << " want " << want << "; ";
        }
    };
    for (int n = 3; n <= 5; ++n) expect("K" + std::to_string(n), make_complete(n), 1);
    for (int n = 4; n <= 7; ++n) expect("C" + std::to_string(n), make_cycle(n), 2);
    expect("P3", make_path(3), 2);
    expect("P4", make_path(4), 2);
    const int p8_oracle = oracle::cfc_brute_force(make_path(8), 4);
    ExactResult p8 = cfc_exact(make_path(8), 4);
    if (!p8.value || *p8.value != p8_oracle) {
        o.pass = false;
        d << "P8 mismatch; ";
    }
    d << "P8 = " << (p8.value ? std::to_string(*p8.value) : "none") << ", oracle " << p8_oracle;
    o.detail = d.str();
    return o;
}

Outcome checker_oracle() {
    Rng rng(404);
    int agree = 0, certified = 0;
    for (int t = 0; t < 200; ++t) {
        const int n = 2 + static_cast<int>(rng.below(6));
        const int extra = static_cast<int>(rng.below(n + 2));
        Graph g = oracle::random_connected(n, extra, rng);
        EdgeColoring col;
        col.palette_size = 2;
        col.colors.resize(g.edge_count());
        for (auto& c : col.colors) c = 1 + static_cast<int>(rng.below(2));
        const bool fast = is_conflict_free_connected(g, col).certified();
        const bool slow = oracle::cf_connected(g, col.colors);
        agree += fast == slow;
        certified += slow;
    }
    Outcome o;
    o.pass = agree == 200;
    o.detail = std::to_string(agree) + "/200 agree (" + std::to_string(certified) + " conflict-free connected)";
    return o;
}

Outcome cjv_suite() {
    int checked = 0, counter = 0, catalog = 0;
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : oracle::connected_catalog(n)) {
            ++catalog;
            if (g.is_complete() || !cjv_condition(g)) continue;
            ++checked;
            ExactResult r = cfc_exact(g, 2, 15);
            if (!r.value || *r.value > 2) ++counter;
        }
    }
    Outcome o;
    o.pass = counter == 0 && checked > 0;
    o.detail = std::to_string(checked) + " graphs satisfy the condition (of " + std::to_string(catalog) +
               " connected), counterexamples " + std::to_string(counter);
    return o;
}

Outcome monotonicity() {
    Rng rng(606);
    int ok = 0, pairs = 0, strict = 0;
    while (pairs < 100) {
        const int n = 3 + static_cast<int>(rng.below(6));
        Graph sub = oracle::random_connected(n, 0, rng);  // spanning tree
        std::vector<std::pair<int, int>> edges = sub.edge_pairs();
        const int extra = static_cast<int>(rng.below(6));
        for (int i = 0; i < extra; ++i) {
            const int a = static_cast<int>(rng.below(n)), b = static_cast<int>(rng.below(n));
            if (a != b) edges.emplace_back(a, b);
        }
        Graph g(n, edges);
        if (g.edge_count() > 12) continue;
        // Keep a random connected spanning subgraph: the tree plus some of the extras.
        std::vector<std::pair<int, int>> kept = sub.edge_pairs();
        for (const auto& e : g.edge_pairs()) {
            if (!sub.adjacent(e.first, e.second) && rng.bernoulli(0.5)) kept.push_back(e);
        }
        Graph gp(n, kept);
        ++pairs;
        ExactResult a = cfc_exact(g, 6, 12);
        ExactResult b = cfc_exact(gp, 6, 12);
        if (a.value && b.value && *a.value <= *b.value) ++ok;
        if (a.value && b.value && *a.value < *b.value) ++strict;
    }
    Outcome o;
    o.pass = ok == 100;
    o.detail = std::to_string(ok) + "/100 pairs ordered (" + std::to_string(strict) + " strictly)";
    return o;
}

Outcome hamilton_engine() {
    Outcome o;
    std::ostringstream d;
    int small = 0;
    int heuristic_only = 0;
    HamiltonOptions no_exact;
    no_exact.exact_cutoff = 0;
    for (int n = 3; n <= 18; ++n) {
        for (const Graph& g : {make_cycle(n), make_complete(n)}) {
            HamiltonResult r = hamiltonian_cycle(g, 50, static_cast<std::uint64_t>(n));
            if (r.found() && verify_cycle(g, *r.cycle)) ++small;
            HamiltonResult h = hamiltonian_cycle(g, static_cast<std::uint64_t>(n), no_exact);
            if (h.found() && verify_cycle(g, *h.cycle)) ++heuristic_only;
        }
    }
    const bool small_ok = small == 32;
    d << "C_n/K_n " << small << "/32 (rotation search alone " << heuristic_only << "/32); ";

    const int n = 500;
    const double p = hamilton_p(n, 3.0);
    int found = 0, min_deg2 = 0, found_min_deg2 = 0;
    for (int i = 0; i < 100; ++i) {
        const std::uint64_t s = substream(7000, static_cast<std::uint64_t>(i));
        Graph g = gen_gnp(n, p, substream(s, 0));
        HamiltonResult r = hamiltonian_cycle(g, 50, substream(s, 2));
        const bool f = r.found() && verify_cycle(g, *r.cycle);
        found += f;
        bool deg_ok = is_connected(g);
        for (Vertex v = 0; v < n && deg_ok; ++v) deg_ok = g.degree(v) >= 2;
        min_deg2 += deg_ok;
        found_min_deg2 += f && deg_ok;
    }
    const bool gnp_ok = found >= 95;
    d << "G(500,p) " << found << "/100 (" << min_deg2 << " samples have min degree >= 2, cycle found in "
      << found_min_deg2 << " of them); ";

    Rng rng(808);
    int graphs = 0, match = 0;
    while (graphs < 500) {
        const int gn = 2 + static_cast<int>(rng.below(12));
        Graph g = oracle::random_graph(gn, rng.uniform() * 0.7, rng);
        if (g.edge_count() > 20) continue;
        ++graphs;
        match += find_bridges(g).bridges == oracle::bridges_by_removal(g);
    }
    const bool bridges_ok = match == 500;
    d << "bridges " << match << "/500";
    o.pass = small_ok && gnp_ok && bridges_ok;
    o.detail = d.str();
    return o;
}

Outcome regular_sweep() {
    ExperimentResult r = run_regular_experiment(spec_of(100, ExperimentMode::regular, 3.0, 50, 3000));
    const Aggregates& a = r.aggregates;
    Outcome o;
    o.pass = a.fraction_hamilton >= 0.9 && a.fraction_le2_overall >= 0.9;
    o.detail = "Hamilton found " + fmt(a.fraction_hamilton) + ", certified <= 2 " + fmt(a.fraction_le2_overall) +
               " (among Hamilton successes " + fmt(a.fraction_le2_among_hamilton) + ")";
    return o;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Outcome cli_reproducibility() {
    const fs::path dir = fs::temp_directory_path() / ("cfcon_accept_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const std::string cli = CFCON_CLI;
    auto q = [&](const std::string& name) { return "'" + (dir / name).string() + "'"; };
    auto sh = [&](const std::string& cmd) { return std::system((cmd + " 2>/dev/null").c_str()); };

    // Shared inputs.
    sh(cli + " gen --model gnp --n 200 --p 0.04 --seed 11 --out " + q("in.txt"));
    sh(cli + " cfc " + q("in.txt") + " >/dev/null");  // warm-up, not compared
    {
        std::ofstream f(dir / "p6.txt");
        write_edge_list(f, make_path(6));
    }
    sh(cli + " color " + q("in.txt") + " --seed 5 --out " + q("in.col") + " --cert " + q("in.cert"));

    struct Cmd {
        std::string name;
        std::string args;  // "{}" stands for the run tag
        std::vector<std::string> files;
    };
    const std::vector<Cmd> cmds = {
        {"gen gnp", "gen --model gnp --n 300 --p 0.02 --seed 3 --out OUT_{}.txt", {"OUT_{}.txt"}},
        {"gen regular", "gen --model regular --n 100 --r 3 --seed 3 --out OUT_{}.txt", {"OUT_{}.txt"}},
        {"analyze", "analyze IN --seed 9 --trials 50 --out OUT_{}.json", {"OUT_{}.json"}},
        {"ham", "ham IN --seed 4 --restarts 20 --out OUT_{}.txt", {"OUT_{}.txt"}},
        {"color", "color IN --seed 6 --out OUT_{}.col --cert OUT_{}.cert", {"OUT_{}.col", "OUT_{}.cert"}},
        {"check", "check IN --coloring COL --seed 2 --out OUT_{}.json", {"OUT_{}.json"}},
        {"cfc", "cfc P6 --out OUT_{}.txt", {"OUT_{}.txt"}},
        {"experiment offset", "experiment --mode offset --n 300 --param 0 --trials 30 --seed 1 --jobs 3 --out OUT_{}.csv --summary OUT_{}.json",
         {"OUT_{}.csv", "OUT_{}.json"}},
        {"experiment alpha", "experiment --mode alpha --n 150 --param 2 --trials 10 --seed 1 --jobs 2 --out OUT_{}.csv --summary OUT_{}.json",
         {"OUT_{}.csv", "OUT_{}.json"}},
        {"experiment hamilton-margin", "experiment --mode hamilton-margin --n 150 --param 3 --trials 10 --seed 1 --out OUT_{}.csv --summary OUT_{}.json",
         {"OUT_{}.csv", "OUT_{}.json"}},
        {"experiment regular", "experiment --mode regular --n 60 --param 3 --trials 10 --seed 1 --jobs 2 --out OUT_{}.csv --summary OUT_{}.json",
         {"OUT_{}.csv", "OUT_{}.json"}},
    };

    auto expand = [&](std::string s, const std::string& tag) {
        auto replace_all = [](std::string& t, const std::string& from, const std::string& to) {
            for (std::size_t pos = 0; (pos = t.find(from, pos)) != std::string::npos; pos += to.size())
                t.replace(pos, from.size(), to);
        };
        replace_all(s, "{}", tag);
        return s;
    };
    auto quote_paths = [&](std::string s) {
        std::istringstream in(s);
        std::string word, outs;
        while (in >> word) {
            if (word == "IN") word = q("in.txt");
            else if (word == "COL") word = q("in.col");
            else if (word == "P6") word = q("p6.txt");
            else if (word.rfind("OUT_", 0) == 0) word = q(word);
            outs += (outs.empty() ? "" : " ") + word;
        }
        return outs;
    };

    int identical = 0;
    std::string bad;
    for (const Cmd& c : cmds) {
        bool same = true;
        for (const char* tag : {"a", "b"}) {
            const std::string args = quote_paths(expand(c.args, tag));
            sh(cli + " " + args + " > " + q(std::string("stdout_") + tag));
        }
        same = slurp(dir / "stdout_a") == slurp(dir / "stdout_b");
        for (const std::string& f : c.files) {
            const std::string fa = slurp(dir / expand(f, "a"));
            const std::string fb = slurp(dir / expand(f, "b"));
            same = same && !fa.empty() && fa == fb;
        }
        if (same) ++identical;
        else bad += c.name + "; ";
    }
    std::error_code ec;
    fs::remove_all(dir, ec);
    Outcome o;
    o.pass = identical == static_cast<int>(cmds.size());
    o.detail = std::to_string(identical) + "/" + std::to_string(cmds.size()) + " commands byte-identical" +
               (bad.empty() ? "" : " (differ: " + bad + ")");
    return o;
}

}  // namespace

int main() {
    criterion(1, "connectivity threshold, n=2000, 500 trials", connectivity);
    criterion(2, "cfc <= 2 certified at n=500, omega=3", thm_desk_scale);
    criterion(3, "exact cfc ground truth", exact_ground_truth);
    criterion(4, "checker agrees with path enumeration", checker_oracle);
    criterion(5, "bridge condition implies cfc <= 2 (n <= 6)", cjv_suite);
    criterion(6, "spanning subgraph monotonicity", monotonicity);
    criterion(7, "Hamilton engine and bridge finder", hamilton_engine);
    criterion(8, "3-regular sweep, n=100", regular_sweep);
    criterion(9, "CLI reruns are byte-identical", cli_reproducibility);
    std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
    return failures == 0 ? 0 : 1;
}

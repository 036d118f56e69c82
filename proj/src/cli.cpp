#include "cfcon/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cfcon/cfc.hpp"
#include "cfcon/errors.hpp"
#include "cfcon/experiments.hpp"
#include "cfcon/generators.hpp"
#include "cfcon/hamilton.hpp"
#include "cfcon/io.hpp"
#include "cfcon/log.hpp"
#include "cfcon/serialize.hpp"
#include "cfcon/structure.hpp"

namespace cfcon {

namespace {

Graph load_graph(const std::string& path) {
    if (path == "-") return read_edge_list(std::cin);
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return read_edge_list(in);
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

// Writes to `path`, or to `fallback` when path is empty or "-".
void emit(const std::string& path, std::ostream& fallback, const std::string& text) {
    if (path.empty() || path == "-") {
        fallback << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot write " + path);
    f << text;
}

bool to_file(const std::string& path) { return !path.empty() && path != "-"; }

struct Options {
    // gen
    std::string model;
    int n = 0;
    double p = -1.0;
    int r = -1;
    std::uint64_t seed = 0;
    std::string out;
    // shared input
    std::string input;
    // analyze
    long long trials = 200;
    // ham
    int restarts = 50;
    // color / check
    std::string cert;
    std::string coloring;
    // cfc
    int max_k = 6;
    int budget = kDefaultEdgeBudget;
    // experiment
    std::string mode;
    double param = 0.0;
    int exp_trials = 100;
    std::string summary;
    int jobs = 1;
};

int do_gen(const Options& o, std::ostream& out) {
    Graph g;
    if (o.model == "gnp") {
        if (o.p < 0) throw InputError("gen --model gnp needs --p");
        g = gen_gnp(o.n, o.p, o.seed);
    } else {
        if (o.r < 0) throw InputError("gen --model regular needs --r");
        g = gen_random_regular(o.n, o.r, o.seed);
    }
    log(LogLevel::info, "generated n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()));
    std::ostringstream buf;
    write_edge_list(buf, g);
    emit(o.out, out, buf.str());
    return kExitOk;
}

int do_analyze(const Options& o, std::ostream& out) {
    const Graph g = load_graph(o.input);
    const int n = g.vertex_count();
    nlohmann::json j;
    j["n"] = n;
    j["m"] = g.edge_count();
    std::vector<int> degrees(n);
    for (Vertex v = 0; v < n; ++v) degrees[v] = g.degree(v);
    j["degrees"] = degrees;
    const bool connected = is_connected(g);
    j["connected"] = connected;
    const CutStructure cut = find_bridges(g);
    j["bridges"] = cut.bridges;
    j["articulation_points"] = cut.articulation_points;
    j["two_edge_connected"] = is_two_edge_connected(g);
    j["two_connected"] = is_two_connected(g);
    j["complete"] = g.is_complete();
    j["cjv_condition"] = connected ? nlohmann::json(cjv_condition(g)) : nlohmann::json(nullptr);

    nlohmann::json checks = nlohmann::json::array();
    if (n >= 2) {
        const VertexPartition part = classify_vertices(g);
        j["partition"] = {{"threshold", round6(part.threshold)},
                          {"small", part.small},
                          {"large_count", part.large.size()}};
        const Prop2Report p2 = check_prop2(g, part);
        checks.push_back(to_json(p2.small_count));
        checks.push_back(to_json(p2.small_distance));
        checks.push_back(to_json(p2.small_edges));
        const double pairs = static_cast<double>(n) * (n - 1) / 2.0;
        const double p = o.p >= 0 ? o.p : g.edge_count() / pairs;
        j["p_used"] = round6(p);
        const Prop1Report p1 = check_prop1_sampled(g, p, o.trials, o.seed);
        checks.push_back(to_json(p1.sparse_subsets));
        checks.push_back(to_json(p1.cross_edges));
    }
    j["checks"] = std::move(checks);
    emit(o.out, out, j.dump(2) + "\n");
    return kExitOk;
}

int do_ham(const Options& o, std::ostream& out) {
    const Graph g = load_graph(o.input);
    const HamiltonResult res = hamiltonian_cycle(g, o.restarts, o.seed);
    std::ostringstream buf;
    if (res.found()) {
        for (std::size_t i = 0; i < res.cycle->size(); ++i) buf << (i ? " " : "") << (*res.cycle)[i];
        buf << '\n';
    } else {
        buf << "NOT FOUND (" << (res.kind == SearchKind::exact ? "exact" : "heuristic") << ")\n";
    }
    emit(o.out, out, buf.str());
    return res.found() ? kExitOk : kExitNegative;
}

int do_color(const Options& o, std::ostream& out, std::ostream& err) {
    const Graph g = load_graph(o.input);
    if (!is_connected(g)) throw InputError("graph is disconnected");
    EdgeColoring coloring;
    if (g.is_complete()) {
        coloring = EdgeColoring::uniform(g.edge_count(), 1);
    } else {
        Construction built = construct_cfc2_coloring(g, o.seed, o.restarts);
        if (!built.ok()) {
            err << "construction failed at stage " << to_string(built.stage) << ": " << built.message << '\n';
            return kExitBudget;
        }
        coloring = std::move(built.coloring);
    }
    CertifyOptions copts;
    copts.seed = o.seed;
    const CfcCertificate cert = is_conflict_free_connected(g, coloring, copts);
    std::ostringstream col;
    write_coloring(col, coloring);
    emit(o.out, out, col.str());
    const std::string cert_text = to_json(cert).dump(2) + "\n";
    if (to_file(o.cert)) {
        emit(o.cert, out, cert_text);
    } else if (to_file(o.out)) {
        out << cert_text;
    }
    return cert.certified() ? kExitOk : kExitNegative;
}

int do_check(const Options& o, std::ostream& out, std::ostream& err) {
    const Graph g = load_graph(o.input);
    std::ifstream in(o.coloring);
    if (!in) throw InputError("cannot open " + o.coloring);
    EdgeColoring coloring;
    try {
        coloring = read_coloring(in, g);
    } catch (const InputError& e) {
        throw InputError(o.coloring + ": " + e.what());
    }
    CertifyOptions copts;
    copts.seed = o.seed;
    const CfcCertificate cert = is_conflict_free_connected(g, coloring, copts);
    emit(o.out, out, to_json(cert).dump(2) + "\n");
    if (!cert.certified()) {
        err << "no conflict-free path between " << cert.failing_pair->first << " and "
            << cert.failing_pair->second << '\n';
        return kExitNegative;
    }
    return kExitOk;
}

int do_cfc(const Options& o, std::ostream& out) {
    const Graph g = load_graph(o.input);
    const ExactResult res = cfc_exact(g, o.max_k, o.budget);
    if (!res.value) {
        emit(o.out, out, "EXCEEDED (cfc > " + std::to_string(o.max_k) + ")\n");
        return kExitBudget;
    }
    emit(o.out, out, std::to_string(*res.value) + "\n");
    return kExitOk;
}

int do_experiment(const Options& o, std::ostream& out) {
    ExperimentSpec spec;
    spec.n = o.n;
    spec.mode = parse_mode(o.mode);
    spec.param = o.param;
    spec.trials = o.exp_trials;
    spec.master_seed = o.seed;
    spec.jobs = o.jobs;
    const ExperimentResult result = run_experiment(spec);
    std::ostringstream csv;
    write_csv(csv, result);
    emit(o.out, out, csv.str());
    const std::string summary = summary_json(result);
    if (to_file(o.summary)) {
        emit(o.summary, out, summary);
    } else if (to_file(o.out)) {
        out << summary;
    }
    log(LogLevel::info, "experiment done: " + std::to_string(result.aggregates.trials) + " trials");
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Conflict-free connection coloring toolkit", "cfcon"};
    app.require_subcommand(1);
    Options o;

    auto* gen = app.add_subcommand("gen", "Generate a random graph as an edge list");
    gen->add_option("--model", o.model, "gnp | regular")->required()->check(CLI::IsMember({"gnp", "regular"}));
    gen->add_option("--n", o.n, "Vertex count")->required()->check(CLI::NonNegativeNumber);
    gen->add_option("--p", o.p, "Edge probability (gnp)");
    gen->add_option("--r", o.r, "Degree (regular)");
    gen->add_option("--seed", o.seed, "Seed");
    gen->add_option("--out", o.out, "Output file (default stdout)");

    auto* analyze = app.add_subcommand("analyze", "Structural report as JSON");
    analyze->add_option("input", o.input, "Edge-list file or -")->required();
    analyze->add_option("--p", o.p, "Edge probability for the sampled subset checks (default: edge density)");
    analyze->add_option("--trials", o.trials, "Samples per sampled check")->check(CLI::PositiveNumber);
    analyze->add_option("--seed", o.seed, "Seed for the sampled checks");
    analyze->add_option("--out", o.out, "Output file (default stdout)");

    auto* ham = app.add_subcommand("ham", "Search for a Hamiltonian cycle");
    ham->add_option("input", o.input, "Edge-list file or -")->required();
    ham->add_option("--restarts", o.restarts, "Randomized restarts")->check(CLI::NonNegativeNumber);
    ham->add_option("--seed", o.seed, "Seed");
    ham->add_option("--out", o.out, "Output file (default stdout)");

    auto* color = app.add_subcommand("color", "Build and certify a 2-coloring");
    color->add_option("input", o.input, "Edge-list file or -")->required();
    color->add_option("--seed", o.seed, "Seed");
    color->add_option("--restarts", o.restarts, "Hamiltonian search restarts")->check(CLI::NonNegativeNumber);
    color->add_option("--out", o.out, "Coloring file (default stdout)");
    color->add_option("--cert", o.cert, "Certificate JSON file");

    auto* check = app.add_subcommand("check", "Verify a coloring is conflict-free connected");
    check->add_option("input", o.input, "Edge-list file or -")->required();
    check->add_option("--coloring", o.coloring, "Coloring file")->required();
    check->add_option("--seed", o.seed, "Seed for sampled witnesses");
    check->add_option("--out", o.out, "Certificate file (default stdout)");

    auto* cfc = app.add_subcommand("cfc", "Exact conflict-free connection number");
    cfc->add_option("input", o.input, "Edge-list file or -")->required();
    cfc->add_option("--max-k", o.max_k, "Largest palette to try")->check(CLI::PositiveNumber);
    cfc->add_option("--budget", o.budget, "Largest edge count to enumerate")->check(CLI::NonNegativeNumber);
    cfc->add_option("--out", o.out, "Output file (default stdout)");

    auto* exp = app.add_subcommand("experiment", "Monte-Carlo experiment, CSV per trial");
    exp->add_option("--mode", o.mode, "offset | alpha | hamilton-margin | regular")->required();
    exp->add_option("--n", o.n, "Vertex count")->required();
    exp->add_option("--param", o.param, "a, alpha, omega, or r depending on mode")->required();
    exp->add_option("--trials", o.exp_trials, "Trials")->check(CLI::PositiveNumber);
    exp->add_option("--seed", o.seed, "Master seed");
    exp->add_option("--out", o.out, "CSV file (default stdout)");
    exp->add_option("--summary", o.summary, "Summary JSON file");
    exp->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitInput;
    }

    try {
        if (gen->parsed()) return do_gen(o, out);
        if (analyze->parsed()) return do_analyze(o, out);
        if (ham->parsed()) return do_ham(o, out);
        if (color->parsed()) return do_color(o, out, err);
        if (check->parsed()) return do_check(o, out, err);
        if (cfc->parsed()) return do_cfc(o, out);
        if (exp->parsed()) return do_experiment(o, out);
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const BudgetError& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const GenerationError& e) {
        err << "generation failed: " << e.what() << '\n';
        return kExitBudget;
    }
    return kExitInput;
}

}  // namespace cfcon

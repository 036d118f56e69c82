#include "cfcon/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <sstream>
#include <thread>

#include "cfcon/errors.hpp"
#include "cfcon/generators.hpp"
#include "cfcon/hamilton.hpp"
#include "cfcon/rng.hpp"
#include "cfcon/serialize.hpp"
#include "cfcon/structure.hpp"

namespace cfcon {

std::string to_string(ExperimentMode mode) {
    switch (mode) {
        case ExperimentMode::offset: return "offset";
        case ExperimentMode::alpha: return "alpha";
        case ExperimentMode::hamilton_margin: return "hamilton-margin";
        case ExperimentMode::regular: return "regular";
    }
    return "unknown";
}

ExperimentMode parse_mode(const std::string& name) {
    if (name == "offset") return ExperimentMode::offset;
    if (name == "alpha") return ExperimentMode::alpha;
    if (name == "hamilton-margin") return ExperimentMode::hamilton_margin;
    if (name == "regular") return ExperimentMode::regular;
    throw InputError("unknown experiment mode '" + name + "' (offset|alpha|hamilton-margin|regular)");
}

double experiment_p(const ExperimentSpec& spec) {
    switch (spec.mode) {
        case ExperimentMode::offset:
        case ExperimentMode::alpha: return threshold_p(spec.n, spec.param);
        case ExperimentMode::hamilton_margin: return hamilton_p(spec.n, spec.param);
        case ExperimentMode::regular:
            return spec.n > 1 ? std::clamp(spec.param / (spec.n - 1), 0.0, 1.0) : 0.0;
    }
    return 0.0;
}

namespace {

void validate(const ExperimentSpec& spec) {
    if (spec.trials < 1) throw InputError("trials must be >= 1");
    if (spec.n < 2) throw InputError("n must be >= 2");
    if (spec.mode == ExperimentMode::hamilton_margin && spec.n < 3) throw InputError("n must be >= 3");
}

// Runs body(i) for every trial index on up to `jobs` threads. Each call
// writes only its own slot, so the output is schedule-independent.
void for_each_trial(int trials, int jobs, const std::function<void(int)>& body) {
    const int workers = std::max(1, std::min(jobs, trials));
    if (workers == 1) {
        for (int i = 0; i < trials; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (int i; (i = next.fetch_add(1)) < trials;) body(i);
            } catch (...) {
                errors[w] = std::current_exception();
                next = trials;
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

ExperimentResult start(const ExperimentSpec& spec) {
    validate(spec);
    ExperimentResult result;
    result.spec = spec;
    result.p = experiment_p(spec);
    result.trials.resize(spec.trials);
    return result;
}

TrialRecord base_record(const ExperimentSpec& spec, int i, double p) {
    TrialRecord rec;
    rec.trial = i;
    rec.seed = substream(spec.master_seed, static_cast<std::uint64_t>(i));
    rec.n = spec.n;
    rec.p = p;
    return rec;
}

void run_cfc_pipeline(const Graph& g, TrialRecord& rec) {
    UpperBound ub = cfc_upper(g, substream(rec.seed, 1));
    rec.method = ub.method;
    rec.bound = ub.bound;
    rec.certified = ub.certified();
    rec.stage = ub.construction_stage ? to_string(*ub.construction_stage) : "";
}

}  // namespace

Aggregates aggregate(const ExperimentSpec& spec, const std::vector<TrialRecord>& rows) {
    Aggregates a;
    a.trials = static_cast<int>(rows.size());
    long long edges = 0;
    int le2_hamilton = 0;
    for (const TrialRecord& r : rows) {
        edges += r.edges;
        a.connected += r.connected;
        const bool le2 = r.certified && r.bound && *r.bound <= 2;
        a.certified_le2 += le2;
        if (r.hamilton_found.value_or(false)) {
            ++a.hamilton_found;
            le2_hamilton += le2;
        }
    }
    if (a.trials > 0) {
        a.fraction_connected = static_cast<double>(a.connected) / a.trials;
        a.mean_edges = static_cast<double>(edges) / a.trials;
        a.fraction_le2_overall = static_cast<double>(a.certified_le2) / a.trials;
        a.fraction_hamilton = static_cast<double>(a.hamilton_found) / a.trials;
    }
    if (a.connected > 0) a.fraction_le2_among_connected = static_cast<double>(a.certified_le2) / a.connected;
    if (a.hamilton_found > 0) a.fraction_le2_among_hamilton = static_cast<double>(le2_hamilton) / a.hamilton_found;
    (void)spec;
    return a;
}

ExperimentResult run_connectivity_experiment(const ExperimentSpec& spec) {
    if (spec.mode != ExperimentMode::offset) throw InputError("connectivity experiment needs mode offset");
    ExperimentResult result = start(spec);
    for_each_trial(spec.trials, spec.jobs, [&](int i) {
        TrialRecord rec = base_record(spec, i, result.p);
        const Graph g = gen_gnp(spec.n, result.p, substream(rec.seed, 0));
        rec.edges = g.edge_count();
        rec.connected = is_connected(g);
        result.trials[i] = std::move(rec);
    });
    result.aggregates = aggregate(spec, result.trials);
    result.theory_connected = std::exp(-std::exp(-spec.param));
    return result;
}

ExperimentResult run_cfc_experiment(const ExperimentSpec& spec) {
    if (spec.mode != ExperimentMode::alpha && spec.mode != ExperimentMode::hamilton_margin) {
        throw InputError("cfc experiment needs mode alpha or hamilton-margin");
    }
    ExperimentResult result = start(spec);
    for_each_trial(spec.trials, spec.jobs, [&](int i) {
        TrialRecord rec = base_record(spec, i, result.p);
        const Graph g = gen_gnp(spec.n, result.p, substream(rec.seed, 0));
        rec.edges = g.edge_count();
        rec.connected = is_connected(g);
        if (rec.connected) run_cfc_pipeline(g, rec);
        result.trials[i] = std::move(rec);
    });
    result.aggregates = aggregate(spec, result.trials);
    return result;
}

ExperimentResult run_regular_experiment(const ExperimentSpec& spec) {
    if (spec.mode != ExperimentMode::regular) throw InputError("regular experiment needs mode regular");
    const int r = static_cast<int>(spec.param);
    if (r != spec.param || r < 3) throw InputError("regular experiment needs an integer r >= 3");
    if ((static_cast<long long>(spec.n) * r) % 2 != 0) throw InputError("n*r must be even");
    if (r >= spec.n) throw InputError("r must be smaller than n");
    ExperimentResult result = start(spec);
    for_each_trial(spec.trials, spec.jobs, [&](int i) {
        TrialRecord rec = base_record(spec, i, result.p);
        try {
            const Graph g = gen_random_regular(spec.n, r, substream(rec.seed, 0));
            rec.edges = g.edge_count();
            rec.connected = is_connected(g);
            rec.hamilton_found = hamiltonian_cycle(g, 50, substream(rec.seed, 2)).found();
            if (rec.connected) run_cfc_pipeline(g, rec);
        } catch (const GenerationError&) {
            rec.method = "generation-failed";
        }
        result.trials[i] = std::move(rec);
    });
    result.aggregates = aggregate(spec, result.trials);
    return result;
}

ExperimentResult run_experiment(const ExperimentSpec& spec) {
    switch (spec.mode) {
        case ExperimentMode::offset: return run_connectivity_experiment(spec);
        case ExperimentMode::alpha:
        case ExperimentMode::hamilton_margin: return run_cfc_experiment(spec);
        case ExperimentMode::regular: return run_regular_experiment(spec);
    }
    throw InputError("unknown mode");
}

void write_csv(std::ostream& out, const ExperimentResult& result) {
    std::ostringstream buf;
    buf << "trial,seed,n,p,connected,method,bound,certified\n";
    for (const TrialRecord& r : result.trials) {
        buf << r.trial << ',' << r.seed << ',' << r.n << ',' << format_real(r.p) << ','
            << (r.connected ? 1 : 0) << ',' << r.method << ',';
        if (r.bound) buf << *r.bound;
        buf << ',' << (r.certified ? 1 : 0) << '\n';
    }
    out << buf.str();
}

std::string summary_json(const ExperimentResult& result) {
    const Aggregates& a = result.aggregates;
    nlohmann::json j;
    j["spec"] = {{"n", result.spec.n},
                 {"mode", to_string(result.spec.mode)},
                 {"param", round6(result.spec.param)},
                 {"trials", result.spec.trials},
                 {"master_seed", result.spec.master_seed}};
    j["p"] = round6(result.p);
    nlohmann::json agg = {{"trials", a.trials},
                          {"connected", a.connected},
                          {"fraction_connected", round6(a.fraction_connected)},
                          {"mean_edges", round6(a.mean_edges)}};
    if (result.spec.mode != ExperimentMode::offset) {
        agg["certified_le2"] = a.certified_le2;
        agg["fraction_le2_among_connected"] = round6(a.fraction_le2_among_connected);
        agg["fraction_le2_overall"] = round6(a.fraction_le2_overall);
    }
    if (result.spec.mode == ExperimentMode::regular) {
        agg["hamilton_found"] = a.hamilton_found;
        agg["fraction_hamilton"] = round6(a.fraction_hamilton);
        agg["fraction_le2_among_hamilton"] = round6(a.fraction_le2_among_hamilton);
    }
    j["aggregates"] = std::move(agg);
    nlohmann::json theory = nlohmann::json::object();
    if (result.theory_connected) theory["connected_limit"] = round6(*result.theory_connected);
    j["theory"] = std::move(theory);
    return j.dump(2) + "\n";
}

}  // namespace cfcon

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cfcon/cfc.hpp"

namespace cfcon {

enum class ExperimentMode {
    offset,           // p = (ln n + a) / n, connectivity only
    alpha,            // p = (ln n + alpha) / n, cfc upper bound
    hamilton_margin,  // p = (ln n + ln ln n + omega) / n, cfc upper bound
    regular,          // random r-regular graphs
};

std::string to_string(ExperimentMode mode);
ExperimentMode parse_mode(const std::string& name);

struct ExperimentSpec {
    int n = 0;
    ExperimentMode mode = ExperimentMode::offset;
    double param = 0.0;  // a, alpha, omega, or r
    int trials = 1;
    std::uint64_t master_seed = 0;
    int jobs = 1;  // worker threads; does not affect results
};

// Edge probability for the spec (not used by the regular mode).
double experiment_p(const ExperimentSpec& spec);

struct TrialRecord {
    int trial = 0;
    std::uint64_t seed = 0;
    int n = 0;
    double p = 0.0;
    long long edges = 0;
    bool connected = false;
    std::optional<bool> hamilton_found;  // regular mode
    std::string method;                  // cfc modes; empty when not run
    std::optional<int> bound;
    bool certified = false;
    std::string stage;  // construction stage reached, if the pipeline ran
};

struct Aggregates {
    int trials = 0;
    int connected = 0;
    double fraction_connected = 0.0;
    double mean_edges = 0.0;
    // cfc modes
    int certified_le2 = 0;
    double fraction_le2_among_connected = 0.0;
    double fraction_le2_overall = 0.0;
    // regular mode
    int hamilton_found = 0;
    double fraction_hamilton = 0.0;
    double fraction_le2_among_hamilton = 0.0;
};

struct ExperimentResult {
    ExperimentSpec spec;
    double p = 0.0;
    std::vector<TrialRecord> trials;  // indexed by trial number
    Aggregates aggregates;
    std::optional<double> theory_connected;  // e^{-e^{-a}} for the offset mode
};

// Recomputes aggregates from per-trial rows.
Aggregates aggregate(const ExperimentSpec& spec, const std::vector<TrialRecord>& rows);

// Trial i uses seed substream(master_seed, i). Results do not depend on
// `jobs` or on scheduling.
ExperimentResult run_connectivity_experiment(const ExperimentSpec& spec);
ExperimentResult run_cfc_experiment(const ExperimentSpec& spec);
ExperimentResult run_regular_experiment(const ExperimentSpec& spec);
ExperimentResult run_experiment(const ExperimentSpec& spec);

// CSV header: trial,seed,n,p,connected,method,bound,certified
void write_csv(std::ostream& out, const ExperimentResult& result);
std::string summary_json(const ExperimentResult& result);

}  // namespace cfcon

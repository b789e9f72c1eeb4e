#pragma once

#include "mobifem/scenario.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mobifem {

/// Thrown by the engine when a config, sweep spec, or trace fails validation.
class ValidationError : public std::runtime_error {
  public:
    ValidationError(std::string what, std::vector<Violation> violations)
        : std::runtime_error(std::move(what)), violations_(std::move(violations)) {}

    const std::vector<Violation>& violations() const { return violations_; }

  private:
    std::vector<Violation> violations_;
};

/// Distance grid over the BS-to-vehicle separation plus the Monte Carlo size.
struct SweepSpec {
    double distance_min_m = 100.0;
    double distance_max_m = 3000.0;
    double step_m = 100.0;
    int trials = 100;
    std::uint64_t seed = 42;
};

std::vector<Violation> validate(const SweepSpec& spec);

/// Per-distance averages for the direct and relayed architectures. SNIR
/// means are taken in the linear domain and reported in dB. The ce_* pair
/// is the macrocellular uplink spectral efficiency (MS -> BS directly vs
/// outside transceiver -> BS). outage_backhaul/outage_access carry the
/// per-hop means behind outage_relayed.
struct SweepResult {
    std::vector<double> distance_m;
    std::vector<double> snir_db_direct;
    std::vector<double> snir_db_femto_access;
    std::vector<double> snir_db_backhaul;
    std::vector<double> ce_bpshz_direct;
    std::vector<double> ce_bpshz_relayed;
    std::vector<double> outage_direct;
    std::vector<double> outage_relayed;
    std::vector<double> outage_backhaul;
    std::vector<double> outage_access;
    int trials = 0;
    double gamma_ms = 10.0;
    double gamma_transceiver = 7.0;
};

/// One trace sample's decision and the metrics of the active relayed path.
struct TraceRecord {
    double time_s = 0.0;
    BackhaulDecision decision;
    double snir_db = 0.0;     // wireless backhaul hop (NaN when no backhaul)
    double ce_bpshz = 0.0;    // end-to-end bottleneck efficiency
    double outage = 1.0;      // end-to-end outage
};

struct TraceResult {
    std::vector<TraceRecord> records;
    int backhaul_switches = 0;
};

/// Monte Carlo distance sweep. Deterministic for a fixed (config, spec):
/// all randomness derives from (seed, trial, link), grid points may be
/// evaluated on any number of threads (threads == 0 picks automatically)
/// and the result is bit-identical either way.
SweepResult run_sweep(const ScenarioConfig& config, const SweepSpec& spec,
                      unsigned threads = 0);

/// Replays the backhaul policy along a mobility trace, evaluating the
/// relayed link metrics per sample with the chosen backhaul.
TraceResult run_trace(const ScenarioConfig& config, const MobilityTrace& trace);

struct SweepSummary {
    // first grid distance where mean direct SNIR drops below gamma_ms
    std::optional<double> crossover_distance_m;
    double snir_improvement_db_min = 0.0; // femto access minus direct
    double snir_improvement_db_max = 0.0;
    double capacity_ratio_min = 0.0;      // relayed / direct uplink efficiency
    double capacity_ratio_max = 0.0;
    double outage_reduction_min = 0.0;    // direct minus relayed
    double outage_reduction_max = 0.0;
};

/// Headline comparisons across the grid. Throws std::domain_error on an
/// empty result.
SweepSummary summarize(const SweepResult& result);

} // namespace mobifem

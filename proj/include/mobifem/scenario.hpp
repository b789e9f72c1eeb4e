#pragma once

#include "mobifem/propagation.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mobifem {

enum class NodeRole { macro_bs, satellite, outside_transceiver, fap, ms };

struct NodeSpec {
    NodeRole role = NodeRole::ms;
    double tx_power_dbm = 0.0;
    double antenna_gain_dbi = 0.0;
    std::optional<double> height_m; // only meaningful for vehicle-mounted nodes
};

enum class VehicleClass { ship, slow_medium, high_speed };

enum class BackhaulChoice { macro, satellite, none };

/// Inputs to one backhaul-selection decision.
struct BackhaulContext {
    VehicleClass vehicle_class = VehicleClass::slow_medium;
    double speed_kmh = 0.0;
    bool macro_available = false;
    bool satellite_available = false;
    bool at_port = false; // ships only
    double speed_threshold_kmh = 120.0;
    double hysteresis_kmh = 10.0;
};

struct BackhaulDecision {
    BackhaulChoice choice = BackhaulChoice::none;
    std::string reason; // machine-readable rule id, e.g. "ship_at_sea_satellite"
};

/// Vehicle-class policy:
///  - ship: satellite backhaul; macro only while docked with coverage.
///  - slow/medium: macro when available, satellite as the fallback.
///  - high speed: above the speed threshold only satellite is eligible
///    (frequent macro handovers), below it macro is preferred. The
///    threshold carries a hysteresis band so noisy speed readings do not
///    flap the choice.
/// Returns choice == none only when no eligible network exists. Pure
/// function of (ctx, previous).
BackhaulDecision select_backhaul(const BackhaulContext& ctx,
                                 const std::optional<BackhaulDecision>& previous = {});

struct TraceSample {
    double time_s = 0.0;
    double distance_m = 0.0; // to the serving macro BS
    double speed_kmh = 0.0;
    bool macro_available = false;
    bool satellite_available = false;
    bool at_port = false;
};

/// Time-ordered mobility samples; times strictly increasing, distances > 0.
struct MobilityTrace {
    std::vector<TraceSample> samples;
};

/// Abstract satellite backhaul: no propagation model, just a fixed outage
/// and a fixed spectral efficiency.
struct SatelliteLink {
    double outage = 1e-2;
    double spectral_efficiency_bpshz = 1.0;
};

/// Receiver noise: thermal floor -174 dBm/Hz plus bandwidth and noise figure.
struct NoiseModel {
    double bandwidth_hz = 10e6;
    double noise_figure_db = 9.0;

    double noise_power_dbm() const;
    double noise_power_w() const;
};

/// A co-channel macro BS interfering with the direct macro->MS link.
/// position_m is its coordinate on the sweep axis (serving BS at 0).
struct MacroInterferer {
    double position_m = 0.0;
    double tx_power_dbm = 0.0;
    double height_m = 100.0;
};

struct ScenarioConfig {
    NodeSpec macro_bs{NodeRole::macro_bs, 61.76091259055681, 0.0, {}};       // 1.5 kW
    NodeSpec outside_transceiver{NodeRole::outside_transceiver, 33.0, 0.0, 2.0};
    NodeSpec fap{NodeRole::fap, 11.760912590556813, 0.0, 2.0};               // 15 mW
    NodeSpec ms{NodeRole::ms, 23.0, 0.0, {}};

    MacroPropagationParams macro;  // canonical BS and MS heights live here
    FemtoPropagationParams femto;
    double fap_ms_distance_m = 5.0;

    NoiseModel noise;
    std::vector<MacroInterferer> interferers;

    double gamma_ms = 10.0;          // linear SNIR threshold at the MS
    double gamma_transceiver = 7.0;  // linear SNIR threshold at the transceiver

    SatelliteLink satellite;

    // macro->MS vs macro->transceiver shadowing correlation, 0 = independent
    double shadowing_correlation = 0.0;

    VehicleClass vehicle_class = VehicleClass::slow_medium;
    double speed_threshold_kmh = 120.0;
    double hysteresis_kmh = 10.0;

    int trials = 100;
    std::uint64_t seed = 42;

    // default sweep grid, used by the CLI when no explicit grid is given
    double sweep_distance_min_m = 100.0;
    double sweep_distance_max_m = 3000.0;
    double sweep_step_m = 100.0;
};

/// Baseline parameter set: 1800 MHz carrier, 1.5 kW macro BS at 100 m,
/// 15 mW FAP 5 m from the MS, gamma 10 / 7, 20 dB penetration, 8 dB
/// shadowing, 100 trials.
ScenarioConfig default_config();

struct Violation {
    std::string field;
    std::string rule;
};

/// Invariant check; returns one entry per violated rule, empty when valid.
std::vector<Violation> validate(const ScenarioConfig& config);

const char* to_string(BackhaulChoice choice);
const char* to_string(VehicleClass vehicle_class);
std::optional<VehicleClass> vehicle_class_from_string(const std::string& name);

} // namespace mobifem

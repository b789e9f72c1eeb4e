#include "mobifem/scenario.hpp"

#include "mobifem/units.hpp"

#include <cmath>

namespace mobifem {

namespace {

BackhaulDecision decide_ship(const BackhaulContext& ctx) {
    if (ctx.at_port && ctx.macro_available) {
        return {BackhaulChoice::macro, "ship_at_port_macro"};
    }
    if (ctx.satellite_available) {
        return {BackhaulChoice::satellite, "ship_satellite"};
    }
    return {BackhaulChoice::none, "ship_no_network"};
}

BackhaulDecision decide_slow_medium(const BackhaulContext& ctx) {
    if (ctx.macro_available) {
        return {BackhaulChoice::macro, "slow_medium_macro_primary"};
    }
    if (ctx.satellite_available) {
        return {BackhaulChoice::satellite, "slow_medium_satellite_fallback"};
    }
    return {BackhaulChoice::none, "slow_medium_no_network"};
}

BackhaulDecision decide_high_speed(const BackhaulContext& ctx,
                                   const std::optional<BackhaulDecision>& previous) {
    // Hysteresis: a vehicle already on satellite sticks with it down to
    // threshold - h; one already on macro sticks with it up to threshold + h.
    double effective_threshold_kmh = ctx.speed_threshold_kmh;
    if (previous) {
        if (previous->choice == BackhaulChoice::satellite) {
            effective_threshold_kmh -= ctx.hysteresis_kmh;
        } else if (previous->choice == BackhaulChoice::macro) {
            effective_threshold_kmh += ctx.hysteresis_kmh;
        }
    }

    if (ctx.speed_kmh > effective_threshold_kmh) {
        if (ctx.satellite_available) {
            return {BackhaulChoice::satellite, "high_speed_satellite_only"};
        }
        // Macro stays ineligible above the threshold: handover churn would
        // defeat the point of choosing it.
        return {BackhaulChoice::none, "high_speed_no_eligible_network"};
    }
    if (ctx.macro_available) {
        return {BackhaulChoice::macro, "high_speed_below_threshold_macro"};
    }
    if (ctx.satellite_available) {
        return {BackhaulChoice::satellite, "high_speed_satellite_fallback"};
    }
    return {BackhaulChoice::none, "high_speed_no_network"};
}

void check(bool ok, const char* field, const char* rule, std::vector<Violation>& out) {
    if (!ok) {
        out.push_back({field, rule});
    }
}

} // namespace

BackhaulDecision select_backhaul(const BackhaulContext& ctx,
                                 const std::optional<BackhaulDecision>& previous) {
    switch (ctx.vehicle_class) {
    case VehicleClass::ship:
        return decide_ship(ctx);
    case VehicleClass::slow_medium:
        return decide_slow_medium(ctx);
    case VehicleClass::high_speed:
        return decide_high_speed(ctx, previous);
    }
    return {BackhaulChoice::none, "unknown_vehicle_class"};
}

double NoiseModel::noise_power_dbm() const {
    return -174.0 + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
}

double NoiseModel::noise_power_w() const {
    return dbm_to_watts(noise_power_dbm());
}

ScenarioConfig default_config() {
    return ScenarioConfig{};
}

std::vector<Violation> validate(const ScenarioConfig& c) {
    std::vector<Violation> v;

    check(c.macro.carrier_freq_mhz > 0.0, "macro_carrier_freq_mhz", "must be > 0", v);
    check(c.macro.bs_height_m > 0.0, "bs_height_m", "must be > 0", v);
    check(c.macro.ms_height_m > 0.0, "ms_height_m", "must be > 0", v);
    check(c.macro.shadowing_sigma_db >= 0.0, "shadowing_sigma_db", "must be >= 0", v);
    check(c.macro.penetration_loss_db >= 0.0, "penetration_loss_db", "must be >= 0", v);

    check(c.femto.carrier_freq_mhz > 0.0, "femto_carrier_freq_mhz", "must be > 0", v);
    check(c.femto.distance_decay_coeff > 0.0, "distance_decay_coeff", "must be > 0", v);
    check(c.femto.wall_count >= 0, "wall_count", "must be >= 0", v);
    check(c.fap_ms_distance_m > 0.0, "fap_ms_distance_m", "must be > 0", v);

    check(std::isfinite(c.macro_bs.tx_power_dbm), "macro_tx_power_dbm", "must be finite", v);
    check(std::isfinite(c.fap.tx_power_dbm), "fap_tx_power_dbm", "must be finite", v);
    check(std::isfinite(c.ms.tx_power_dbm), "ms_tx_power_dbm", "must be finite", v);
    check(std::isfinite(c.outside_transceiver.tx_power_dbm), "transceiver_tx_power_dbm",
          "must be finite", v);
    check(std::isfinite(c.macro_bs.antenna_gain_dbi), "macro_antenna_gain_dbi",
          "must be finite", v);
    check(std::isfinite(c.fap.antenna_gain_dbi), "fap_antenna_gain_dbi", "must be finite", v);
    check(std::isfinite(c.ms.antenna_gain_dbi), "ms_antenna_gain_dbi", "must be finite", v);
    check(std::isfinite(c.outside_transceiver.antenna_gain_dbi), "transceiver_antenna_gain_dbi",
          "must be finite", v);
    check(!c.outside_transceiver.height_m || *c.outside_transceiver.height_m > 0.0,
          "transceiver_height_m", "must be > 0", v);
    check(!c.fap.height_m || *c.fap.height_m > 0.0, "fap_height_m", "must be > 0", v);

    check(c.noise.bandwidth_hz > 0.0, "noise_bandwidth_hz", "must be > 0", v);
    check(std::isfinite(c.noise.noise_figure_db), "noise_figure_db", "must be finite", v);

    for (std::size_t i = 0; i < c.interferers.size(); ++i) {
        const auto& itf = c.interferers[i];
        const std::string field = "interferers[" + std::to_string(i) + "]";
        if (!std::isfinite(itf.position_m) || !std::isfinite(itf.tx_power_dbm) ||
            !(itf.height_m > 0.0)) {
            v.push_back({field, "position and power must be finite, height > 0"});
        }
    }

    check(c.gamma_ms > 0.0, "gamma_ms", "must be > 0", v);
    check(c.gamma_transceiver > 0.0, "gamma_transceiver", "must be > 0", v);

    check(c.satellite.outage >= 0.0 && c.satellite.outage <= 1.0, "satellite_outage",
          "must lie in [0, 1]", v);
    check(c.satellite.spectral_efficiency_bpshz >= 0.0,
          "satellite_spectral_efficiency_bpshz", "must be >= 0", v);

    check(c.shadowing_correlation >= -1.0 && c.shadowing_correlation <= 1.0,
          "shadowing_correlation", "must lie in [-1, 1]", v);

    check(c.speed_threshold_kmh > 0.0, "speed_threshold_kmh", "must be > 0", v);
    check(c.hysteresis_kmh >= 0.0, "hysteresis_kmh", "must be >= 0", v);

    check(c.trials >= 1, "trials", "must be >= 1", v);

    check(c.sweep_distance_min_m > 0.0, "sweep_distance_min_m", "must be > 0", v);
    check(c.sweep_distance_max_m > c.sweep_distance_min_m, "sweep_distance_max_m",
          "must exceed sweep_distance_min_m", v);
    check(c.sweep_step_m > 0.0, "sweep_step_m", "must be > 0", v);

    return v;
}

const char* to_string(BackhaulChoice choice) {
    switch (choice) {
    case BackhaulChoice::macro: return "macro";
    case BackhaulChoice::satellite: return "satellite";
    case BackhaulChoice::none: return "none";
    }
    return "none";
}

const char* to_string(VehicleClass vehicle_class) {
    switch (vehicle_class) {
    case VehicleClass::ship: return "ship";
    case VehicleClass::slow_medium: return "slow_medium";
    case VehicleClass::high_speed: return "high_speed";
    }
    return "slow_medium";
}

std::optional<VehicleClass> vehicle_class_from_string(const std::string& name) {
    if (name == "ship") return VehicleClass::ship;
    if (name == "slow_medium") return VehicleClass::slow_medium;
    if (name == "high_speed") return VehicleClass::high_speed;
    return std::nullopt;
}

} // namespace mobifem

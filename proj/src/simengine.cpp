#include "mobifem/simengine.hpp"

#include "mobifem/linkmetrics.hpp"
#include "mobifem/propagation.hpp"
#include "mobifem/rng.hpp"
#include "mobifem/units.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <thread>

namespace mobifem {

namespace {

// Interference paths are deterministic; they reuse the vehicular macro
// model without a shadowing draw and are clamped to 1 m separation so a
// grid point landing exactly on an interferer stays finite.
double interference_power_w(const ScenarioConfig& c, double vehicle_position_m) {
    double total_w = 0.0;
    for (const auto& itf : c.interferers) {
        const double separation_m =
            std::max(std::abs(vehicle_position_m - itf.position_m), 1.0);
        MacroPropagationParams p = c.macro;
        p.bs_height_m = itf.height_m;
        const double loss_db = macro_path_loss(p, separation_m / 1000.0, true, {});
        total_w += received_power_w(
            {itf.tx_power_dbm, loss_db, 0.0, c.ms.antenna_gain_dbi});
    }
    return total_w;
}

// Correlated shadowing pair for one trial: the macro->MS and the
// macro->transceiver paths cross the same obstruction environment.
struct ShadowPair {
    double ms_db;
    double transceiver_db;
};

ShadowPair draw_shadowing(const ScenarioConfig& c, std::uint64_t seed, std::uint64_t trial) {
    const double sigma = c.macro.shadowing_sigma_db;
    if (sigma == 0.0) {
        return {0.0, 0.0};
    }
    const double z_ms = standard_normal(seed, trial, kLinkMacroToMs);
    const double z_tr = standard_normal(seed, trial, kLinkMacroToTransceiver);
    const double rho = c.shadowing_correlation;
    return {sigma * z_ms, sigma * (rho * z_ms + std::sqrt(1.0 - rho * rho) * z_tr)};
}

// All quantities of one Monte Carlo trial at one BS-to-vehicle distance.
struct TrialMetrics {
    double snir_direct;
    double snir_access;
    double snir_backhaul;
    double ce_uplink_direct;
    double ce_uplink_relayed;
    double outage_direct;
    double outage_backhaul;
    double outage_access;
};

TrialMetrics evaluate_trial(const ScenarioConfig& c, double distance_m,
                            double interference_w, ShadowPair shadow) {
    const double noise_w = c.noise.noise_power_w();
    const double distance_km = distance_m / 1000.0;

    MacroPropagationParams ms_link = c.macro;
    MacroPropagationParams transceiver_link = c.macro;
    transceiver_link.ms_height_m =
        c.outside_transceiver.height_m.value_or(c.macro.ms_height_m);

    // Downlink losses; uplink reuses them (reciprocal channel, same trial).
    const double loss_direct_db =
        macro_path_loss(ms_link, distance_km, true, {shadow.ms_db});
    const double loss_backhaul_db =
        macro_path_loss(transceiver_link, distance_km, false, {shadow.transceiver_db});
    const double loss_access_db =
        femto_path_loss(c.femto, c.fap_ms_distance_m, false);

    const double direct_w = received_power_w({c.macro_bs.tx_power_dbm, loss_direct_db,
                                              c.macro_bs.antenna_gain_dbi,
                                              c.ms.antenna_gain_dbi});
    const double backhaul_w = received_power_w({c.macro_bs.tx_power_dbm, loss_backhaul_db,
                                                c.macro_bs.antenna_gain_dbi,
                                                c.outside_transceiver.antenna_gain_dbi});
    const double access_w = received_power_w({c.fap.tx_power_dbm, loss_access_db,
                                              c.fap.antenna_gain_dbi,
                                              c.ms.antenna_gain_dbi});

    TrialMetrics m{};
    m.snir_direct = snir({direct_w, 0.0, interference_w, noise_w});
    m.snir_backhaul = snir({backhaul_w, 0.0, 0.0, noise_w});
    m.snir_access = snir({access_w, 0.0, 0.0, noise_w});

    // Uplink budgets of the macrocellular segment: MS -> BS from inside the
    // vehicle versus the roof transceiver -> BS.
    const double ul_direct_w = received_power_w({c.ms.tx_power_dbm, loss_direct_db,
                                                 c.ms.antenna_gain_dbi,
                                                 c.macro_bs.antenna_gain_dbi});
    const double ul_relayed_w = received_power_w(
        {c.outside_transceiver.tx_power_dbm, loss_backhaul_db,
         c.outside_transceiver.antenna_gain_dbi, c.macro_bs.antenna_gain_dbi});
    m.ce_uplink_direct = spectral_efficiency(snir({ul_direct_w, 0.0, 0.0, noise_w}));
    m.ce_uplink_relayed = spectral_efficiency(snir({ul_relayed_w, 0.0, 0.0, noise_w}));

    m.outage_direct = outage_probability(m.snir_direct, {c.gamma_ms});
    m.outage_backhaul = outage_probability(m.snir_backhaul, {c.gamma_transceiver});
    m.outage_access = outage_probability(m.snir_access, {c.gamma_ms});
    return m;
}

void run_indices_on_threads(std::size_t count, unsigned threads,
                            const std::function<void(std::size_t)>& body) {
    unsigned n = threads == 0 ? std::thread::hardware_concurrency() : threads;
    n = std::max(1u, std::min<unsigned>(n, static_cast<unsigned>(count)));
    if (n == 1) {
        for (std::size_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < count; i += n) {
                body(i);
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
}

void require_valid_config(const ScenarioConfig& config) {
    if (auto violations = validate(config); !violations.empty()) {
        throw ValidationError("invalid scenario config", std::move(violations));
    }
}

} // namespace

std::vector<Violation> validate(const SweepSpec& spec) {
    std::vector<Violation> v;
    if (!(spec.distance_min_m > 0.0)) {
        v.push_back({"distance_min_m", "must be > 0"});
    }
    if (!(spec.distance_max_m > spec.distance_min_m)) {
        v.push_back({"distance_max_m", "must exceed distance_min_m"});
    }
    if (!(spec.step_m > 0.0)) {
        v.push_back({"step_m", "must be > 0"});
    }
    if (spec.trials < 1) {
        v.push_back({"trials", "must be >= 1"});
    }
    return v;
}

SweepResult run_sweep(const ScenarioConfig& config, const SweepSpec& spec,
                      unsigned threads) {
    require_valid_config(config);
    if (auto violations = validate(spec); !violations.empty()) {
        throw ValidationError("invalid sweep spec", std::move(violations));
    }

    const auto point_count = static_cast<std::size_t>(
        std::floor((spec.distance_max_m - spec.distance_min_m) / spec.step_m + 1e-9)) + 1;
    const int trials = spec.trials;

    SweepResult r;
    r.trials = trials;
    r.gamma_ms = config.gamma_ms;
    r.gamma_transceiver = config.gamma_transceiver;
    r.distance_m.resize(point_count);
    r.snir_db_direct.resize(point_count);
    r.snir_db_femto_access.resize(point_count);
    r.snir_db_backhaul.resize(point_count);
    r.ce_bpshz_direct.resize(point_count);
    r.ce_bpshz_relayed.resize(point_count);
    r.outage_direct.resize(point_count);
    r.outage_relayed.resize(point_count);
    r.outage_backhaul.resize(point_count);
    r.outage_access.resize(point_count);

    // Grid points are independent; each one accumulates its trials in a
    // fixed order, so the reduction is bit-stable under any thread count.
    run_indices_on_threads(point_count, threads, [&](std::size_t i) {
        const double distance_m = spec.distance_min_m + static_cast<double>(i) * spec.step_m;
        const double interference_w = interference_power_w(config, distance_m);

        double sum_snir_direct = 0.0;
        double sum_snir_access = 0.0;
        double sum_snir_backhaul = 0.0;
        double sum_ce_direct = 0.0;
        double sum_ce_relayed = 0.0;
        double sum_outage_direct = 0.0;
        double sum_outage_relayed = 0.0;
        double sum_outage_backhaul = 0.0;
        double sum_outage_access = 0.0;

        for (int t = 0; t < trials; ++t) {
            const auto shadow = draw_shadowing(config, spec.seed,
                                               static_cast<std::uint64_t>(t));
            const auto m = evaluate_trial(config, distance_m, interference_w, shadow);
            sum_snir_direct += m.snir_direct;
            sum_snir_access += m.snir_access;
            sum_snir_backhaul += m.snir_backhaul;
            sum_ce_direct += m.ce_uplink_direct;
            sum_ce_relayed += m.ce_uplink_relayed;
            sum_outage_direct += m.outage_direct;
            sum_outage_relayed += relay_outage(m.outage_backhaul, m.outage_access);
            sum_outage_backhaul += m.outage_backhaul;
            sum_outage_access += m.outage_access;
        }

        const double inv = 1.0 / static_cast<double>(trials);
        r.distance_m[i] = distance_m;
        r.snir_db_direct[i] = linear_to_db(sum_snir_direct * inv);
        r.snir_db_femto_access[i] = linear_to_db(sum_snir_access * inv);
        r.snir_db_backhaul[i] = linear_to_db(sum_snir_backhaul * inv);
        r.ce_bpshz_direct[i] = sum_ce_direct * inv;
        r.ce_bpshz_relayed[i] = sum_ce_relayed * inv;
        r.outage_direct[i] = sum_outage_direct * inv;
        r.outage_relayed[i] = sum_outage_relayed * inv;
        r.outage_backhaul[i] = sum_outage_backhaul * inv;
        r.outage_access[i] = sum_outage_access * inv;
    });

    return r;
}

TraceResult run_trace(const ScenarioConfig& config, const MobilityTrace& trace) {
    require_valid_config(config);

    std::vector<Violation> violations;
    if (trace.samples.empty()) {
        violations.push_back({"samples", "trace must contain at least one sample"});
    }
    for (std::size_t i = 0; i < trace.samples.size(); ++i) {
        const auto& s = trace.samples[i];
        const std::string field = "samples[" + std::to_string(i) + "]";
        if (i > 0 && !(s.time_s > trace.samples[i - 1].time_s)) {
            violations.push_back({field + ".time_s", "must be strictly increasing"});
        }
        if (!(s.distance_m > 0.0)) {
            violations.push_back({field + ".distance_m", "must be > 0"});
        }
        if (s.speed_kmh < 0.0) {
            violations.push_back({field + ".speed_kmh", "must be >= 0"});
        }
    }
    if (!violations.empty()) {
        throw ValidationError("invalid mobility trace", std::move(violations));
    }

    TraceResult result;
    result.records.reserve(trace.samples.size());

    std::optional<BackhaulDecision> previous;
    for (const auto& sample : trace.samples) {
        BackhaulContext ctx;
        ctx.vehicle_class = config.vehicle_class;
        ctx.speed_kmh = sample.speed_kmh;
        ctx.macro_available = sample.macro_available;
        ctx.satellite_available = sample.satellite_available;
        ctx.at_port = sample.at_port;
        ctx.speed_threshold_kmh = config.speed_threshold_kmh;
        ctx.hysteresis_kmh = config.hysteresis_kmh;

        const BackhaulDecision decision = select_backhaul(ctx, previous);
        if (previous && previous->choice != decision.choice) {
            ++result.backhaul_switches;
        }
        previous = decision;

        TraceRecord rec;
        rec.time_s = sample.time_s;
        rec.decision = decision;

        if (decision.choice == BackhaulChoice::none) {
            rec.snir_db = std::numeric_limits<double>::quiet_NaN();
            rec.ce_bpshz = 0.0;
            rec.outage = 1.0;
            result.records.push_back(rec);
            continue;
        }

        const double interference_w = interference_power_w(config, sample.distance_m);
        double sum_snir_backhaul = 0.0;
        double sum_ce = 0.0;
        double sum_outage = 0.0;
        for (int t = 0; t < config.trials; ++t) {
            const auto shadow = draw_shadowing(config, config.seed,
                                               static_cast<std::uint64_t>(t));
            const auto m = evaluate_trial(config, sample.distance_m, interference_w, shadow);
            const double ce_access = spectral_efficiency(m.snir_access);
            if (decision.choice == BackhaulChoice::macro) {
                const double ce_backhaul = spectral_efficiency(m.snir_backhaul);
                sum_snir_backhaul += m.snir_backhaul;
                sum_ce += std::min(ce_backhaul, ce_access);
                sum_outage += relay_outage(m.outage_backhaul, m.outage_access);
            } else {
                sum_ce += std::min(config.satellite.spectral_efficiency_bpshz, ce_access);
                sum_outage += relay_outage(config.satellite.outage, m.outage_access);
            }
        }
        const double inv = 1.0 / static_cast<double>(config.trials);
        if (decision.choice == BackhaulChoice::macro) {
            rec.snir_db = linear_to_db(sum_snir_backhaul * inv);
        } else {
            // Abstract satellite link: report the SNIR a Shannon channel of
            // the configured fixed efficiency would have.
            rec.snir_db = linear_to_db(
                std::exp2(config.satellite.spectral_efficiency_bpshz) - 1.0);
        }
        rec.ce_bpshz = sum_ce * inv;
        rec.outage = sum_outage * inv;
        result.records.push_back(rec);
    }

    return result;
}

SweepSummary summarize(const SweepResult& result) {
    if (result.distance_m.empty()) {
        throw std::domain_error("empty sweep result");
    }

    SweepSummary s;
    const double gamma_db = linear_to_db(result.gamma_ms);

    s.snir_improvement_db_min = std::numeric_limits<double>::infinity();
    s.snir_improvement_db_max = -std::numeric_limits<double>::infinity();
    s.capacity_ratio_min = std::numeric_limits<double>::infinity();
    s.capacity_ratio_max = -std::numeric_limits<double>::infinity();
    s.outage_reduction_min = std::numeric_limits<double>::infinity();
    s.outage_reduction_max = -std::numeric_limits<double>::infinity();

    for (std::size_t i = 0; i < result.distance_m.size(); ++i) {
        if (!s.crossover_distance_m && result.snir_db_direct[i] < gamma_db) {
            s.crossover_distance_m = result.distance_m[i];
        }
        const double improvement = result.snir_db_femto_access[i] - result.snir_db_direct[i];
        s.snir_improvement_db_min = std::min(s.snir_improvement_db_min, improvement);
        s.snir_improvement_db_max = std::max(s.snir_improvement_db_max, improvement);

        const double ratio = result.ce_bpshz_relayed[i] / result.ce_bpshz_direct[i];
        s.capacity_ratio_min = std::min(s.capacity_ratio_min, ratio);
        s.capacity_ratio_max = std::max(s.capacity_ratio_max, ratio);

        const double reduction = result.outage_direct[i] - result.outage_relayed[i];
        s.outage_reduction_min = std::min(s.outage_reduction_min, reduction);
        s.outage_reduction_max = std::max(s.outage_reduction_max, reduction);
    }
    return s;
}

} // namespace mobifem

#include "mobifem/propagation.hpp"

#include "mobifem/rng.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mobifem {

namespace {

void require_positive(double v, const char* name) {
    if (!(v > 0.0)) {
        throw std::domain_error(std::string(name) + " must be > 0, got " + std::to_string(v));
    }
}

void require_nonnegative(double v, const char* name) {
    if (!(v >= 0.0)) {
        throw std::domain_error(std::string(name) + " must be >= 0, got " + std::to_string(v));
    }
}

} // namespace

double ms_antenna_correction(double carrier_freq_mhz, double ms_height_m) {
    require_positive(carrier_freq_mhz, "carrier_freq_mhz");
    require_positive(ms_height_m, "ms_height_m");
    const double lf = std::log10(carrier_freq_mhz);
    return (1.1 * lf - 0.7) * ms_height_m - (1.56 * lf - 0.8);
}

double macro_path_loss(const MacroPropagationParams& params, double distance_km,
                       bool indoor_vehicle, ShadowingSample shadow) {
    require_positive(params.carrier_freq_mhz, "carrier_freq_mhz");
    require_positive(params.bs_height_m, "bs_height_m");
    require_positive(params.ms_height_m, "ms_height_m");
    require_nonnegative(params.shadowing_sigma_db, "shadowing_sigma_db");
    require_nonnegative(params.penetration_loss_db, "penetration_loss_db");
    require_positive(distance_km, "distance_km");

    const double lf = std::log10(params.carrier_freq_mhz);
    const double lhb = std::log10(params.bs_height_m);
    double loss_db = 36.55 + 26.16 * lf - 3.82 * lhb
                   - ms_antenna_correction(params.carrier_freq_mhz, params.ms_height_m)
                   + (44.9 - 6.55 * lhb) * std::log10(distance_km)
                   + shadow.offset_db;
    if (indoor_vehicle) {
        loss_db += params.penetration_loss_db;
    }
    return loss_db;
}

double femto_path_loss(const FemtoPropagationParams& params, double distance_m,
                       bool through_wall) {
    require_positive(params.carrier_freq_mhz, "carrier_freq_mhz");
    require_positive(params.distance_decay_coeff, "distance_decay_coeff");
    if (params.wall_count < 0) {
        throw std::domain_error("wall_count must be >= 0");
    }
    require_positive(distance_m, "distance_m");
    if (through_wall && params.wall_count == 0) {
        throw std::domain_error("through_wall requires wall_count >= 1");
    }

    double loss_db = 20.0 * std::log10(params.carrier_freq_mhz)
                   + params.distance_decay_coeff * std::log10(distance_m) - 28.0;
    if (through_wall) {
        const double n = static_cast<double>(params.wall_count);
        loss_db += 4.0 * n * n;
    }
    return loss_db;
}

ShadowingSample sample_shadowing(double sigma_db, std::uint64_t seed,
                                 std::uint64_t trial_index, std::uint64_t link_id) {
    require_nonnegative(sigma_db, "sigma_db");
    if (sigma_db == 0.0) {
        return ShadowingSample{0.0};
    }
    return ShadowingSample{sigma_db * standard_normal(seed, trial_index, link_id)};
}

} // namespace mobifem

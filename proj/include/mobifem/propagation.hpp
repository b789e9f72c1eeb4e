#pragma once

#include <cstdint>

namespace mobifem {

/// Macrocell link parameters (Okumura-Hata style urban model).
struct MacroPropagationParams {
    double carrier_freq_mhz = 1800.0;   // center frequency, MHz
    double bs_height_m = 100.0;         // macro BS antenna height, m
    double ms_height_m = 1.5;           // receiving antenna height, m
    double shadowing_sigma_db = 8.0;    // lognormal shadowing std dev, dB
    double penetration_loss_db = 20.0;  // vehicle body loss, dB
};

/// Femtocell link parameters (indoor distance-power model).
struct FemtoPropagationParams {
    double carrier_freq_mhz = 1800.0;   // center frequency, MHz
    double distance_decay_coeff = 30.0; // distance-power coefficient (dimensionless)
    int wall_count = 0;                 // walls between MS and FAP
};

/// One shadowing realisation in the dB domain.
struct ShadowingSample {
    double offset_db = 0.0;
};

// Link identifiers for the counter-based RNG. Draws depend only on
// (seed, trial, link), so the same trial sees the same shadowing at every
// sweep distance: common random numbers across the grid.
enum LinkId : std::uint64_t {
    kLinkMacroToMs = 1,
    kLinkMacroToTransceiver = 2,
};

/// Mobile antenna height correction a(h_m) in dB:
///   a(h_m) = (1.1 log10 f - 0.7) h_m - (1.56 log10 f - 0.8)
/// Throws std::domain_error on non-positive inputs.
double ms_antenna_correction(double carrier_freq_mhz, double ms_height_m);

/// Macrocell path loss in dB at distance_km kilometers:
///   L = 36.55 + 26.16 log10 f - 3.82 log10 h_b - a(h_m)
///       + (44.9 - 6.55 log10 h_b) log10 d + shadow [+ L_pen if indoor_vehicle]
/// Throws std::domain_error on distance_km <= 0 or invalid params.
double macro_path_loss(const MacroPropagationParams& params, double distance_km,
                       bool indoor_vehicle, ShadowingSample shadow = {});

/// Femtocell path loss in dB at distance_m meters:
///   L = 20 log10 f + N log10 d1 - 28 [+ 4 n^2 if through_wall]
/// Throws std::domain_error on distance_m <= 0, invalid params, or
/// through_wall with wall_count == 0.
double femto_path_loss(const FemtoPropagationParams& params, double distance_m,
                       bool through_wall);

/// Zero-mean normal dB offset with std dev sigma_db, fully determined by
/// (seed, trial_index, link_id). sigma_db == 0 yields exactly 0.
/// Throws std::domain_error on negative sigma.
ShadowingSample sample_shadowing(double sigma_db, std::uint64_t seed,
                                 std::uint64_t trial_index, std::uint64_t link_id);

} // namespace mobifem

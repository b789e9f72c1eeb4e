#pragma once

#include <span>

namespace mobifem {

/// Received powers at one receiver, all in watts.
struct LinkPowers {
    double desired_w = 0.0;            // wanted signal
    double femto_interference_w = 0.0; // sum over interfering femtocells
    double macro_interference_w = 0.0; // sum over interfering macrocells
    double noise_w = 1.0;              // total noise, must stay > 0
};

/// Reception threshold as a linear SNIR ratio.
struct OutageThreshold {
    double gamma_linear = 10.0;
};

/// Transmit side of a link plus the propagation loss between the ends.
struct LinkBudget {
    double tx_power_dbm = 0.0;
    double path_loss_db = 0.0;
    double tx_gain_dbi = 0.0;
    double rx_gain_dbi = 0.0;
};

/// Received power in watts: tx_power + gains - path loss, then dBm -> W.
double received_power_w(const LinkBudget& budget);

/// S / (I_f + I_m + N), dimensionless. Throws std::domain_error if the
/// LinkPowers invariants are violated (negative power or noise_w <= 0).
double snir(const LinkPowers& powers);

/// Shannon spectral efficiency log2(1 + snir) in bps/Hz.
double spectral_efficiency(double snir_linear);

/// Outage of a link whose desired power fades exponentially around its
/// mean: 1 - exp(-gamma / mean_snir). Throws on mean_snir <= 0.
double outage_probability(double mean_snir_linear, OutageThreshold threshold);

/// Fraction of samples with SNIR below the threshold. Throws on empty input.
double outage_probability_empirical(std::span<const double> snir_samples,
                                    OutageThreshold threshold);

/// End-to-end outage of a two-hop relay: the connection is down if either
/// hop is down. Symmetric, with (0,p) -> p and (1,x) -> 1 exact.
double relay_outage(double backhaul_outage, double access_outage);

} // namespace mobifem

#include "mobifem/linkmetrics.hpp"

#include "mobifem/units.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mobifem {

double received_power_w(const LinkBudget& budget) {
    const double rx_dbm = budget.tx_power_dbm + budget.tx_gain_dbi
                        + budget.rx_gain_dbi - budget.path_loss_db;
    if (!std::isfinite(rx_dbm)) {
        throw std::domain_error("link budget fields must be finite");
    }
    return dbm_to_watts(rx_dbm);
}

double snir(const LinkPowers& powers) {
    if (powers.desired_w < 0.0 || powers.femto_interference_w < 0.0 ||
        powers.macro_interference_w < 0.0) {
        throw std::domain_error("received powers must be >= 0");
    }
    if (!(powers.noise_w > 0.0)) {
        throw std::domain_error("noise_w must be > 0");
    }
    return powers.desired_w /
           (powers.femto_interference_w + powers.macro_interference_w + powers.noise_w);
}

double spectral_efficiency(double snir_linear) {
    if (snir_linear < 0.0) {
        throw std::domain_error("snir must be >= 0");
    }
    return std::log2(1.0 + snir_linear);
}

double outage_probability(double mean_snir_linear, OutageThreshold threshold) {
    if (!(mean_snir_linear > 0.0)) {
        throw std::domain_error("mean snir must be > 0");
    }
    if (!(threshold.gamma_linear > 0.0)) {
        throw std::domain_error("gamma must be > 0");
    }
    return 1.0 - std::exp(-threshold.gamma_linear / mean_snir_linear);
}

double outage_probability_empirical(std::span<const double> snir_samples,
                                    OutageThreshold threshold) {
    if (snir_samples.empty()) {
        throw std::domain_error("empty snir sample sequence");
    }
    std::size_t below = 0;
    for (double s : snir_samples) {
        if (s < threshold.gamma_linear) {
            ++below;
        }
    }
    return static_cast<double>(below) / static_cast<double>(snir_samples.size());
}

double relay_outage(double backhaul_outage, double access_outage) {
    if (!(backhaul_outage >= 0.0 && backhaul_outage <= 1.0) ||
        !(access_outage >= 0.0 && access_outage <= 1.0)) {
        throw std::domain_error("outage probabilities must lie in [0, 1]");
    }
    // 1 - (1-a)(1-b) = hi + lo*(1-hi). Ordering the operands keeps the
    // result bitwise symmetric and the (0,p) and (1,x) identities exact.
    const double hi = std::max(backhaul_outage, access_outage);
    const double lo = std::min(backhaul_outage, access_outage);
    return hi + lo * (1.0 - hi);
}

} // namespace mobifem

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mobifem/linkmetrics.hpp"
#include "mobifem/rng.hpp"
#include "mobifem/units.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace mobifem;

namespace {

double uniform_in(std::uint64_t& state, double lo, double hi) {
    state = splitmix64(state);
    return lo + (hi - lo) * u64_to_unit(state);
}

} // namespace

TEST_CASE("received power follows dB arithmetic") {
    // 1.5 kW macro BS through 134.03 dB of loss
    const double w = received_power_w({61.76, 134.03, 0.0, 0.0});
    CHECK(watts_to_dbm(w) == doctest::Approx(-72.27).epsilon(1e-12));
    CHECK(w == doctest::Approx(5.929253245799994e-11).epsilon(1e-12));

    // 15 mW FAP through 58.07 dB
    CHECK(watts_to_dbm(received_power_w({11.76, 58.07, 0.0, 0.0})) ==
          doctest::Approx(-46.31).epsilon(1e-12));

    // zero loss returns the transmit power; gains add in dB
    CHECK(received_power_w({30.0, 0.0, 0.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(watts_to_dbm(received_power_w({30.0, 10.0, 3.0, 2.0})) ==
          doctest::Approx(25.0).epsilon(1e-12));
}

TEST_CASE("dBm/watt round trip is tight") {
    std::uint64_t state = 1;
    for (int i = 0; i < 500; ++i) {
        const double dbm = uniform_in(state, -150.0, 70.0);
        CHECK(std::abs(watts_to_dbm(dbm_to_watts(dbm)) - dbm) <
              1e-12 * std::max(1.0, std::abs(dbm)));
        const double w = dbm_to_watts(dbm);
        CHECK(std::abs(dbm_to_watts(watts_to_dbm(w)) - w) < 1e-12 * w);
    }
}

TEST_CASE("snir is the desired power over interference plus noise") {
    CHECK(snir({1e-9, 0.0, 0.0, 1e-10}) == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(snir({1e-9, 1e-10, 4e-10, 5e-10}) == doctest::Approx(1.0).epsilon(1e-12));

    // invariant under a common power scale
    const LinkPowers p{3e-9, 2e-10, 5e-10, 1e-10};
    const LinkPowers doubled{6e-9, 4e-10, 1e-9, 2e-10};
    CHECK(snir(doubled) == doctest::Approx(snir(p)).epsilon(1e-12));

    CHECK_THROWS_AS(snir({1e-9, 0.0, 0.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(snir({-1e-9, 0.0, 0.0, 1e-10}), std::domain_error);
}

TEST_CASE("spectral efficiency is Shannon log2(1 + snir)") {
    CHECK(spectral_efficiency(0.0) == 0.0);
    CHECK(spectral_efficiency(1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(spectral_efficiency(10.0) == doctest::Approx(3.4594316186372973).epsilon(1e-13));
    CHECK_THROWS_AS(spectral_efficiency(-0.1), std::domain_error);
}

TEST_CASE("outage probability closed form") {
    CHECK(outage_probability(20.0, {10.0}) ==
          doctest::Approx(0.3934693402873666).epsilon(1e-13));
    CHECK(outage_probability(10.0, {10.0}) ==
          doctest::Approx(0.6321205588285577).epsilon(1e-13));
    // gamma -> 0+ drives outage to 0
    CHECK(outage_probability(10.0, {1e-12}) < 1e-11);
    CHECK_THROWS_AS(outage_probability(0.0, {10.0}), std::domain_error);
    CHECK_THROWS_AS(outage_probability(-5.0, {10.0}), std::domain_error);
}

TEST_CASE("outage and efficiency move consistently with mean snir") {
    double prev_c = -1.0;
    double prev_p = 2.0;
    for (double snir_lin : {0.5, 1.0, 2.0, 5.0, 10.0, 50.0, 200.0}) {
        const double c = spectral_efficiency(snir_lin);
        const double p = outage_probability(snir_lin, {10.0});
        CHECK(c > prev_c);
        CHECK(p < prev_p);
        prev_c = c;
        prev_p = p;
    }
}

TEST_CASE("empirical outage counts sub-threshold samples") {
    const std::vector<double> samples{5.0, 15.0, 25.0};
    CHECK(outage_probability_empirical(samples, {10.0}) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(outage_probability_empirical(samples, {5.0}) == 0.0); // 5 is not < 5
    CHECK(outage_probability_empirical(samples, {100.0}) == 1.0);
    CHECK_THROWS_AS(outage_probability_empirical({}, {10.0}), std::domain_error);
}

TEST_CASE("empirical outage over exponential snir converges to the closed form") {
    // desired power exponential around its mean makes snir exponential too
    const int n = 10000;
    const double mean_snir = 25.0;
    std::vector<double> samples;
    samples.reserve(n);
    for (int t = 0; t < n; ++t) {
        samples.push_back(mean_snir * unit_exponential(7, t, 1));
    }
    for (double gamma : {2.5, 12.5, 25.0, 50.0}) {
        const double closed = outage_probability(mean_snir, {gamma});
        const double empirical = outage_probability_empirical(samples, {gamma});
        const double stderr_bin = std::sqrt(closed * (1.0 - closed) / n);
        CHECK(std::abs(empirical - closed) <= 3.0 * stderr_bin);
    }
}

TEST_CASE("relay outage algebra") {
    CHECK(relay_outage(0.1, 0.2) == doctest::Approx(0.28).epsilon(1e-15));
    CHECK(relay_outage(1.0, 0.37) == 1.0);
    CHECK(relay_outage(0.42, 1.0) == 1.0);

    std::uint64_t state = 3;
    for (int i = 0; i < 300; ++i) {
        const double p = uniform_in(state, 0.0, 1.0);
        CHECK(relay_outage(0.0, p) == p); // perfect backhaul passes access through
        CHECK(relay_outage(p, 0.0) == p);

        const double q = uniform_in(state, 0.0, 1.0);
        const double r = relay_outage(p, q);
        CHECK(r == relay_outage(q, p));
        CHECK(r >= std::max(p, q));
        CHECK(r <= p + q);
        CHECK(r <= 1.0);
        CHECK(r == doctest::Approx(1.0 - (1.0 - p) * (1.0 - q)).epsilon(1e-12));
    }

    CHECK_THROWS_AS(relay_outage(-0.1, 0.5), std::domain_error);
    CHECK_THROWS_AS(relay_outage(0.5, 1.1), std::domain_error);
}

TEST_CASE("relay outage is monotone in each argument") {
    std::uint64_t state = 11;
    for (int i = 0; i < 200; ++i) {
        const double a = uniform_in(state, 0.0, 1.0);
        const double b = uniform_in(state, 0.0, 1.0);
        const double bump = uniform_in(state, 0.0, 1.0 - b);
        CHECK(relay_outage(a, b + bump) >= relay_outage(a, b));
        CHECK(relay_outage(b + bump, a) >= relay_outage(b, a));
    }
}

#include "awggn/secrecy.hpp"

#include "awggn/capacity.hpp"
#include "awggn/numerics.hpp"
#include "awggn/random.hpp"

#include <doctest.h>

#include <cmath>

using namespace awggn;

namespace {

// Root of the unclamped AWGGN secrecy rate in snr_sd, by bisection.
double bisect_threshold(double beta_sd, double beta_se, double snr_se) {
    auto unclamped = [&](double snr_sd) {
        return 0.5 * std::log1p(snr_sd) + gap(beta_sd, Units::nats) - 0.5 * std::log1p(snr_se) -
               gap(beta_se, Units::nats);
    };
    double lo = 0.0, hi = 1.0;
    if (unclamped(lo) > 0.0) return 0.0;
    while (unclamped(hi) <= 0.0) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (unclamped(mid) > 0.0 ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

SecrecyScenario random_scenario(RandomStream& rng) {
    return {db_to_linear(-20.0 + 50.0 * rng.uniform()), db_to_linear(-20.0 + 50.0 * rng.uniform()),
            0.2 + 4.8 * rng.uniform(), 0.2 + 4.8 * rng.uniform()};
}

}  // namespace

TEST_CASE("AWGN secrecy rate worked examples") {
    CHECK(secrecy_rate_awgn(2.0, 2.0) == 0.0);
    CHECK(secrecy_rate_awgn(3.0, 1.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(secrecy_rate_awgn(0.0, 1.0) == 0.0);
    CHECK(secrecy_rate_awgn(3.0, 1.0, Units::nats) == doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-14));
    CHECK_THROWS_AS(secrecy_rate_awgn(-1.0, 1.0), DomainError);
}

TEST_CASE("AWGGN secrecy rate reduces to the AWGN rate") {
    const double snr_se = db_to_linear(-5.0);
    for (double db = -10.0; db <= 5.0; db += 0.25) {
        const double rate = secrecy_rate_awggn({db_to_linear(db), snr_se, 2.0, 2.0});
        CHECK(rate == secrecy_rate_awgn(db_to_linear(db), snr_se));
        if (db <= -5.0)
            CHECK(rate == 0.0);
        else
            CHECK(rate > 0.0);
    }
}

TEST_CASE("equal shapes cancel exactly") {
    RandomStream rng(8);
    for (int i = 0; i < 2000; ++i) {
        SecrecyScenario s = random_scenario(rng);
        s.beta_se = s.beta_sd;
        CHECK(secrecy_rate_awggn(s) == secrecy_rate_awgn(s.snr_sd, s.snr_se));
        CHECK(secrecy_positive(s) == (s.snr_sd > s.snr_se));
    }
}

TEST_CASE("mixed shapes just below the eavesdropper SNR") {
    // Legitimate link at −5.1 dB, eavesdropper at −5 dB.
    const SecrecyScenario s{db_to_linear(-5.1), db_to_linear(-5.0), 1.5, 0.8};
    const double unclamped =
        0.5 * std::log1p(s.snr_sd) - 0.5 * std::log1p(s.snr_se) + gap(1.5, Units::nats) - gap(0.8, Units::nats);
    CHECK(unclamped < 0.0);
    CHECK(secrecy_positive(s) == (unclamped > 0.0));
    CHECK(secrecy_rate_awggn(s) == 0.0);
}

TEST_CASE("positivity condition matches the rate") {
    CHECK_FALSE(secrecy_positive({1.0, 1.0, 2.0, 2.0}));
    RandomStream rng(21);
    for (int i = 0; i < 10000; ++i) {
        const SecrecyScenario s = random_scenario(rng);
        CHECK(secrecy_positive(s) == (secrecy_rate_awggn(s) > 0.0));
    }
}

TEST_CASE("rate is nondecreasing and continuous in the legitimate SNR") {
    const double snr_se = 0.7;
    double previous = 0.0;
    for (double snr = 0.0; snr <= 10.0; snr += 0.01) {
        const double rate = secrecy_rate_awggn({snr, snr_se, 0.9, 1.4});
        CHECK(rate >= previous);
        CHECK(rate - previous < 0.01);
        previous = rate;
    }
}

TEST_CASE("as-printed condition differs from the derived one") {
    // Equal shapes: both reduce to snr_sd > snr_se.
    CHECK(secrecy_positive_as_printed({2.0, 1.0, 1.3, 1.3}));
    CHECK_FALSE(secrecy_positive_as_printed({1.0, 2.0, 1.3, 1.3}));
    // Find a scenario on which the two forms disagree.
    bool disagree = false;
    RandomStream rng(3);
    for (int i = 0; i < 2000 && !disagree; ++i) {
        const SecrecyScenario s = random_scenario(rng);
        disagree = secrecy_positive(s) != secrecy_positive_as_printed(s);
    }
    CHECK(disagree);
}

TEST_CASE("threshold worked examples") {
    CHECK(secrecy_threshold(1.3, 1.3, 0.4) == doctest::Approx(0.4).epsilon(1e-14));
    // f(1) > f(2): a Laplacian destination tolerates a weaker link.
    CHECK(secrecy_threshold(1.0, 2.0, 1.0) < 1.0);
    const double expected = std::pow(2.0, 2.0 * gap(1.0, Units::bits)) * 2.0 - 1.0;
    CHECK(secrecy_threshold(2.0, 1.0, 1.0) == doctest::Approx(expected).epsilon(1e-13));
    CHECK(secrecy_threshold(2.0, 1.0, 1.0) == doctest::Approx(1.31145).epsilon(1e-5));
    CHECK(secrecy_threshold(2.0, 1.0, 1.0) == doctest::Approx(bisect_threshold(2.0, 1.0, 1.0)).epsilon(1e-12));
    // Clamped at zero when the destination's gap dominates.
    CHECK(secrecy_threshold(0.3, 2.0, 0.01) == 0.0);
}

TEST_CASE("threshold separates zero and positive rates") {
    constexpr double eps = 1e-6;
    RandomStream rng(55);
    for (int i = 0; i < 10000; ++i) {
        const SecrecyScenario s = random_scenario(rng);
        const double t = secrecy_threshold(s.beta_sd, s.beta_se, s.snr_se);
        if (t > 0.0) {
            CHECK(secrecy_rate_awggn({t * (1.0 + eps), s.snr_se, s.beta_sd, s.beta_se}) > 0.0);
            CHECK(secrecy_rate_awggn({t * (1.0 - eps), s.snr_se, s.beta_sd, s.beta_se}) == 0.0);
        } else {
            CHECK(secrecy_rate_awggn({0.0, s.snr_se, s.beta_sd, s.beta_se}) > 0.0);
        }
    }
}

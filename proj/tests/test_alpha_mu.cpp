#include "awggn/alpha_mu.hpp"

#include "awggn/numerics.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace awggn;
using namespace awggn::testing;

namespace {
const std::vector<double> kParamGrid = {0.5, 1.0, 2.0, 4.0};
}

TEST_CASE("pdf worked examples") {
    CHECK(AlphaMuFading(2.0, 1.0, 1.0).pdf(1.0) == doctest::Approx(2.0 * std::exp(-1.0)).epsilon(1e-14));
    CHECK(AlphaMuFading(2.0, 1.0, 1.0).pdf(1.0) == doctest::Approx(0.73575888).epsilon(1e-8));
    CHECK(AlphaMuFading(1.0, 2.0, 1.0).pdf(1.0) == doctest::Approx(4.0 * std::exp(-2.0)).epsilon(1e-14));
    CHECK(AlphaMuFading(1.0, 2.0, 1.0).pdf(1.0) == doctest::Approx(0.54134113).epsilon(1e-8));
    CHECK(AlphaMuFading(2.0, 3.0, 1.7).pdf(0.0) == 0.0);
    CHECK(AlphaMuFading(1.0, 1.0, 1.0).pdf(0.0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(AlphaMuFading(2.0, 1.0).pdf(-0.1), DomainError);
}

TEST_CASE("moment worked examples") {
    CHECK(AlphaMuFading(2.0, 1.0, 1.0).moment(2.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(AlphaMuFading(2.0, 1.0, 1.0).moment(1.0) == doctest::Approx(std::sqrt(std::numbers::pi) / 2.0).epsilon(1e-14));
    CHECK(AlphaMuFading(2.0, 3.0, 1.0).moment(4.0) == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
    for (double a : kParamGrid)
        for (double m : kParamGrid) CHECK(AlphaMuFading(a, m, 1.9).moment(a) == doctest::Approx(std::pow(1.9, a)).epsilon(1e-13));
    CHECK_THROWS_AS(AlphaMuFading(2.0, 1.0).moment(0.0), DomainError);
}

TEST_CASE("mu equals E^2{h^alpha} / V{h^alpha} for the analytic moments") {
    for (double a : kParamGrid) {
        for (double m : kParamGrid) {
            const AlphaMuFading law(a, m, 0.8);
            const double first = law.moment(a);
            const double second = law.moment(2.0 * a);
            CHECK(first * first / (second - first * first) == doctest::Approx(m).epsilon(1e-11));
        }
    }
}

TEST_CASE("special cases") {
    CHECK(AlphaMuFading::rayleigh() == AlphaMuFading(2.0, 1.0, 1.0));
    CHECK(AlphaMuFading::nakagami(1.0) == AlphaMuFading::rayleigh());
    CHECK(AlphaMuFading::weibull(2.0) == AlphaMuFading::rayleigh());
    CHECK(AlphaMuFading::nakagami(3.5, 2.0) == AlphaMuFading(2.0, 3.5, 2.0));
    CHECK(AlphaMuFading::weibull(1.3) == AlphaMuFading(1.3, 1.0, 1.0));
    CHECK_THROWS_AS(AlphaMuFading::nakagami(0.0), DomainError);
    CHECK_THROWS_AS(AlphaMuFading::weibull(-2.0), DomainError);
    CHECK_THROWS_AS(AlphaMuFading(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(AlphaMuFading(1.0, -1.0), DomainError);
    CHECK_THROWS_AS(AlphaMuFading(1.0, 1.0, 0.0), DomainError);
}

TEST_CASE("unit_power normalizes the second moment") {
    for (double a : kParamGrid)
        for (double m : kParamGrid) CHECK(AlphaMuFading::unit_power(a, m).moment(2.0) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("pdf integrates to one and reproduces the moments") {
    const QuadratureSpec spec{1e-12, 0.0, 500};
    for (double a : kParamGrid) {
        for (double m : kParamGrid) {
            CAPTURE(a);
            CAPTURE(m);
            const AlphaMuFading law(a, m, 1.0);
            auto weighted = [&](double k) {
                return integrate(
                    [&](double h) {
                        const double p = law.pdf(h);
                        return p == 0.0 ? 0.0 : std::pow(h, k) * p;
                    },
                    0.0, kInf, {1.0}, spec);
            };
            CHECK(std::abs(weighted(0.0) - 1.0) < 1e-8);
            for (double k : {1.0, 2.0, a, 2.0 * a}) CHECK(relative_error(weighted(k), law.moment(k)) < 1e-7);
        }
    }
}

TEST_CASE("sampling") {
    SUBCASE("determinism") {
        const AlphaMuFading law(1.5, 0.7, 1.2);
        RandomStream a(9), b(9);
        CHECK(law.sample(a, 10) == law.sample(b, 10));
        CHECK(law.sample(4, 999, 8, 1) == law.sample(4, 999, 8, 8));
    }
    SUBCASE("Rayleigh power") {
        auto hs = AlphaMuFading(2.0, 1.0, 1.0).sample(12, 100000, 8);
        for (double& h : hs) h = h * h;
        const auto m = mean_with_error(hs);
        CHECK(std::abs(m.mean - 1.0) < 4.0 * m.std_error);
    }
    SUBCASE("moment estimate of mu") {
        for (double mu : kParamGrid) {
            CAPTURE(mu);
            const double alpha = 1.7;
            auto hs = AlphaMuFading(alpha, mu, 1.0).sample(13, 100000, 8);
            for (double& h : hs) h = std::pow(h, alpha);
            const auto m = mean_with_error(hs);
            double var = 0.0;
            for (double x : hs) var += (x - m.mean) * (x - m.mean);
            var /= static_cast<double>(hs.size() - 1);
            CHECK(relative_error(m.mean * m.mean / var, mu) < 0.05);
        }
    }
    SUBCASE("KS against the incomplete-gamma CDF") {
        for (double a : kParamGrid) {
            for (double mu : kParamGrid) {
                const AlphaMuFading law(a, mu, 1.0);
                const auto hs = law.sample(14, 10000, 4);
                CHECK(ks_statistic(hs, [&](double h) { return law.cdf(h); }) < ks_critical_1pct(hs.size()));
            }
        }
    }
}

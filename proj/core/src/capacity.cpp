#include "awggn/capacity.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace awggn {

namespace {

double gap_nats(double beta) {
    if (!std::isfinite(beta) || beta <= 0.0) throw DomainError("gap: shape beta must be finite and positive");
    // The Gaussian is its own equal-variance reference.
    if (beta == 2.0) return 0.0;
    const double log_arg = 2.0 * std::log(beta) + std::log(std::numbers::pi) + (1.0 - 2.0 / beta) +
                           log_gamma(3.0 / beta) - std::numbers::ln2 - 3.0 * log_gamma(1.0 / beta);
    return 0.5 * log_arg;
}

void check_snr(double snr, const char* what) {
    if (std::isnan(snr) || snr < 0.0) throw DomainError(std::string(what) + ": SNR must be nonnegative");
}

CapacityBounds make_bounds(double lower_nats, double beta, Units units) {
    const double lower = from_nats(lower_nats, units);
    return {lower, lower + from_nats(gap_nats(beta), units), units};
}

}  // namespace

ChannelConfig::ChannelConfig(double signal_power, GGNoise noise) : signal_power(signal_power), noise(noise) {
    if (!std::isfinite(signal_power) || signal_power < 0.0)
        throw DomainError("ChannelConfig: signal power must be finite and nonnegative");
}

double ChannelConfig::snr() const { return signal_power / noise.variance(); }

double gap(double beta, Units units) { return from_nats(gap_nats(beta), units); }

double awgn_capacity(double snr, Units units) {
    check_snr(snr, "awgn_capacity");
    return from_nats(0.5 * std::log1p(snr), units);
}

CapacityBounds awggn_bounds(const ChannelConfig& config, Units units) {
    return make_bounds(0.5 * std::log1p(config.snr()), config.noise.beta(), units);
}

CapacityBounds conditional_bounds(const ChannelConfig& config, double h, Units units) {
    if (std::isnan(h) || h < 0.0) throw DomainError("conditional_bounds: fading gain must be nonnegative");
    return make_bounds(0.5 * std::log1p(config.snr() * h * h), config.noise.beta(), units);
}

double ergodic_awgn_capacity(double snr, const AlphaMuFading& fading, const QuadratureSpec& spec, Units units) {
    check_snr(snr, "ergodic_awgn_capacity");
    if (snr == 0.0) return 0.0;
    const double h_root = fading.h_root();
    // Integrate over v = h / ĥ so the bulk of the mass sits near v = 1.
    auto integrand = [&](double v) {
        const double h = h_root * v;
        const double density = fading.pdf(h);
        if (density == 0.0) return 0.0;
        return 0.5 * std::log1p(snr * h * h) * density * h_root;
    };
    const double value = integrate(integrand, 0.0, kInf, {1.0}, spec);
    return from_nats(value, units);
}

CapacityBounds ergodic_bounds(double snr, const AlphaMuFading& fading, double beta, const QuadratureSpec& spec,
                              Units units) {
    const double lower_nats = ergodic_awgn_capacity(snr, fading, spec, Units::nats);
    return make_bounds(lower_nats, beta, units);
}

}  // namespace awggn

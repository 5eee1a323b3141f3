#include "awggn/secrecy.hpp"

#include "awggn/capacity.hpp"
#include "awggn/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace awggn {

namespace {

void check_snr(double snr) {
    if (std::isnan(snr) || snr < 0.0 || std::isinf(snr)) throw DomainError("secrecy: SNR must be finite and nonnegative");
}

// ln of (left side / right side) of the existence condition; equals twice the
// unclamped secrecy rate in nats. The SNR and gap differences are formed
// separately so equal shapes cancel exactly.
double log_condition_ratio(const SecrecyScenario& s) {
    s.validate();
    const double snr_term = std::log1p(s.snr_sd) - std::log1p(s.snr_se);
    const double gap_term = 2.0 * (gap(s.beta_sd, Units::nats) - gap(s.beta_se, Units::nats));
    return snr_term + gap_term;
}

double printed_log_factor(double beta) {
    return 2.0 * std::log(beta) + (1.0 - 1.0 / beta) + log_gamma(3.0 / beta) - 3.0 * log_gamma(1.0 / beta);
}

}  // namespace

void SecrecyScenario::validate() const {
    check_snr(snr_sd);
    check_snr(snr_se);
    if (!std::isfinite(beta_sd) || beta_sd <= 0.0) throw DomainError("secrecy: beta_sd must be positive");
    if (!std::isfinite(beta_se) || beta_se <= 0.0) throw DomainError("secrecy: beta_se must be positive");
}

double secrecy_rate_awgn(double snr_sd, double snr_se, Units units) {
    return secrecy_rate_awggn({snr_sd, snr_se, 2.0, 2.0}, units);
}

double secrecy_rate_awggn(const SecrecyScenario& scenario, Units units) {
    const double ratio = log_condition_ratio(scenario);
    return ratio > 0.0 ? from_nats(0.5 * ratio, units) : 0.0;
}

bool secrecy_positive(const SecrecyScenario& scenario) { return log_condition_ratio(scenario) > 0.0; }

bool secrecy_positive_as_printed(const SecrecyScenario& scenario) {
    scenario.validate();
    const double left = printed_log_factor(scenario.beta_sd) + std::log1p(scenario.snr_sd);
    const double right = printed_log_factor(scenario.beta_se) + std::log1p(scenario.snr_se);
    return left > right;
}

double secrecy_threshold(double beta_sd, double beta_se, double snr_se) {
    SecrecyScenario{0.0, snr_se, beta_sd, beta_se}.validate();
    const double exponent = 2.0 * (gap(beta_se, Units::nats) - gap(beta_sd, Units::nats)) + std::log1p(snr_se);
    return std::max(0.0, std::expm1(exponent));
}

}  // namespace awggn

#pragma once

#include "awggn/units.hpp"

namespace awggn {

/// Legitimate (source→destination) and eavesdropper (source→eavesdropper)
/// links, each with its own SNR (linear) and GG noise shape.
struct SecrecyScenario {
    double snr_sd;
    double snr_se;
    double beta_sd;
    double beta_se;

    /// Throws DomainError on negative SNRs or nonpositive shapes.
    void validate() const;
};

/// {½ log(1 + snr_sd) − ½ log(1 + snr_se)}⁺.
double secrecy_rate_awgn(double snr_sd, double snr_se, Units units = Units::bits);

/// {½ log(1 + snr_sd) + f(β_sd) − ½ log(1 + snr_se) − f(β_se)}⁺, the
/// difference of the two links' capacity upper bounds. This is a bound
/// difference, not a proven secrecy capacity for non-Gaussian wiretap channels.
double secrecy_rate_awggn(const SecrecyScenario& scenario, Units units = Units::bits);

/// True iff secrecy_rate_awggn is positive, evaluated as
///   2^{2 f(β_sd)} (1 + snr_sd) > 2^{2 f(β_se)} (1 + snr_se).
bool secrecy_positive(const SecrecyScenario& scenario);

/// The existence condition with the e^{1 − 1/β} factor as it is commonly
/// printed:
///   β_sd² e^{1−1/β_sd} Γ(3/β_sd) / Γ(1/β_sd)³ (1 + snr_sd)
///     > β_se² e^{1−1/β_se} Γ(3/β_se) / Γ(1/β_se)³ (1 + snr_se).
/// It disagrees with secrecy_positive whenever β_sd ≠ β_se; kept for comparison.
bool secrecy_positive_as_printed(const SecrecyScenario& scenario);

/// Legitimate-link SNR at which the AWGGN secrecy rate leaves zero:
///   2^{2(f(β_se) − f(β_sd))} (1 + snr_se) − 1, clamped at 0.
/// Linear SNR, regardless of units.
double secrecy_threshold(double beta_sd, double beta_se, double snr_se);

}  // namespace awggn

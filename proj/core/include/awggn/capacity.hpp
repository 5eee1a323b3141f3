#pragma once

#include "awggn/alpha_mu.hpp"
#include "awggn/gg_noise.hpp"
#include "awggn/numerics.hpp"
#include "awggn/units.hpp"

namespace awggn {

/// Lower and upper capacity bounds, in bits or nats per real channel use.
struct CapacityBounds {
    double lower = 0.0;
    double upper = 0.0;
    Units units = Units::bits;

    double gap() const { return upper - lower; }
};

/// Transmit power and additive noise of a real scalar channel Y = X + N.
struct ChannelConfig {
    double signal_power;
    GGNoise noise;

    ChannelConfig(double signal_power, GGNoise noise);

    /// P / Var(N).
    double snr() const;
};

/// Constant capacity gap between the AWGGN upper bound and AWGN capacity at
/// equal noise variance:
///
///   f(β) = ½ ln(β² π e^{1−2/β} Γ(3/β) / (2 Γ(1/β)³))
///
/// This equals h(Gaussian) − h(GG_β) at any common variance, so it is zero at
/// β = 2 and positive elsewhere.
double gap(double beta, Units units = Units::bits);

/// ½ log(1 + snr).
double awgn_capacity(double snr, Units units = Units::bits);

/// AWGN capacity below, AWGN capacity plus gap(β) above.
CapacityBounds awggn_bounds(const ChannelConfig& config, Units units = Units::bits);

/// Bounds for a known fading gain h: the signal power becomes P h².
CapacityBounds conditional_bounds(const ChannelConfig& config, double h, Units units = Units::bits);

/// E_h{½ log(1 + snr · h²)} under α-μ fading, by adaptive quadrature against
/// the fading density. With a unit-power law (E h² = 1) snr is the average
/// received SNR.
double ergodic_awgn_capacity(double snr, const AlphaMuFading& fading, const QuadratureSpec& spec = {},
                             Units units = Units::bits);

/// Fading-averaged bounds. The gap does not depend on h, so the upper bound is
/// the ergodic AWGN capacity plus gap(β).
CapacityBounds ergodic_bounds(double snr, const AlphaMuFading& fading, double beta, const QuadratureSpec& spec = {},
                              Units units = Units::bits);

}  // namespace awggn

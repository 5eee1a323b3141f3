#pragma once

#include "awggn/random.hpp"
#include "awggn/units.hpp"

#include <cstdint>
#include <vector>

namespace awggn {

/// Generalized Gaussian noise law with density
///
///   f(n) = β / (2 s Γ(1/β)) · exp(−|n − m|^β / s^β)
///
/// β = 2 is Gaussian with variance s²/2, β = 1 is Laplace. Smaller β gives a
/// sharper peak and heavier tails.
class GGNoise {
public:
    /// Throws DomainError unless beta, scale > 0 and all arguments are finite.
    GGNoise(double beta, double scale, double mean = 0.0);

    /// Law of shape `beta` with the given variance.
    static GGNoise with_variance(double beta, double variance, double mean = 0.0);

    double beta() const noexcept { return beta_; }
    double scale() const noexcept { return scale_; }
    double mean() const noexcept { return mean_; }

    double pdf(double n) const;
    double log_pdf(double n) const;

    /// P(N <= n).
    double cdf(double n) const;

    /// P(|N − mean| > distance).
    double two_sided_tail(double distance) const;

    /// Smallest distance d with P(|N − mean| > d) <= mass.
    double tail_radius(double mass) const;

    /// s² Γ(3/β) / Γ(1/β).
    double variance() const;

    /// Differential entropy 1/β + ln(2 s Γ(1/β) / β); independent of the mean.
    double entropy(Units units = Units::nats) const;

    /// mean + S · s · G^{1/β}, S a fair sign and G ~ Gamma(1/β, 1).
    double draw(RandomStream& stream) const;

    std::vector<double> sample(RandomStream& stream, std::size_t count) const;

    /// Chunked, thread-count independent sampling (see sample_chunked).
    std::vector<double> sample(std::uint64_t seed, std::size_t count, std::size_t chunks,
                               std::size_t threads = 1) const;

    bool operator==(const GGNoise&) const = default;

private:
    double beta_;
    double scale_;
    double mean_;
    double log_norm_;  // ln(β / (2 s Γ(1/β)))
};

/// ln(Γ(3/β) / Γ(1/β)).
double log_gamma_ratio_3_1(double beta);

}  // namespace awggn

#pragma once

#include "awggn/random.hpp"

#include <cstdint>
#include <vector>

namespace awggn {

/// α-μ fading envelope with density
///
///   f(h) = α μ^μ h^{αμ−1} / (ĥ^{αμ} Γ(μ)) · exp(−μ h^α / ĥ^α),   h >= 0,
///
/// where ĥ = (E h^α)^{1/α} and μ = E²{h^α} / V{h^α}. Rayleigh is (2, 1),
/// Nakagami-m is (2, m) and Weibull-k is (k, 1).
class AlphaMuFading {
public:
    AlphaMuFading(double alpha, double mu, double h_root = 1.0);

    /// ĥ chosen so that E{h²} = 1.
    static AlphaMuFading unit_power(double alpha, double mu);

    static AlphaMuFading rayleigh(double h_root = 1.0) { return {2.0, 1.0, h_root}; }
    static AlphaMuFading nakagami(double m, double h_root = 1.0);
    static AlphaMuFading weibull(double k, double h_root = 1.0);

    double alpha() const noexcept { return alpha_; }
    double mu() const noexcept { return mu_; }
    double h_root() const noexcept { return h_root_; }

    double pdf(double h) const;
    double log_pdf(double h) const;

    /// Regularized lower incomplete gamma P(μ, μ (h/ĥ)^α).
    double cdf(double h) const;

    /// E{h^k} = ĥ^k Γ(μ + k/α) / (μ^{k/α} Γ(μ)).
    double moment(double k) const;

    /// ĥ (G/μ)^{1/α} with G ~ Gamma(μ, 1).
    double draw(RandomStream& stream) const;

    std::vector<double> sample(RandomStream& stream, std::size_t count) const;
    std::vector<double> sample(std::uint64_t seed, std::size_t count, std::size_t chunks,
                               std::size_t threads = 1) const;

    bool operator==(const AlphaMuFading&) const = default;

private:
    double alpha_;
    double mu_;
    double h_root_;
    double log_norm_;  // ln(α μ^μ / (ĥ^{αμ} Γ(μ)))
};

}  // namespace awggn

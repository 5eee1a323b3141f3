#include "awggn/alpha_mu.hpp"

#include "awggn/numerics.hpp"

#include <cmath>

namespace awggn {

AlphaMuFading::AlphaMuFading(double alpha, double mu, double h_root) : alpha_(alpha), mu_(mu), h_root_(h_root) {
    if (!std::isfinite(alpha) || alpha <= 0.0) throw DomainError("AlphaMuFading: alpha must be finite and positive");
    if (!std::isfinite(mu) || mu <= 0.0) throw DomainError("AlphaMuFading: mu must be finite and positive");
    if (!std::isfinite(h_root) || h_root <= 0.0) throw DomainError("AlphaMuFading: h_root must be finite and positive");
    log_norm_ = std::log(alpha) + mu * std::log(mu) - alpha * mu * std::log(h_root) - log_gamma(mu);
}

AlphaMuFading AlphaMuFading::unit_power(double alpha, double mu) {
    // Solve ĥ² Γ(μ + 2/α) / (μ^{2/α} Γ(μ)) = 1 for ĥ.
    const AlphaMuFading unscaled(alpha, mu, 1.0);
    const double log_h_root = std::log(mu) / alpha + 0.5 * (log_gamma(mu) - log_gamma(mu + 2.0 / alpha));
    return AlphaMuFading(unscaled.alpha(), unscaled.mu(), std::exp(log_h_root));
}

AlphaMuFading AlphaMuFading::nakagami(double m, double h_root) {
    if (!std::isfinite(m) || m <= 0.0) throw DomainError("nakagami: m must be positive");
    return {2.0, m, h_root};
}

AlphaMuFading AlphaMuFading::weibull(double k, double h_root) {
    if (!std::isfinite(k) || k <= 0.0) throw DomainError("weibull: k must be positive");
    return {k, 1.0, h_root};
}

double AlphaMuFading::log_pdf(double h) const {
    if (std::isnan(h) || h < 0.0) throw DomainError("AlphaMuFading::pdf: gain must be nonnegative");
    if (std::isinf(h)) return -kInf;
    if (h == 0.0) {
        const double order = alpha_ * mu_ - 1.0;
        if (order > 0.0) return -kInf;
        if (order == 0.0) return log_norm_;
        return kInf;
    }
    const double log_ratio = std::log(h / h_root_);
    return log_norm_ + (alpha_ * mu_ - 1.0) * std::log(h) - mu_ * std::exp(alpha_ * log_ratio);
}

double AlphaMuFading::pdf(double h) const { return std::exp(log_pdf(h)); }

double AlphaMuFading::cdf(double h) const {
    if (std::isnan(h)) throw DomainError("AlphaMuFading::cdf: argument is NaN");
    if (h <= 0.0) return 0.0;
    return gamma_p(mu_, mu_ * std::pow(h / h_root_, alpha_));
}

double AlphaMuFading::moment(double k) const {
    if (!std::isfinite(k) || k <= 0.0) throw DomainError("AlphaMuFading::moment: order must be positive");
    const double r = k / alpha_;
    return std::exp(k * std::log(h_root_) + log_gamma(mu_ + r) - r * std::log(mu_) - log_gamma(mu_));
}

double AlphaMuFading::draw(RandomStream& stream) const {
    const double log_g = stream.log_gamma_variate(mu_);
    return h_root_ * std::exp((log_g - std::log(mu_)) / alpha_);
}

std::vector<double> AlphaMuFading::sample(RandomStream& stream, std::size_t count) const {
    std::vector<double> out(count);
    for (double& x : out) x = draw(stream);
    return out;
}

std::vector<double> AlphaMuFading::sample(std::uint64_t seed, std::size_t count, std::size_t chunks,
                                          std::size_t threads) const {
    return sample_chunked(count, seed, chunks, threads, [this](RandomStream& s) { return draw(s); });
}

}  // namespace awggn

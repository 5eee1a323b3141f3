#include "awggn/gg_noise.hpp"

#include "awggn/numerics.hpp"

#include <cmath>
#include <numbers>

namespace awggn {

double log_gamma_ratio_3_1(double beta) { return log_gamma(3.0 / beta) - log_gamma(1.0 / beta); }

GGNoise::GGNoise(double beta, double scale, double mean) : beta_(beta), scale_(scale), mean_(mean) {
    if (!std::isfinite(beta) || beta <= 0.0) throw DomainError("GGNoise: shape beta must be finite and positive");
    if (!std::isfinite(scale) || scale <= 0.0) throw DomainError("GGNoise: scale must be finite and positive");
    if (!std::isfinite(mean)) throw DomainError("GGNoise: mean must be finite");
    log_norm_ = std::log(beta) - std::log(2.0 * scale) - log_gamma(1.0 / beta);
}

GGNoise GGNoise::with_variance(double beta, double variance, double mean) {
    if (!std::isfinite(beta) || beta <= 0.0) throw DomainError("with_variance: shape beta must be finite and positive");
    if (!std::isfinite(variance) || variance <= 0.0)
        throw DomainError("with_variance: target variance must be finite and positive");
    const double scale = std::exp(0.5 * (std::log(variance) - log_gamma_ratio_3_1(beta)));
    return GGNoise(beta, scale, mean);
}

double GGNoise::log_pdf(double n) const {
    if (!std::isfinite(n)) throw DomainError("GGNoise::log_pdf: argument must be finite");
    return log_norm_ - std::pow(std::abs(n - mean_) / scale_, beta_);
}

double GGNoise::pdf(double n) const { return std::exp(log_pdf(n)); }

double GGNoise::cdf(double n) const {
    if (std::isnan(n)) throw DomainError("GGNoise::cdf: argument is NaN");
    const double z = std::pow(std::abs(n - mean_) / scale_, beta_);
    const double upper_half = 0.5 * gamma_q(1.0 / beta_, z);
    return n >= mean_ ? 1.0 - upper_half : upper_half;
}

double GGNoise::two_sided_tail(double distance) const {
    if (std::isnan(distance) || distance < 0.0) throw DomainError("two_sided_tail: distance must be nonnegative");
    return gamma_q(1.0 / beta_, std::pow(distance / scale_, beta_));
}

double GGNoise::tail_radius(double mass) const {
    return scale_ * std::pow(gamma_q_inverse(1.0 / beta_, mass), 1.0 / beta_);
}

double GGNoise::variance() const { return std::exp(2.0 * std::log(scale_) + log_gamma_ratio_3_1(beta_)); }

double GGNoise::entropy(Units units) const { return from_nats(1.0 / beta_ - log_norm_, units); }

double GGNoise::draw(RandomStream& stream) const {
    const double magnitude = std::exp(stream.log_gamma_variate(1.0 / beta_) / beta_);
    return mean_ + stream.sign() * scale_ * magnitude;
}

std::vector<double> GGNoise::sample(RandomStream& stream, std::size_t count) const {
    std::vector<double> out(count);
    for (double& x : out) x = draw(stream);
    return out;
}

std::vector<double> GGNoise::sample(std::uint64_t seed, std::size_t count, std::size_t chunks,
                                    std::size_t threads) const {
    return sample_chunked(count, seed, chunks, threads, [this](RandomStream& s) { return draw(s); });
}

}  // namespace awggn

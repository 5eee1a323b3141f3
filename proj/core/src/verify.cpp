#include "awggn/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace awggn {

void SimConfig::validate() const {
    if (samples < 1) throw DomainError("SimConfig: samples must be positive");
    if (chunks < 1) throw DomainError("SimConfig: chunks must be positive");
    if (threads < 1) throw DomainError("SimConfig: threads must be positive");
    quadrature.validate();
}

void DensityGrid::validate() const {
    if (points.size() != values.size()) throw DomainError("DensityGrid: points and values differ in length");
    if (points.size() < 2) throw DomainError("DensityGrid: need at least two points");
    for (std::size_t i = 1; i < points.size(); ++i)
        if (!(points[i] > points[i - 1])) throw DomainError("DensityGrid: points must be strictly increasing");
    for (double v : values)
        if (!(v >= 0.0) || !std::isfinite(v)) throw DomainError("DensityGrid: values must be finite and nonnegative");
    if (!(truncation_mass >= 0.0)) throw DomainError("DensityGrid: truncation mass must be nonnegative");
}

namespace {

// Composite Simpson rule on possibly uneven abscissae: each pair of adjacent
// intervals is integrated through the interpolating parabola. A trailing odd
// interval gets the trapezoidal rule.
template <typename F>
double composite_simpson(const std::vector<double>& x, const std::vector<double>& y, F&& transform) {
    const std::size_t n = x.size();
    double total = 0.0;
    std::size_t i = 0;
    for (; i + 2 < n; i += 2) {
        const double h0 = x[i + 1] - x[i];
        const double h1 = x[i + 2] - x[i + 1];
        const double f0 = transform(y[i]), f1 = transform(y[i + 1]), f2 = transform(y[i + 2]);
        total += (h0 + h1) / 6.0 *
                 ((2.0 - h1 / h0) * f0 + (h0 + h1) * (h0 + h1) / (h0 * h1) * f1 + (2.0 - h0 / h1) * f2);
    }
    if (i + 1 < n) total += 0.5 * (x[i + 1] - x[i]) * (transform(y[i]) + transform(y[i + 1]));
    return total;
}

}  // namespace

double DensityGrid::mass() const {
    return composite_simpson(points, values, [](double f) { return f; });
}

namespace {

Estimate mean_and_error(const std::vector<double>& terms) {
    const double n = static_cast<double>(terms.size());
    double mean = 0.0;
    for (double t : terms) mean += t;
    mean /= n;
    double ss = 0.0;
    for (double t : terms) ss += (t - mean) * (t - mean);
    const double variance = terms.size() > 1 ? ss / (n - 1.0) : 0.0;
    return {mean, std::sqrt(variance / n)};
}

// z with P(|Z| > z) = mass for a standard normal Z.
double normal_two_sided_radius(double mass) {
    double lo = 0.0, hi = 40.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (2.0 * normal_upper_tail(mid) > mass)
            lo = mid;
        else
            hi = mid;
    }
    return hi;
}

// Standard normal variable range that carries all but ~1e-17 of the mass.
constexpr double kGaussianSupport = 8.5;

}  // namespace

Estimate mc_entropy(const GGNoise& law, const SimConfig& config) {
    config.validate();
    std::vector<double> terms = law.sample(config.seed, config.samples, config.chunks, config.threads);
    for (double& x : terms) x = -law.log_pdf(x);
    return mean_and_error(terms);
}

Estimate mc_ergodic_capacity(double snr, const AlphaMuFading& fading, const SimConfig& config) {
    config.validate();
    if (std::isnan(snr) || snr < 0.0) throw DomainError("mc_ergodic_capacity: SNR must be nonnegative");
    std::vector<double> terms = fading.sample(config.seed, config.samples, config.chunks, config.threads);
    for (double& h : terms) h = awgn_capacity(snr * h * h, config.units);
    return mean_and_error(terms);
}

DensityGrid output_density(const ChannelConfig& config, const OutputDensityOptions& options) {
    const double power = config.signal_power;
    if (!(power > 0.0)) throw DomainError("output_density: signal power must be positive");
    const GGNoise& noise = config.noise;
    const double input_std = std::sqrt(power);
    const double noise_std = std::sqrt(noise.variance());

    const double half_tail = 0.5 * options.tail_mass;
    const double noise_radius = noise.tail_radius(half_tail);
    const double input_radius = input_std * normal_two_sided_radius(half_tail);
    const double half_width = noise_radius + input_radius;

    const double spacing = std::min(input_std, noise_std) / options.points_per_scale;
    std::size_t intervals = static_cast<std::size_t>(std::ceil(2.0 * half_width / spacing));
    intervals = std::clamp<std::size_t>(intervals + (intervals % 2), 2, options.max_points - 1);
    if (intervals % 2) --intervals;
    const std::size_t n = intervals + 1;
    const double step = 2.0 * half_width / static_cast<double>(intervals);

    DensityGrid grid;
    grid.points.resize(n);
    grid.values.resize(n);
    grid.truncation_mass = noise.two_sided_tail(noise_radius) + 2.0 * normal_upper_tail(input_radius / input_std);
    const double centre = noise.mean();
    const std::ptrdiff_t mid = static_cast<std::ptrdiff_t>(intervals / 2);
    for (std::size_t i = 0; i < n; ++i)
        grid.points[i] = centre + static_cast<double>(static_cast<std::ptrdiff_t>(i) - mid) * step;

    const double log_norm = -0.5 * std::log(2.0 * std::numbers::pi);
    parallel_for(n, options.threads, [&](std::size_t i) {
        const double y = grid.points[i];
        // f_Y(y) = ∫ φ(z) f_N(y − √P z) dz; the noise cusp sits at z = (y − m)/√P.
        auto integrand = [&](double z) { return std::exp(log_norm - 0.5 * z * z + noise.log_pdf(y - input_std * z)); };
        const double cusp = (y - centre) / input_std;
        const double value =
            integrate(integrand, -kGaussianSupport, kGaussianSupport, {cusp}, options.quadrature);
        grid.values[i] = std::max(0.0, value);
    });
    grid.validate();
    return grid;
}

DensityGrid noise_density(const GGNoise& law, std::size_t points, double tail_mass) {
    if (points < 3) throw DomainError("noise_density: need at least three points");
    const std::size_t intervals = points - 1 + ((points - 1) % 2);
    const double half_width = law.tail_radius(tail_mass);
    // x = L sign(u) |u|^p turns exp(−|x/s|^β) into a Gaussian-like profile in u
    // when p = 2/β, which resolves the cusp at the mode for small β.
    const double power = std::max(1.0, 2.0 / law.beta());
    DensityGrid grid;
    grid.points.resize(intervals + 1);
    grid.values.resize(intervals + 1);
    grid.truncation_mass = law.two_sided_tail(half_width);
    const double half = static_cast<double>(intervals) / 2.0;
    for (std::size_t i = 0; i <= intervals; ++i) {
        const double u = (static_cast<double>(i) - half) / half;
        const double x = law.mean() + std::copysign(half_width * std::pow(std::abs(u), power), u);
        grid.points[i] = x;
        grid.values[i] = law.pdf(x);
    }
    grid.validate();
    return grid;
}

double grid_entropy(const DensityGrid& grid) {
    grid.validate();
    return composite_simpson(grid.points, grid.values, [](double f) { return f > 0.0 ? -f * std::log(f) : 0.0; });
}

double gaussian_input_mi(const ChannelConfig& config, Units units, const OutputDensityOptions& options) {
    const double output_entropy = grid_entropy(output_density(config, options));
    return from_nats(output_entropy - config.noise.entropy(Units::nats), units);
}

double sphere_packing_ratio(double beta, int dimensions) {
    if (dimensions < 1) throw DomainError("sphere_packing_ratio: dimensions must be positive");
    return std::exp(dimensions * gap(beta, Units::nats));
}

// ---------------------------------------------------------------------------

namespace {

std::string fmt(const char* prefix, double a) {
    std::ostringstream s;
    s << prefix << a;
    return s.str();
}

std::string fmt(const char* prefix, double a, const char* mid, double b) {
    std::ostringstream s;
    s << prefix << a << mid << b;
    return s.str();
}

}  // namespace

std::vector<CheckResult> run_verification(const SimConfig& config) {
    config.validate();
    std::vector<CheckResult> out;
    const std::vector<double> betas = {0.5, 0.8, 1.0, 1.5, 2.0, 3.0};

    // Closed-form entropy against the resubstitution estimate.
    for (double beta : betas) {
        const GGNoise law(beta, 1.0);
        const Estimate est = mc_entropy(law, config);
        const double exact = law.entropy(Units::nats);
        const double tol = 4.0 * est.std_error;
        out.push_back({fmt("mc_entropy beta=", beta), est.value, exact, tol, est.std_error,
                       std::abs(est.value - exact) <= tol});
    }

    // h(Gaussian) − h(GG) at unit variance equals the gap.
    const double gaussian_entropy = grid_entropy(noise_density(GGNoise::with_variance(2.0, 1.0)));
    for (double beta : betas) {
        const double difference = gaussian_entropy - grid_entropy(noise_density(GGNoise::with_variance(beta, 1.0)));
        const double expected = gap(beta, Units::nats);
        out.push_back({fmt("entropy_gap_identity beta=", beta), difference, expected, 1e-6, 0.0,
                       std::abs(difference - expected) <= 1e-6});
    }

    // Gaussian-input mutual information inside the capacity sandwich.
    OutputDensityOptions options;
    options.threads = config.threads;
    constexpr double sandwich_slack_bits = 1e-4;
    constexpr double collapse_tol_bits = 1e-5;
    for (double beta : betas) {
        for (double snr : {0.1, 1.0, 10.0, 100.0}) {
            const ChannelConfig channel(snr, GGNoise::with_variance(beta, 1.0));
            const DensityGrid grid = output_density(channel, options);
            const double mass = grid.mass();
            out.push_back({fmt("output_mass beta=", beta, " snr=", snr), mass, 1.0, 2.0 * grid.truncation_mass, 0.0,
                           mass >= 1.0 - 2.0 * grid.truncation_mass && mass <= 1.0 + 1e-12});

            const double mi_bits = from_nats(grid_entropy(grid) - channel.noise.entropy(Units::nats), Units::bits);
            const CapacityBounds b = awggn_bounds(channel, Units::bits);
            if (beta == 2.0) {
                out.push_back({fmt("sandwich_collapse beta=", beta, " snr=", snr), mi_bits, b.lower,
                               collapse_tol_bits, 0.0, std::abs(mi_bits - b.lower) <= collapse_tol_bits});
            } else {
                const bool inside = mi_bits >= b.lower - sandwich_slack_bits && mi_bits <= b.upper + sandwich_slack_bits;
                out.push_back({fmt("sandwich beta=", beta, " snr=", snr), mi_bits, 0.5 * (b.lower + b.upper),
                               0.5 * (b.upper - b.lower) + sandwich_slack_bits, 0.0, inside});
            }
        }
    }

    // Sphere-packing factor from the entropy difference at K = 10.
    for (double beta : betas) {
        constexpr int dims = 10;
        const double difference = gaussian_entropy - grid_entropy(noise_density(GGNoise::with_variance(beta, 1.0)));
        const double from_entropy = std::exp(dims * difference);
        const double ratio = sphere_packing_ratio(beta, dims);
        out.push_back({fmt("sphere_packing K=10 beta=", beta), ratio, from_entropy, 1e-5 * from_entropy, 0.0,
                       std::abs(ratio - from_entropy) <= 1e-5 * from_entropy});
    }
    return out;
}

}  // namespace awggn

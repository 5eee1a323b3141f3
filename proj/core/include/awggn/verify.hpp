#pragma once

// Empirical checks that sit next to the closed-form bounds: Monte-Carlo
// entropy, the output density of a Gaussian input through GG noise, and the
// numeric mutual information that must fall inside the capacity sandwich.

#include "awggn/alpha_mu.hpp"
#include "awggn/capacity.hpp"
#include "awggn/gg_noise.hpp"
#include "awggn/sim_config.hpp"

#include <string>
#include <vector>

namespace awggn {

/// Sample mean with its standard error.
struct Estimate {
    double value = 0.0;
    double std_error = 0.0;
};

/// A density tabulated on strictly increasing abscissae. truncation_mass
/// bounds the probability that lies outside [points.front(), points.back()].
struct DensityGrid {
    std::vector<double> points;
    std::vector<double> values;
    double truncation_mass = 0.0;

    /// Throws DomainError if sizes differ, points are not increasing, or any
    /// value is negative.
    void validate() const;

    /// Composite Simpson mass over the grid.
    double mass() const;
};

/// Resubstitution estimate of h(N) = E{−ln f(N)} in nats from
/// config.samples draws of the law.
Estimate mc_entropy(const GGNoise& law, const SimConfig& config);

/// Monte-Carlo average of ½ log(1 + snr h²) over fading draws, in config.units.
Estimate mc_ergodic_capacity(double snr, const AlphaMuFading& fading, const SimConfig& config);

struct OutputDensityOptions {
    /// Total probability allowed outside the grid, split evenly between the
    /// noise and the Gaussian input.
    double tail_mass = 1e-10;
    /// Grid points per smoothing scale min(√P, σ_N).
    double points_per_scale = 8.0;
    std::size_t max_points = 65537;
    QuadratureSpec quadrature{1e-10, 1e-18, 400};
    std::size_t threads = 1;
};

/// Density of Y = X + N with X ~ N(0, P), tabulated by convolving the GG noise
/// density with the Gaussian at every grid point.
DensityGrid output_density(const ChannelConfig& config, const OutputDensityOptions& options = {});

/// The GG density itself on a grid refined towards the mode, where the
/// density has a cusp for β <= 1.
DensityGrid noise_density(const GGNoise& law, std::size_t points = 40001, double tail_mass = 1e-10);

/// −∫ f ln f over the grid (composite Simpson, 0 ln 0 = 0), in nats.
double grid_entropy(const DensityGrid& grid);

/// I(X; Y) = h(Y) − h(N) for a Gaussian input of power P.
double gaussian_input_mi(const ChannelConfig& config, Units units = Units::bits,
                         const OutputDensityOptions& options = {});

/// 2^{K f(β)}: how many more noise spheres fit into the output sphere for K
/// dimensional codewords under GG noise than under Gaussian noise of the same
/// variance.
double sphere_packing_ratio(double beta, int dimensions);

/// One line of the verification report.
struct CheckResult {
    std::string name;
    double measured = 0.0;
    double reference = 0.0;
    double tolerance = 0.0;
    double std_error = 0.0;  // 0 for deterministic checks
    bool passed = false;
};

/// Runs the full verification suite with the given configuration.
std::vector<CheckResult> run_verification(const SimConfig& config);

}  // namespace awggn

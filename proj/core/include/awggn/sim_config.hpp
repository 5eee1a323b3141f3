#pragma once

#include "awggn/numerics.hpp"
#include "awggn/units.hpp"

#include <cstddef>
#include <cstdint>

namespace awggn {

/// Settings shared by every stochastic or numeric estimator. Identical
/// configurations produce bitwise identical results; `threads` only changes
/// wall-clock time.
struct SimConfig {
    std::uint64_t seed = 20140601;
    std::size_t samples = 100000;
    std::size_t chunks = 8;
    std::size_t threads = 1;
    QuadratureSpec quadrature{};
    Units units = Units::bits;

    void validate() const;
};

}  // namespace awggn

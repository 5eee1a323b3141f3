#pragma once

// Seeded random streams with platform-independent variate generation.
// The std:: distributions are implementation-defined, so uniform, normal and
// gamma variates are generated here from raw 64-bit engine output.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace awggn {

class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed);

    /// Independent stream for chunk `index` of a computation seeded with `seed`.
    static RandomStream substream(std::uint64_t seed, std::uint64_t index);

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on the open interval (0, 1).
    double uniform();

    /// Standard normal (Marsaglia polar method).
    double normal();

    /// Fair ±1.
    double sign() { return (engine_() >> 63) ? 1.0 : -1.0; }

    /// Gamma(shape, 1). Marsaglia–Tsang squeeze for shape >= 1; for shape < 1
    /// the exact boost G_{shape+1} · U^{1/shape}.
    double gamma(double shape);

    /// ln of a Gamma(shape, 1) variate; keeps precision where U^{1/shape}
    /// would underflow for very small shapes.
    double log_gamma_variate(double shape);

private:
    std::mt19937_64 engine_;
    double spare_normal_ = 0.0;
    bool has_spare_ = false;
};

/// SplitMix64 finaliser; used to derive substream seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Draws `count` values split across `chunks` independent substreams of `seed`.
/// Chunk k produces a contiguous block of the output using
/// RandomStream::substream(seed, k); blocks are concatenated in chunk order so
/// the result does not depend on `threads`.
std::vector<double> sample_chunked(std::size_t count, std::uint64_t seed, std::size_t chunks, std::size_t threads,
                                   const std::function<double(RandomStream&)>& draw);

/// Runs body(i) for i in [0, n) on up to `threads` worker threads. Each index
/// is visited exactly once; the caller writes results by index.
void parallel_for(std::size_t n, std::size_t threads, const std::function<void(std::size_t)>& body);

}  // namespace awggn

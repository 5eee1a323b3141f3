#include "awggn/random.hpp"

#include "awggn/numerics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace awggn {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

RandomStream::RandomStream(std::uint64_t seed) : engine_(splitmix64(seed)) {}

RandomStream RandomStream::substream(std::uint64_t seed, std::uint64_t index) {
    return RandomStream(splitmix64(seed) ^ splitmix64(~index));
}

double RandomStream::uniform() {
    // 53 random mantissa bits, shifted half a step off zero.
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double RandomStream::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_normal_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform() - 1.0;
        v = 2.0 * uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_normal_ = v * m;
    has_spare_ = true;
    return u * m;
}

double RandomStream::log_gamma_variate(double shape) {
    if (!(shape > 0.0) || !std::isfinite(shape)) throw DomainError("gamma variate: shape must be positive");
    if (shape < 1.0) return log_gamma_variate(shape + 1.0) + std::log(uniform()) / shape;
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return std::log(d * v);
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return std::log(d * v);
    }
}

double RandomStream::gamma(double shape) {
    if (!(shape > 0.0) || !std::isfinite(shape)) throw DomainError("gamma variate: shape must be positive");
    if (shape < 1.0) return gamma(shape + 1.0) * std::pow(uniform(), 1.0 / shape);
    return std::exp(log_gamma_variate(shape));
}

void parallel_for(std::size_t n, std::size_t threads, const std::function<void(std::size_t)>& body) {
    threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(n, 1));
    if (threads == 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) {
        workers.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    }
    for (auto& w : workers) w.join();
    if (failure) std::rethrow_exception(failure);
}

std::vector<double> sample_chunked(std::size_t count, std::uint64_t seed, std::size_t chunks, std::size_t threads,
                                   const std::function<double(RandomStream&)>& draw) {
    chunks = std::max<std::size_t>(chunks, 1);
    std::vector<double> out(count);
    const std::size_t base = count / chunks;
    const std::size_t extra = count % chunks;
    parallel_for(chunks, threads, [&](std::size_t k) {
        const std::size_t begin = k * base + std::min(k, extra);
        const std::size_t len = base + (k < extra ? 1 : 0);
        RandomStream stream = RandomStream::substream(seed, k);
        for (std::size_t i = 0; i < len; ++i) out[begin + i] = draw(stream);
    });
    return out;
}

}  // namespace awggn

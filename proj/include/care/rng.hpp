#pragma once

#include <cstdint>
#include <random>
#include <utility>

// Deterministic random streams. Each (master seed, index) pair maps to its
// own stream through a splitmix64 hash, so replications can run on any
// number of workers and still draw identical values. Distribution transforms
// are done here rather than with std:: distributions to keep the draw
// sequence stable across standard library implementations.

namespace care::rng {

constexpr std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

constexpr std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    return splitmix64(splitmix64(a) ^ (0x9E3779B97F4A7C15ull * (b + 1)));
}

class Stream {
public:
    explicit Stream(std::uint64_t seed) : gen_(seed) {}

    // uniform on [0, 1), 53-bit resolution
    double uniform01() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    // Box-Muller pair; always consumes exactly two uniforms
    std::pair<double, double> normal_pair() {
        double u1 = uniform01();
        double u2 = uniform01();
        double r = std::sqrt(-2.0 * std::log(1.0 - u1));
        double t = 6.283185307179586476925286766559 * u2;
        return {r * std::cos(t), r * std::sin(t)};
    }

    bool bernoulli(double p) { return uniform01() < p; }

private:
    std::mt19937_64 gen_;
};

}  // namespace care::rng

#pragma once

#include <cstdint>
#include <random>

#include "ecgl/curve.hpp"

namespace ecgl {

/// Deterministic random stream. Bounded draws use rejection sampling on the
/// raw 64-bit output, so a seed yields the same values on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(mix(seed)) {}

    /// Independent child stream; the parent stream is not advanced.
    Rng split(std::uint64_t index) const { return Rng(mix(seed_ ^ mix(index + 0x632BE59BD9B4E019ULL))); }

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, bound). bound must be nonzero.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi);
    bool coin() { return (next() >> 63) != 0; }

    static std::uint64_t mix(std::uint64_t x) noexcept;

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

/// Uniform prime with exactly `bits` bits (3 <= bits <= 62), never 2 or 3.
Prime random_prime(unsigned bits, Rng& rng);

/// Rejection-samples (a, b) with 4a^3 + 27b^2 != 0.
CurveParams random_curve(const Prime& p, Rng& rng);

/// A random curve point; O with probability 1/16, otherwise a random x with
/// square right-hand side and a random root.
Point random_point(const CurveParams& curve, Rng& rng);

/// A random affine point, never O.
Point random_affine_point(const CurveParams& curve, Rng& rng);

}  // namespace ecgl

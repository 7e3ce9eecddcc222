#include "ecgl/sampling.hpp"

#include <stdexcept>

#include "ecgl/errors.hpp"

namespace ecgl {

std::uint64_t Rng::mix(std::uint64_t x) noexcept {
    // SplitMix64 finalizer.
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below(0)");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    for (;;) {
        const std::uint64_t v = next();
        if (v < limit) return v % bound;
    }
}

std::uint64_t Rng::between(std::uint64_t lo, std::uint64_t hi) {
    if (lo == 0 && hi == ~std::uint64_t{0}) return next();
    return lo + below(hi - lo + 1);
}

Prime random_prime(unsigned bits, Rng& rng) {
    if (bits < 3 || bits > 62) throw InvalidPrime("prime size must be 3..62 bits");
    const std::uint64_t lo = std::uint64_t{1} << (bits - 1);
    const std::uint64_t hi = (std::uint64_t{1} << bits) - 1;
    for (;;) {
        const std::uint64_t candidate = rng.between(lo, hi) | 1;
        if (candidate > 3 && is_prime_u64(candidate)) return Prime(candidate);
    }
}

CurveParams random_curve(const Prime& p, Rng& rng) {
    for (;;) {
        const FpElement a(rng.below(p.value()), p);
        const FpElement b(rng.below(p.value()), p);
        if (!discriminant(a, b).is_zero()) return CurveParams(a, b);
    }
}

Point random_affine_point(const CurveParams& curve, Rng& rng) {
    for (;;) {
        const FpElement x = curve.element(rng.below(curve.p()));
        const FpElement r = curve.rhs(x);
        if (fp_legendre(r) < 0) continue;
        const auto roots = fp_sqrt(r);
        const FpElement& y = roots.size() == 1 || !rng.coin() ? roots[0] : roots[1];
        return Point::affine(curve, x, y);
    }
}

Point random_point(const CurveParams& curve, Rng& rng) {
    if (rng.below(16) == 0) return Point::infinity(curve);
    return random_affine_point(curve, rng);
}

}  // namespace ecgl

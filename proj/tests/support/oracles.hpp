// Independent reference computations used only by the tests. Nothing here
// calls into the code under test for the value being checked.
#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ecgl/curve.hpp"
#include "ecgl/mpoly.hpp"
#include "ecgl/sampling.hpp"

namespace oracle {

/// Residues that are squares mod p, by squaring every element.
std::set<std::uint64_t> squares_mod(std::uint64_t p);

/// Primality by trial division.
bool is_prime_slow(std::uint64_t n);

/// p + 1 + sum over x of the Legendre symbol of x^3 + ax + b, with the
/// symbol computed from squares_mod.
std::uint64_t point_count(std::uint64_t p, std::uint64_t a, std::uint64_t b);

/// Affine points by trying every (x, y).
std::vector<std::pair<std::uint64_t, std::uint64_t>> affine_points(std::uint64_t p, std::uint64_t a,
                                                                   std::uint64_t b);

/// Number of (a, b) in F_p^2 with 4a^3 + 27b^2 != 0, by direct count.
std::uint64_t nonsingular_pairs(std::uint64_t p);

/// nullopt stands for the point at infinity.
using RawPoint = std::optional<std::pair<std::uint64_t, std::uint64_t>>;

/// Geometric addition: intersects the line through A and B (the tangent when
/// A = B) with the cubic, takes the third root by dividing out the known roots
/// and reflects it. The slope is found by searching F_p for m with
/// m * run = rise, and the third root is re-checked against the cubic.
RawPoint geometric_add(std::uint64_t p, std::uint64_t a, std::uint64_t b, const RawPoint& P, const RawPoint& Q);

RawPoint raw(const ecgl::Point& P);

/// Rewrites a single term with y_V^e, e >= 2, chosen at random, until no such
/// term remains. Reaches a normal form by a different path than the library.
ecgl::MPoly reduce_by_random_schedule(const ecgl::MPoly& f, ecgl::Rng& rng);

/// Random polynomial with up to `max_terms` terms, exponents <= max_exp and
/// coefficients in [-coef, coef].
ecgl::MPoly random_poly(ecgl::Rng& rng, unsigned max_terms, unsigned max_exp, long coef);

/// Eight values mod q with every (xV, yV) on y^2 = x^3 + ax + b, found by
/// sampling x until the right-hand side is a square.
std::vector<std::uint64_t> random_curve_assignment(std::uint64_t q, ecgl::Rng& rng);

// Polynomial-engine properties. Each returns the number of failed cases out
// of `cases`.
std::size_t nf_idempotence_failures(std::size_t cases, std::uint64_t seed);
std::size_t nf_linearity_failures(std::size_t cases, std::uint64_t seed);
std::size_t nf_multiplicativity_failures(std::size_t cases, std::uint64_t seed);
std::size_t nf_schedule_failures(std::size_t cases, std::uint64_t seed);
std::size_t nf_membership_failures(std::size_t cases, std::uint64_t seed);
std::size_t nf_evaluation_failures(std::size_t cases, std::uint64_t seed);

}  // namespace oracle

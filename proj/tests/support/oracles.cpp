#include "support/oracles.hpp"

#include <array>
#include <gmpxx.h>

namespace oracle {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulm(u64 x, u64 y, u64 m) { return static_cast<u64>(static_cast<u128>(x) * y % m); }
u64 addm(u64 x, u64 y, u64 m) { return static_cast<u64>((static_cast<u128>(x) + y) % m); }
u64 subm(u64 x, u64 y, u64 m) { return addm(x, m - y % m, m); }

u64 powm(u64 base, u64 e, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) r = mulm(r, base, m);
        base = mulm(base, base, m);
        e >>= 1;
    }
    return r;
}

u64 cubic(u64 p, u64 a, u64 b, u64 x) { return addm(addm(mulm(mulm(x, x, p), x, p), mulm(a, x, p), p), b, p); }

// m with m * run == rise (mod p), by search.
u64 solve_slope(u64 p, u64 rise, u64 run) {
    for (u64 m = 0; m < p; ++m)
        if (mulm(m, run, p) == rise) return m;
    throw std::logic_error("no slope");
}

// Divides the monic polynomial c[0] + c[1] x + ... by (x - r), remainder must vanish.
std::vector<u64> divide_root(const std::vector<u64>& c, u64 r, u64 p) {
    const std::size_t n = c.size() - 1;
    std::vector<u64> q(n);
    u64 carry = 0;
    for (std::size_t i = n; i-- > 0;) {
        carry = addm(c[i + 1], mulm(carry, r, p), p);
        q[i] = carry;
    }
    if (addm(c[0], mulm(carry, r, p), p) != 0) throw std::logic_error("not a root");
    return q;
}

u64 eval_independent(const ecgl::MPoly& f, const std::array<u64, ecgl::kNumVars>& v, u64 q) {
    u64 total = 0;
    const mpz_class modulus(std::to_string(q));
    for (const ecgl::Term& t : f.terms()) {
        mpz_class c = t.coef % modulus;
        if (c < 0) c += modulus;
        u64 term = std::stoull(c.get_str());
        for (std::size_t i = 0; i < ecgl::kNumVars; ++i)
            term = mulm(term, powm(v[i], t.mono.exponent(static_cast<ecgl::Var>(i)), q), q);
        total = addm(total, term, q);
    }
    return total;
}

constexpr std::array<ecgl::Var, 3> kX{ecgl::Var::xA, ecgl::Var::xB, ecgl::Var::xC};
constexpr std::array<ecgl::Var, 3> kY{ecgl::Var::yA, ecgl::Var::yB, ecgl::Var::yC};

ecgl::MPoly rhs(int v) {
    const auto x = ecgl::MPoly::var(kX[v]);
    return x * x * x + ecgl::MPoly::var(ecgl::Var::a) * x + ecgl::MPoly::var(ecgl::Var::b);
}

ecgl::MPoly generator(int v) {
    const auto y = ecgl::MPoly::var(kY[v]);
    return y * y - rhs(v);
}

constexpr u64 kMersenne61 = (u64{1} << 61) - 1;

}  // namespace

std::set<u64> squares_mod(u64 p) {
    std::set<u64> s;
    for (u64 x = 0; x < p; ++x) s.insert(mulm(x, x, p));
    return s;
}

bool is_prime_slow(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

u64 point_count(u64 p, u64 a, u64 b) {
    const auto sq = squares_mod(p);
    std::int64_t sum = 0;
    for (u64 x = 0; x < p; ++x) {
        const u64 r = cubic(p, a, b, x);
        sum += r == 0 ? 0 : (sq.count(r) ? 1 : -1);
    }
    return static_cast<u64>(static_cast<std::int64_t>(p) + 1 + sum);
}

std::vector<std::pair<u64, u64>> affine_points(u64 p, u64 a, u64 b) {
    std::vector<std::pair<u64, u64>> pts;
    for (u64 x = 0; x < p; ++x)
        for (u64 y = 0; y < p; ++y)
            if (mulm(y, y, p) == cubic(p, a, b, x)) pts.emplace_back(x, y);
    return pts;
}

u64 nonsingular_pairs(u64 p) {
    u64 n = 0;
    for (u64 a = 0; a < p; ++a)
        for (u64 b = 0; b < p; ++b)
            if (addm(mulm(4, powm(a, 3, p), p), mulm(27, mulm(b, b, p), p), p) != 0) ++n;
    return n;
}

RawPoint geometric_add(u64 p, u64 a, u64 b, const RawPoint& P, const RawPoint& Q) {
    if (!P) return Q;
    if (!Q) return P;
    const auto [x1, y1] = *P;
    const auto [x2, y2] = *Q;
    if (x1 == x2 && addm(y1, y2, p) == 0) return std::nullopt;  // vertical line
    u64 m;
    if (x1 == x2) {
        m = solve_slope(p, addm(mulm(3, mulm(x1, x1, p), p), a, p), mulm(2, y1, p));
    } else {
        m = solve_slope(p, subm(y1, y2, p), subm(x1, x2, p));
    }
    const u64 c = subm(y1, mulm(m, x1, p), p);
    // x^3 - m^2 x^2 + (a - 2mc) x + (b - c^2)
    std::vector<u64> poly{subm(b, mulm(c, c, p), p), subm(a, mulm(2, mulm(m, c, p), p), p),
                          subm(0, mulm(m, m, p), p), 1};
    poly = divide_root(poly, x1, p);
    poly = divide_root(poly, x2, p);
    const u64 x3 = subm(0, poly[0], p);  // remaining factor is x - x3
    const u64 y3 = addm(mulm(m, x3, p), c, p);
    if (mulm(y3, y3, p) != cubic(p, a, b, x3)) throw std::logic_error("third root off the curve");
    return std::make_pair(x3, subm(0, y3, p));
}

RawPoint raw(const ecgl::Point& P) {
    if (P.is_infinity()) return std::nullopt;
    return std::make_pair(P.x().residue(), P.y().residue());
}

ecgl::MPoly reduce_by_random_schedule(const ecgl::MPoly& f, ecgl::Rng& rng) {
    ecgl::MPoly g = f;
    for (;;) {
        std::vector<std::pair<std::size_t, int>> candidates;
        const auto terms = g.terms();
        for (std::size_t i = 0; i < terms.size(); ++i)
            for (int v = 0; v < 3; ++v)
                if (terms[i].mono.exponent(kY[v]) >= 2) candidates.emplace_back(i, v);
        if (candidates.empty()) return g;
        const auto [i, v] = candidates[rng.below(candidates.size())];
        const ecgl::Term t = terms[i];
        const ecgl::MPoly old_term = ecgl::MPoly::monomial(t.mono, t.coef);
        const ecgl::MPoly lowered =
            ecgl::MPoly::monomial(t.mono.with_exponent(kY[v], t.mono.exponent(kY[v]) - 2), t.coef);
        g = g - old_term + lowered * rhs(v);
    }
}

ecgl::MPoly random_poly(ecgl::Rng& rng, unsigned max_terms, unsigned max_exp, long coef) {
    ecgl::MPoly f;
    const auto n = rng.below(max_terms + 1);
    for (std::uint64_t t = 0; t < n; ++t) {
        ecgl::MPoly m = static_cast<long>(rng.below(2 * coef + 1)) - coef;
        for (std::size_t v = 0; v < ecgl::kNumVars; ++v) {
            if (rng.below(3) != 0) continue;
            m *= pow(ecgl::MPoly::var(static_cast<ecgl::Var>(v)), static_cast<unsigned>(rng.below(max_exp + 1)));
        }
        f += m;
    }
    return f;
}

std::vector<u64> random_curve_assignment(u64 q, ecgl::Rng& rng) {
    // q = 3 mod 4, so square roots are powers.
    std::vector<u64> v(ecgl::kNumVars);
    const u64 a = rng.below(q);
    const u64 b = rng.below(q);
    v[6] = a;
    v[7] = b;
    for (int i = 0; i < 3; ++i) {
        for (;;) {
            const u64 x = rng.below(q);
            const u64 r = cubic(q, a, b, x);
            const u64 y = powm(r, (q + 1) / 4, q);
            if (mulm(y, y, q) != r) continue;
            v[2 * i] = x;
            v[2 * i + 1] = y;
            break;
        }
    }
    return v;
}

std::size_t nf_idempotence_failures(std::size_t cases, u64 seed) {
    ecgl::Rng rng(seed);
    std::size_t bad = 0;
    for (std::size_t i = 0; i < cases; ++i) {
        const auto f = random_poly(rng, 8, 6, 20);
        const auto n = ecgl::normal_form(f);
        bool reduced = true;
        for (const auto& t : n.terms())
            for (auto y : kY) reduced = reduced && t.mono.exponent(y) <= 1;
        if (!reduced || ecgl::normal_form(n) != n) ++bad;
    }
    return bad;
}

std::size_t nf_linearity_failures(std::size_t cases, u64 seed) {
    ecgl::Rng rng(seed);
    std::size_t bad = 0;
    for (std::size_t i = 0; i < cases; ++i) {
        const auto f = random_poly(rng, 6, 5, 20);
        const auto g = random_poly(rng, 6, 5, 20);
        const mpz_class c(static_cast<long>(rng.below(2001)) - 1000);
        const bool sum_ok = ecgl::normal_form(f + g) == ecgl::normal_form(f) + ecgl::normal_form(g);
        const bool diff_ok = ecgl::normal_form(f - g) == ecgl::normal_form(f) - ecgl::normal_form(g);
        const bool scale_ok = ecgl::normal_form(c * f) == c * ecgl::normal_form(f);
        if (!sum_ok || !diff_ok || !scale_ok) ++bad;
    }
    return bad;
}

std::size_t nf_multiplicativity_failures(std::size_t cases, u64 seed) {
    ecgl::Rng rng(seed);
    std::size_t bad = 0;
    for (std::size_t i = 0; i < cases; ++i) {
        const auto f = random_poly(rng, 5, 4, 10);
        const auto g = random_poly(rng, 5, 4, 10);
        const auto expected = ecgl::normal_form(f * g);
        const bool ok = ecgl::normal_form(ecgl::normal_form(f) * ecgl::normal_form(g)) == expected &&
                        ecgl::mul_nf(f, g) == expected;
        if (!ok) ++bad;
    }
    return bad;
}

std::size_t nf_schedule_failures(std::size_t cases, u64 seed) {
    ecgl::Rng rng(seed);
    std::size_t bad = 0;
    for (std::size_t i = 0; i < cases; ++i) {
        const auto f = random_poly(rng, 6, 6, 50);
        if (reduce_by_random_schedule(f, rng) != ecgl::normal_form(f)) ++bad;
    }
    return bad;
}

std::size_t nf_membership_failures(std::size_t cases, u64 seed) {
    ecgl::Rng rng(seed);
    std::size_t bad = 0;
    for (std::size_t i = 0; i < cases; ++i) {
        ecgl::MPoly member;
        for (int v = 0; v < 3; ++v) member += random_poly(rng, 5, 4, 30) * generator(v);
        const auto f = random_poly(rng, 5, 4, 30);
        if (!ecgl::normal_form(member).is_zero() || ecgl::normal_form(f + member) != ecgl::normal_form(f)) ++bad;
    }
    return bad;
}

std::size_t nf_evaluation_failures(std::size_t cases, u64 seed) {
    ecgl::Rng rng(seed);
    std::size_t bad = 0;
    for (std::size_t i = 0; i < cases; ++i) {
        const auto f = random_poly(rng, 6, 6, 1000);
        const auto n = ecgl::normal_form(f);
        const auto values = random_curve_assignment(kMersenne61, rng);
        std::array<u64, ecgl::kNumVars> v{};
        std::copy(values.begin(), values.end(), v.begin());
        const u64 expected = eval_independent(f, v, kMersenne61);
        if (eval_independent(n, v, kMersenne61) != expected || ecgl::evaluate_mod(f, v, kMersenne61) != expected)
            ++bad;
    }
    return bad;
}

}  // namespace oracle

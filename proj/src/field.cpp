#include "ecgl/field.hpp"

#include <array>
#include <ostream>

#include "ecgl/errors.hpp"

namespace ecgl {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m) noexcept {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exponent != 0) {
        if (exponent & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exponent >>= 1;
    }
    return result;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    // These twelve bases are a proven deterministic witness set below 3.3e24.
    static constexpr std::array<std::uint64_t, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (std::uint64_t q : kBases) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : kBases) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Prime::Prime(std::uint64_t value) : value_(value) {
    if (value <= 3) throw InvalidPrime("modulus must be a prime > 3, got " + std::to_string(value));
    if (!is_prime_u64(value)) throw InvalidPrime(std::to_string(value) + " is not prime");
}

FpElement::FpElement(std::uint64_t residue, Prime modulus)
    : residue_(residue % modulus.value()), modulus_(modulus) {}

FpElement FpElement::from_signed(std::int64_t value, Prime modulus) {
    const std::uint64_t p = modulus.value();
    if (value >= 0) return FpElement(static_cast<std::uint64_t>(value), modulus);
    // -(value + 1) avoids overflow on INT64_MIN.
    const std::uint64_t magnitude = static_cast<std::uint64_t>(-(value + 1)) + 1;
    const std::uint64_t r = magnitude % p;
    return FpElement(r == 0 ? 0 : p - r, modulus);
}

void FpElement::require_same_field(const FpElement& rhs) const {
    if (modulus_ != rhs.modulus_) {
        throw ModulusMismatch("arithmetic between F_" + std::to_string(p()) + " and F_" +
                              std::to_string(rhs.p()));
    }
}

FpElement FpElement::operator+(const FpElement& rhs) const {
    require_same_field(rhs);
    const std::uint64_t m = p();
    std::uint64_t s = residue_ + rhs.residue_;
    // The sum wraps when p >= 2^63; unsigned wraparound then yields s - m.
    if (s < residue_ || s >= m) s -= m;
    return {Unchecked{}, s, modulus_};
}

FpElement FpElement::operator-(const FpElement& rhs) const {
    require_same_field(rhs);
    const std::uint64_t m = p();
    const std::uint64_t d = residue_ >= rhs.residue_ ? residue_ - rhs.residue_ : m - (rhs.residue_ - residue_);
    return {Unchecked{}, d, modulus_};
}

FpElement FpElement::operator*(const FpElement& rhs) const {
    require_same_field(rhs);
    return {Unchecked{}, mul_mod(residue_, rhs.residue_, p()), modulus_};
}

FpElement FpElement::operator-() const {
    return {Unchecked{}, residue_ == 0 ? 0 : p() - residue_, modulus_};
}

FpElement FpElement::pow(std::uint64_t exponent) const {
    return {Unchecked{}, pow_mod(residue_, exponent, p()), modulus_};
}

std::ostream& operator<<(std::ostream& os, const FpElement& x) {
    return os << x.residue();
}

FpElement fp_inv(const FpElement& x) {
    if (x.is_zero()) throw ZeroInverse("inverse of 0 in F_" + std::to_string(x.p()));
    // Fermat: x^(p-2).
    return x.pow(x.p() - 2);
}

int fp_legendre(const FpElement& x) {
    if (x.is_zero()) return 0;
    const std::uint64_t r = x.pow((x.p() - 1) / 2).residue();
    return r == 1 ? 1 : -1;
}

std::vector<FpElement> fp_sqrt(const FpElement& x) {
    const int symbol = fp_legendre(x);
    if (symbol == 0) return {x};
    if (symbol < 0) {
        throw NotASquare(std::to_string(x.residue()) + " is not a square mod " + std::to_string(x.p()));
    }

    const std::uint64_t p = x.p();
    const Prime& modulus = x.modulus();
    std::uint64_t q = p - 1;
    std::uint64_t s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }

    std::uint64_t z = 2;
    while (fp_legendre(FpElement(z, modulus)) != -1) ++z;

    std::uint64_t m = s;
    std::uint64_t c = pow_mod(z, q, p);
    std::uint64_t t = pow_mod(x.residue(), q, p);
    std::uint64_t r = pow_mod(x.residue(), (q + 1) / 2, p);
    while (t != 1) {
        std::uint64_t i = 0;
        std::uint64_t t2 = t;
        while (t2 != 1) {
            t2 = mul_mod(t2, t2, p);
            ++i;
        }
        std::uint64_t b = c;
        for (std::uint64_t j = 0; j + 1 < m - i; ++j) b = mul_mod(b, b, p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }

    FpElement root(r, modulus);
    FpElement other = -root;
    if (other.residue() < root.residue()) std::swap(root, other);
    return {root, other};
}

}  // namespace ecgl

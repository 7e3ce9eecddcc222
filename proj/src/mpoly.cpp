#include "ecgl/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>

#include <absl/container/flat_hash_map.h>

#include "ecgl/errors.hpp"
#include "ecgl/field.hpp"

namespace ecgl {

namespace {

thread_local std::size_t t_peak_terms = 0;

void note_size(std::size_t n) noexcept {
    if (n > t_peak_terms) t_peak_terms = n;
}

using Bits = Monomial::Bits;

constexpr Bits repeat16(std::uint64_t lane) {
    Bits out = 0;
    for (std::size_t i = 0; i < kNumVars; ++i) out = (out << 16) | lane;
    return out;
}

constexpr Bits kHighBits = repeat16(0x8000);

// A field >= 2 in any y position means the monomial is not reduced.
constexpr Bits kUnreducedY = (Bits{0xFFFE} << Monomial::shift(Var::yA)) |
                             (Bits{0xFFFE} << Monomial::shift(Var::yB)) |
                             (Bits{0xFFFE} << Monomial::shift(Var::yC));

struct BitsHash {
    std::size_t operator()(Bits b) const noexcept {
        const auto lo = static_cast<std::uint64_t>(b);
        const auto hi = static_cast<std::uint64_t>(b >> 64);
        std::uint64_t x = lo ^ (hi * 0x9E3779B97F4A7C15ULL);
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return static_cast<std::size_t>(x ^ (x >> 31));
    }
};

constexpr std::array<Var, 3> kYVars{Var::yA, Var::yB, Var::yC};
constexpr std::array<Var, 3> kXVars{Var::xA, Var::xB, Var::xC};

struct GrlexGreater {
    bool operator()(const Term& lhs, const Term& rhs) const noexcept {
        return grlex_greater(lhs.mono, rhs.mono);
    }
};

}  // namespace

std::string_view var_name(Var v) {
    static constexpr std::array<std::string_view, kNumVars> kNames{"xA", "yA", "xB", "yB",
                                                                   "xC", "yC", "a",  "b"};
    return kNames[static_cast<std::size_t>(v)];
}

// --- Monomial -----------------------------------------------------------------

Monomial::Monomial(const Exponents& e) {
    for (std::size_t i = 0; i < kNumVars; ++i) {
        if (e[i] > kMaxExponent) {
            throw ExponentOverflow("exponent " + std::to_string(e[i]) + " exceeds " +
                                   std::to_string(kMaxExponent));
        }
        bits_ |= static_cast<Bits>(e[i]) << shift(kAllVars[i]);
    }
}

Monomial Monomial::of(Var v, unsigned e) {
    Exponents ex{};
    ex[static_cast<std::size_t>(v)] = e;
    return Monomial(ex);
}

unsigned Monomial::degree() const noexcept {
    // Pairwise lane sums; every partial sum fits its widened lane.
    const auto lo = static_cast<std::uint64_t>(bits_);
    const auto hi = static_cast<std::uint64_t>(bits_ >> 64);
    std::uint64_t x = (lo & 0x0000FFFF0000FFFFULL) + ((lo >> 16) & 0x0000FFFF0000FFFFULL) +
                      (hi & 0x0000FFFF0000FFFFULL) + ((hi >> 16) & 0x0000FFFF0000FFFFULL);
    return static_cast<unsigned>((x & 0xFFFFFFFFULL) + (x >> 32));
}

Exponents Monomial::exponents() const noexcept {
    Exponents e{};
    for (std::size_t i = 0; i < kNumVars; ++i) e[i] = exponent(kAllVars[i]);
    return e;
}

Monomial Monomial::operator*(Monomial rhs) const {
    // Both operands have every field <= kMaxExponent, so the sum cannot carry.
    const Bits sum = bits_ + rhs.bits_;
    if (sum & kHighBits) throw ExponentOverflow("monomial exponent exceeds " + std::to_string(kMaxExponent));
    return from_bits(sum);
}

Monomial Monomial::with_exponent(Var v, unsigned e) const {
    if (e > kMaxExponent) throw ExponentOverflow("exponent " + std::to_string(e));
    const Bits mask = Bits{0xFFFF} << shift(v);
    return from_bits((bits_ & ~mask) | (static_cast<Bits>(e) << shift(v)));
}

bool grlex_greater(Monomial lhs, Monomial rhs) noexcept {
    const unsigned dl = lhs.degree();
    const unsigned dr = rhs.degree();
    if (dl != dr) return dl > dr;
    return lhs.bits() > rhs.bits();
}

// --- accumulation -------------------------------------------------------------

const MPoly& rhs_power(int point, unsigned k);

/// Hash accumulator for building polynomials term by term.
class TermAccumulator {
public:
    explicit TermAccumulator(std::size_t expected = 0) { map_.reserve(expected); }

    void add(Monomial m, const mpz_class& c) { map_[m.bits()] += c; }

    void addmul(Monomial m, const mpz_class& lhs, const mpz_class& rhs) {
        mpz_addmul(map_[m.bits()].get_mpz_t(), lhs.get_mpz_t(), rhs.get_mpz_t());
    }

    /// Adds c*m after rewriting every yV^2 factor of m.
    void add_reduced(Monomial m, const mpz_class& c) {
        if ((m.bits() & kUnreducedY) == 0) {
            add(m, c);
            return;
        }
        for (int point = 0; point < 3; ++point) {
            const Var y = kYVars[point];
            const unsigned e = m.exponent(y);
            if (e < 2) continue;
            const Monomial base = m.with_exponent(y, e % 2);
            mpz_class scaled;
            for (const Term& t : rhs_power(point, e / 2).terms()) {
                if (t.coef == 1) {
                    add_reduced(base * t.mono, c);
                } else {
                    scaled = c * t.coef;
                    add_reduced(base * t.mono, scaled);
                }
            }
            return;
        }
    }

    void addmul_reduced(Monomial m, const mpz_class& lhs, const mpz_class& rhs) {
        if ((m.bits() & kUnreducedY) == 0) {
            addmul(m, lhs, rhs);
            return;
        }
        const mpz_class product = lhs * rhs;
        add_reduced(m, product);
    }

    MPoly finish() {
        std::vector<Term> terms;
        terms.reserve(map_.size());
        for (auto& [bits, coef] : map_) {
            if (sgn(coef) != 0) terms.push_back(Term{Monomial::from_bits(bits), std::move(coef)});
        }
        map_.clear();
        std::sort(terms.begin(), terms.end(), GrlexGreater{});
        note_size(terms.size());
        return MPoly(std::move(terms));
    }

private:
    absl::flat_hash_map<Bits, mpz_class, BitsHash> map_;
};

// --- MPoly --------------------------------------------------------------------

MPoly::MPoly(long constant) {
    if (constant != 0) terms_.push_back(Term{Monomial{}, mpz_class(constant)});
}

MPoly::MPoly(const mpz_class& constant) {
    if (sgn(constant) != 0) terms_.push_back(Term{Monomial{}, constant});
}

MPoly MPoly::var(Var v) {
    return monomial(Monomial::of(v));
}

MPoly MPoly::monomial(Monomial m, mpz_class c) {
    MPoly f;
    if (sgn(c) != 0) f.terms_.push_back(Term{m, std::move(c)});
    return f;
}

MPoly MPoly::build(std::vector<Term> terms) {
    TermAccumulator acc(terms.size());
    for (const Term& t : terms) acc.add(t.mono, t.coef);
    return acc.finish();
}

MPoly MPoly::build(std::initializer_list<std::pair<Exponents, long>> terms) {
    std::vector<Term> v;
    v.reserve(terms.size());
    for (const auto& [e, c] : terms) v.push_back(Term{Monomial(e), mpz_class(c)});
    return build(std::move(v));
}

bool MPoly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

unsigned MPoly::degree() const noexcept {
    // Leading term has the largest total degree.
    return terms_.empty() ? 0 : terms_.front().mono.degree();
}

unsigned MPoly::degree_in(Var v) const noexcept {
    unsigned d = 0;
    for (const Term& t : terms_) d = std::max(d, t.mono.exponent(v));
    return d;
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (Term& t : r.terms_) t.coef = -t.coef;
    return r;
}

namespace {

template <bool Subtract>
std::vector<Term> merge(const std::vector<Term>& lhs, const std::vector<Term>& rhs) {
    std::vector<Term> out;
    out.reserve(lhs.size() + rhs.size());
    auto i = lhs.begin();
    auto j = rhs.begin();
    while (i != lhs.end() && j != rhs.end()) {
        if (i->mono == j->mono) {
            mpz_class c = Subtract ? mpz_class(i->coef - j->coef) : mpz_class(i->coef + j->coef);
            if (sgn(c) != 0) out.push_back(Term{i->mono, std::move(c)});
            ++i;
            ++j;
        } else if (grlex_greater(i->mono, j->mono)) {
            out.push_back(*i++);
        } else {
            out.push_back(Subtract ? Term{j->mono, -j->coef} : *j);
            ++j;
        }
    }
    out.insert(out.end(), i, lhs.end());
    for (; j != rhs.end(); ++j) out.push_back(Subtract ? Term{j->mono, -j->coef} : *j);
    return out;
}

}  // namespace

MPoly& MPoly::operator+=(const MPoly& rhs) {
    terms_ = merge<false>(terms_, rhs.terms_);
    note_size(terms_.size());
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs) {
    terms_ = merge<true>(terms_, rhs.terms_);
    note_size(terms_.size());
    return *this;
}

MPoly& MPoly::operator*=(const MPoly& rhs) {
    return *this = *this * rhs;
}

MPoly operator*(const MPoly& lhs, const MPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    TermAccumulator acc(lhs.size() * rhs.size() / 2 + 1);
    for (const Term& s : lhs.terms_) {
        for (const Term& t : rhs.terms_) acc.addmul(s.mono * t.mono, s.coef, t.coef);
    }
    return acc.finish();
}

MPoly operator*(const mpz_class& c, const MPoly& f) {
    if (sgn(c) == 0) return {};
    MPoly r = f;
    for (Term& t : r.terms_) t.coef *= c;
    return r;
}

MPoly pow(const MPoly& f, unsigned n) {
    MPoly result(1);
    MPoly base = f;
    while (n != 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n != 0) base = base * base;
    }
    return result;
}

// --- text ---------------------------------------------------------------------

std::string to_string(const MPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : f.terms()) {
        const bool negative = sgn(t.coef) < 0;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const mpz_class magnitude = abs(t.coef);
        bool wrote = false;
        if (magnitude != 1 || t.mono.is_one()) {
            out += magnitude.get_str();
            wrote = true;
        }
        for (Var v : kAllVars) {
            const unsigned e = t.mono.exponent(v);
            if (e == 0) continue;
            if (wrote) out += '*';
            out += var_name(v);
            if (e != 1) {
                out += '^';
                out += std::to_string(e);
            }
            wrote = true;
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const MPoly& f) {
    return os << to_string(f);
}

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    MPoly parse() {
        MPoly f = parse_sum();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected character");
        return f;
    }

private:
    // sum := [+-] product {[+-] product}; product := power {* power};
    // power := atom [^ digits]; atom := digits | variable | ( sum )
    MPoly parse_sum() {
        std::vector<Term> monomials;  // single-term summands, merged once
        MPoly rest;
        skip_space();
        if (pos_ == text_.size()) fail("empty polynomial");
        int sign = 1;
        if (peek() == '-' || peek() == '+') sign = take() == '-' ? -1 : 1;
        for (;;) {
            MPoly term = parse_product();
            if (sign < 0) term = -term;
            if (term.size() == 1) {
                monomials.push_back(term.terms().front());
            } else {
                rest += term;
            }
            skip_space();
            if (pos_ == text_.size() || (peek() != '+' && peek() != '-')) break;
            sign = take() == '-' ? -1 : 1;
        }
        return MPoly::build(std::move(monomials)) + rest;
    }

    MPoly parse_product() {
        MPoly f = parse_power();
        for (;;) {
            skip_space();
            if (pos_ == text_.size() || peek() != '*') return f;
            ++pos_;
            f *= parse_power();
        }
    }

    MPoly parse_power() {
        MPoly base = parse_atom();
        skip_space();
        if (pos_ < text_.size() && peek() == '^') {
            ++pos_;
            skip_space();
            const std::string digits = read_digits();
            if (digits.size() > 9) fail("exponent too large");
            return pow(base, static_cast<unsigned>(std::stoul(digits)));
        }
        return base;
    }

    MPoly parse_atom() {
        skip_space();
        if (pos_ == text_.size()) fail("expected a term");
        if (std::isdigit(static_cast<unsigned char>(peek()))) return MPoly(mpz_class(read_digits()));
        if (peek() == '(') {
            ++pos_;
            MPoly inner = parse_sum();
            skip_space();
            if (pos_ == text_.size() || take() != ')') fail("expected ')'");
            return inner;
        }
        return MPoly::var(read_var());
    }

    std::string read_digits() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return std::string(text_.substr(start, pos_ - start));
    }

    Var read_var() {
        for (Var v : kAllVars) {
            const std::string_view name = var_name(v);
            if (text_.substr(pos_, name.size()) == name) {
                const std::size_t end = pos_ + name.size();
                // "a" must not swallow a longer identifier.
                if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) continue;
                pos_ = end;
                return v;
            }
        }
        fail("unknown variable");
    }

    char peek() const { return text_[pos_]; }
    char take() { return text_[pos_++]; }
    void skip_space() {
        while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + why);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

MPoly parse_mpoly(std::string_view text) {
    return PolyParser(text).parse();
}

std::uint64_t evaluate_mod(const MPoly& f, const std::array<std::uint64_t, kNumVars>& values,
                           std::uint64_t modulus) {
    std::array<std::vector<std::uint64_t>, kNumVars> powers;
    for (std::size_t i = 0; i < kNumVars; ++i) {
        const unsigned d = f.degree_in(kAllVars[i]);
        auto& p = powers[i];
        p.resize(d + 1);
        p[0] = 1 % modulus;
        for (unsigned e = 1; e <= d; ++e) p[e] = mul_mod(p[e - 1], values[i] % modulus, modulus);
    }
    unsigned __int128 sum = 0;
    for (const Term& t : f.terms()) {
        std::uint64_t v = mpz_fdiv_ui(t.coef.get_mpz_t(), modulus);
        for (std::size_t i = 0; i < kNumVars && v != 0; ++i) {
            const unsigned e = t.mono.exponent(kAllVars[i]);
            if (e != 0) v = mul_mod(v, powers[i][e], modulus);
        }
        sum = (sum + v) % modulus;
    }
    return static_cast<std::uint64_t>(sum);
}

// --- curve ideal --------------------------------------------------------------

namespace {

MPoly make_rhs(int point) {
    const MPoly x = MPoly::var(kXVars[point]);
    return x * x * x + MPoly::var(Var::a) * x + MPoly::var(Var::b);
}

}  // namespace

const MPoly& curve_rhs(int point) {
    static const std::array<MPoly, 3> kRhs{make_rhs(0), make_rhs(1), make_rhs(2)};
    return kRhs.at(static_cast<std::size_t>(point));
}

const MPoly& curve_generator(int point) {
    static const std::array<MPoly, 3> kGen = [] {
        std::array<MPoly, 3> g;
        for (int i = 0; i < 3; ++i) g[i] = pow(MPoly::var(kYVars[i]), 2) - curve_rhs(i);
        return g;
    }();
    return kGen.at(static_cast<std::size_t>(point));
}

const MPoly& rhs_power(int point, unsigned k) {
    if (k == 1) return curve_rhs(point);
    static std::mutex mutex;
    static std::map<std::pair<int, unsigned>, std::unique_ptr<MPoly>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{point, k}];
    if (!slot) slot = std::make_unique<MPoly>(pow(curve_rhs(point), k));
    return *slot;
}

MPoly normal_form(const MPoly& f) {
    TermAccumulator acc(f.size());
    for (const Term& t : f.terms()) acc.add_reduced(t.mono, t.coef);
    return acc.finish();
}

MPoly mul_nf(const MPoly& f, const MPoly& g) {
    if (f.is_zero() || g.is_zero()) return {};
    TermAccumulator acc(f.size() * g.size() / 2 + 1);
    for (const Term& s : f.terms()) {
        for (const Term& t : g.terms()) acc.addmul_reduced(s.mono * t.mono, s.coef, t.coef);
    }
    return acc.finish();
}

MPoly pow_nf(const MPoly& f, unsigned n) {
    MPoly result = normal_form(MPoly(1));
    MPoly base = normal_form(f);
    while (n != 0) {
        if (n & 1) result = mul_nf(result, base);
        n >>= 1;
        if (n != 0) base = mul_nf(base, base);
    }
    return result;
}

std::size_t peak_term_count() noexcept {
    return t_peak_terms;
}

void reset_peak_term_count() noexcept {
    t_peak_terms = 0;
}

}  // namespace ecgl

#include "ecgl/curve.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ecgl/errors.hpp"

namespace ecgl {

FpElement discriminant(const FpElement& a, const FpElement& b) {
    const Prime& p = a.modulus();
    return FpElement(4, p) * a * a * a + FpElement(27, p) * b * b;
}

namespace {

FpElement checked_discriminant(const FpElement& a, const FpElement& b) {
    FpElement d = discriminant(a, b);
    if (d.is_zero()) {
        std::ostringstream os;
        os << "singular curve: 4a^3 + 27b^2 = 0 for p=" << a.p() << ", a=" << a << ", b=" << b;
        throw SingularCurve(os.str());
    }
    return d;
}

}  // namespace

CurveParams::CurveParams(Prime p, std::uint64_t a, std::uint64_t b)
    : CurveParams(FpElement(a, p), FpElement(b, p)) {}

CurveParams::CurveParams(const FpElement& a, const FpElement& b) : a_(a), b_(b) {
    if (a.modulus() != b.modulus()) throw ModulusMismatch("curve coefficients from different fields");
    checked_discriminant(a_, b_);
}

FpElement CurveParams::rhs(const FpElement& x) const {
    return x * x * x + a_ * x + b_;
}

std::ostream& operator<<(std::ostream& os, const CurveParams& c) {
    return os << "y^2 = x^3 + " << c.a() << "x + " << c.b() << " over F_" << c.p();
}

bool is_on_curve(const CurveParams& curve, const FpElement& x, const FpElement& y) {
    return y * y == curve.rhs(x);
}

Point Point::affine(const CurveParams& curve, const FpElement& x, const FpElement& y) {
    if (!is_on_curve(curve, x, y)) {
        std::ostringstream os;
        os << "(" << x << "," << y << ") is not on " << curve;
        throw NotOnCurve(os.str());
    }
    return Point(curve, x, y);
}

Point Point::affine(const CurveParams& curve, std::uint64_t x, std::uint64_t y) {
    return affine(curve, curve.element(x), curve.element(y));
}

const FpElement& Point::x() const {
    if (!coords_) throw std::logic_error("x() of the point at infinity");
    return coords_->x;
}

const FpElement& Point::y() const {
    if (!coords_) throw std::logic_error("y() of the point at infinity");
    return coords_->y;
}

bool operator<(const Point& lhs, const Point& rhs) {
    if (lhs.is_infinity() || rhs.is_infinity()) return lhs.is_infinity() && !rhs.is_infinity();
    if (lhs.x() != rhs.x()) return lhs.x() < rhs.x();
    return lhs.y() < rhs.y();
}

std::string to_string(const Point& p) {
    if (p.is_infinity()) return "O";
    return std::to_string(p.x().residue()) + "," + std::to_string(p.y().residue());
}

std::ostream& operator<<(std::ostream& os, const Point& p) {
    return os << to_string(p);
}

namespace {

std::int64_t parse_integer(std::string_view text, std::string_view whole) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ParseError("bad point syntax '" + std::string(whole) + "', expected O or x,y");
    }
    return value;
}

}  // namespace

Point parse_point(const CurveParams& curve, std::string_view text) {
    if (text == "O" || text == "o") return Point::infinity(curve);
    const auto comma = text.find(',');
    if (comma == std::string_view::npos) {
        throw ParseError("bad point syntax '" + std::string(text) + "', expected O or x,y");
    }
    const auto x = parse_integer(text.substr(0, comma), text);
    const auto y = parse_integer(text.substr(comma + 1), text);
    return Point::affine(curve, FpElement::from_signed(x, curve.prime()),
                         FpElement::from_signed(y, curve.prime()));
}

Point negate(const Point& p) {
    if (p.is_infinity()) return p;
    return Point(p.curve_, p.coords_->x, -p.coords_->y);
}

Point add(const Point& lhs, const Point& rhs) {
    if (lhs.curve_ != rhs.curve_) throw CurveMismatch("adding points of different curves");
    // (a) O is neutral.
    if (lhs.is_infinity()) return rhs;
    if (rhs.is_infinity()) return lhs;

    const FpElement& xa = lhs.coords_->x;
    const FpElement& ya = lhs.coords_->y;
    const FpElement& xb = rhs.coords_->x;
    const FpElement& yb = rhs.coords_->y;

    // (b) B = -A.
    if (xa == xb && ya == -yb) return Point::infinity(lhs.curve_);

    // (c) chord or tangent slope.
    FpElement slope = xa;
    if (xa != xb) {
        slope = (ya - yb) * fp_inv(xa - xb);
    } else {
        // Equal x and not case (b) leaves only A = B, and then y != 0.
        if (ya != yb) throw std::logic_error("tangent branch reached with y_A != y_B");
        if (ya.is_zero()) throw std::logic_error("tangent branch reached with y = 0");
        const FpElement& a = lhs.curve_.a();
        slope = (FpElement(3, a.modulus()) * xa * xa + a) * fp_inv(ya + ya);
    }
    const FpElement x = slope * slope - xa - xb;
    const FpElement y = -ya + slope * (xa - x);
    return Point(lhs.curve_, x, y);
}

Point scalar_mul(std::uint64_t k, const Point& p) {
    Point acc = Point::infinity(p.curve());
    for (int bit = 63; bit >= 0; --bit) {
        acc = add(acc, acc);
        if ((k >> bit) & 1) acc = add(acc, p);
    }
    return acc;
}

std::vector<Point> enumerate_points(const CurveParams& curve) {
    if (curve.p() > kEnumerationLimit) {
        throw TooLarge("enumeration limited to p <= " + std::to_string(kEnumerationLimit) +
                       ", got " + std::to_string(curve.p()));
    }
    std::vector<Point> points{Point::infinity(curve)};
    for (std::uint64_t xv = 0; xv < curve.p(); ++xv) {
        const FpElement x = curve.element(xv);
        const FpElement r = curve.rhs(x);
        if (fp_legendre(r) < 0) continue;
        for (const FpElement& y : fp_sqrt(r)) points.push_back(Point::affine(curve, x, y));
    }
    return points;
}

}  // namespace ecgl

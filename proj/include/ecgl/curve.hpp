#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ecgl/field.hpp"

namespace ecgl {

/// 4a^3 + 27b^2 in F_p.
FpElement discriminant(const FpElement& a, const FpElement& b);

/// Short Weierstrass curve y^2 = x^3 + ax + b over F_p with nonzero
/// discriminant. Throws SingularCurve otherwise.
class CurveParams {
public:
    CurveParams(Prime p, std::uint64_t a, std::uint64_t b);
    CurveParams(const FpElement& a, const FpElement& b);

    const Prime& prime() const noexcept { return a_.modulus(); }
    std::uint64_t p() const noexcept { return a_.p(); }
    const FpElement& a() const noexcept { return a_; }
    const FpElement& b() const noexcept { return b_; }

    FpElement discriminant() const { return ecgl::discriminant(a_, b_); }
    FpElement element(std::uint64_t v) const { return FpElement(v, prime()); }
    /// x^3 + ax + b
    FpElement rhs(const FpElement& x) const;

    friend bool operator==(const CurveParams&, const CurveParams&) = default;

private:
    FpElement a_;
    FpElement b_;
};

std::ostream& operator<<(std::ostream& os, const CurveParams& c);

bool is_on_curve(const CurveParams& curve, const FpElement& x, const FpElement& y);

/// A point of E(F_p) including the point at infinity. Always tagged with its
/// curve; affine points are validated on construction.
class Point {
public:
    static Point infinity(const CurveParams& curve) { return Point(curve); }
    /// Throws NotOnCurve if (x, y) does not satisfy the curve equation.
    static Point affine(const CurveParams& curve, const FpElement& x, const FpElement& y);
    static Point affine(const CurveParams& curve, std::uint64_t x, std::uint64_t y);

    bool is_infinity() const noexcept { return !coords_.has_value(); }
    const FpElement& x() const;
    const FpElement& y() const;
    const CurveParams& curve() const noexcept { return curve_; }

    friend bool operator==(const Point&, const Point&) = default;
    /// O first, then ascending (x, y).
    friend bool operator<(const Point& lhs, const Point& rhs);

private:
    struct Affine {
        FpElement x;
        FpElement y;
        friend bool operator==(const Affine&, const Affine&) = default;
    };
    explicit Point(const CurveParams& curve) : curve_(curve) {}
    Point(const CurveParams& curve, const FpElement& x, const FpElement& y)
        : curve_(curve), coords_(Affine{x, y}) {}

    CurveParams curve_;
    std::optional<Affine> coords_;

    friend Point add(const Point&, const Point&);
    friend Point negate(const Point&);
};

std::string to_string(const Point& p);
std::ostream& operator<<(std::ostream& os, const Point& p);

/// Parses "O" or "x,y" (decimal, reduced mod p). Throws ParseError or NotOnCurve.
Point parse_point(const CurveParams& curve, std::string_view text);

Point negate(const Point& p);

/// The chord-and-tangent sum. Throws CurveMismatch for points on different curves.
Point add(const Point& lhs, const Point& rhs);

inline Point subtract(const Point& lhs, const Point& rhs) { return add(lhs, negate(rhs)); }

/// k-fold sum by left-to-right double-and-add.
Point scalar_mul(std::uint64_t k, const Point& p);

inline constexpr std::uint64_t kEnumerationLimit = 100'000;

/// All points in order O, then ascending (x, y). Throws TooLarge for p above
/// kEnumerationLimit.
std::vector<Point> enumerate_points(const CurveParams& curve);

}  // namespace ecgl

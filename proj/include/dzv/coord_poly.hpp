#pragma once

#include "dzv/rational.hpp"

#include <compare>
#include <map>
#include <string>

namespace dzv {

/// A coordinate on the prounipotent group: lambda_u for a single odd letter,
/// or mu_{u,v} (u < v) for a Lyndon pair. v == 0 encodes a lambda.
struct Coord {
    int u = 0;
    int v = 0;

    static Coord lambda(int w) { return {w, 0}; }
    static Coord mu(int u, int v) { return {u, v}; }

    bool is_lambda() const { return v == 0; }
    auto operator<=>(const Coord&) const = default;
    std::string str() const;
};

/// Polynomials over Q in the lambda/mu coordinates. Small and exact; used for
/// symbolic unipotent actions and Jacobian ranks.
class CoordPoly {
public:
    using Monomial = std::map<Coord, int>;  // coord -> exponent

    CoordPoly() = default;
    explicit CoordPoly(Rational c);
    static CoordPoly var(Coord x);

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    CoordPoly& operator+=(const CoordPoly& o);
    CoordPoly& operator-=(const CoordPoly& o);
    friend CoordPoly operator+(CoordPoly a, const CoordPoly& b) { return a += b; }
    friend CoordPoly operator-(CoordPoly a, const CoordPoly& b) { return a -= b; }
    friend CoordPoly operator*(const CoordPoly& a, const CoordPoly& b);
    CoordPoly& operator*=(const Rational& c);
    friend CoordPoly operator*(const Rational& c, CoordPoly p) { return p *= c; }
    bool operator==(const CoordPoly&) const = default;

    CoordPoly derivative(Coord x) const;
    Rational eval(const std::map<Coord, Rational>& point) const;

    /// Nonzero iff the polynomial is c * x for a single coordinate x with
    /// exponent 1; returns the pair via out-parameters.
    bool as_scaled_coord(Rational& c, Coord& x) const;
    /// True iff the polynomial is c * x^2 for a single coordinate.
    bool as_scaled_square(Rational& c, Coord& x) const;

    std::string str() const;

private:
    std::map<Monomial, Rational> terms_;  // zero coefficients never stored
};

}  // namespace dzv

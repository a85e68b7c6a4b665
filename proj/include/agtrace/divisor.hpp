#pragma once

#include <map>
#include <string>

#include "agtrace/curve.hpp"
#include "agtrace/poly.hpp"

namespace agtrace {

/// A place of the function field. Rational points give places of degree 1;
/// on P^1, monic irreducible polynomials of degree >= 2 give the places with
/// no rational representative (degree-1 polynomials are normalized to Point
/// places). FinitePoly places are not allowed on Weierstrass curves.
struct Place {
    enum class Kind { Point, FinitePoly, Infinity };

    Kind kind = Kind::Infinity;
    RationalPoint point;  // Kind::Point
    Poly poly;            // Kind::FinitePoly

    static Place at_point(RationalPoint p);
    static Place at_infinity() { return Place{}; }
    static Place finite_poly(Poly f);

    int degree() const {
        return kind == Kind::FinitePoly ? poly_deg(poly) : 1;
    }

    bool operator==(const Place& o) const = default;
    /// Canonical order: rational points, then polynomial places (degree,
    /// then coefficients), then infinity.
    bool operator<(const Place& o) const;

    std::string to_string() const;
};

/// Divisor: finite formal sum of places with nonzero integer coefficients.
class Divisor {
  public:
    explicit Divisor(CurveModel curve) : curve_(std::move(curve)) {}

    const CurveModel& curve() const { return curve_; }
    const std::map<Place, int>& coeffs() const { return coeffs_; }

    /// Adds k * place, validating the place against the curve: FinitePoly
    /// only on P^1 (monic irreducible), Point places on the curve, degree-1
    /// polynomials normalized to Point places. Zero coefficients vanish.
    void add_term(const Place& place, int k);

    int coefficient(const Place& place) const;
    int support_size() const { return static_cast<int>(coeffs_.size()); }
    bool empty() const { return coeffs_.empty(); }
    long long degree() const;

    Divisor plus(const Divisor& o) const;

    std::string to_string() const;

    bool operator==(const Divisor& o) const {
        return coeffs_ == o.coeffs_;
    }

  private:
    CurveModel curve_;
    std::map<Place, int> coeffs_;
};

struct SplitDivisor {
    Divisor plus;   // positive terms
    Divisor minus;  // negative terms
    int delta = 0;  // 1 iff the negative part is empty
};

/// G = G+ + G-, delta = 1 iff Supp(G-) is empty.
SplitDivisor split(const Divisor& g);

/// [G/q]: positive coefficients floor-divided by q, negative kept.
Divisor floor_div_q(const Divisor& g, int q);

/// Convenience: k * P_inf.
Divisor one_point_divisor(const CurveModel& c, int k);

/// Parses the CLI divisor syntax: terms "k*inf", "k*x=<x>" (P^1) or
/// "k*x=<x>:<y>" (Weierstrass), "k*poly=<c0,c1,...>" (P^1, monic
/// irreducible), joined by '+'/'-'; "0" is the zero divisor.
Divisor parse_divisor(const CurveModel& c, const std::string& spec);

}  // namespace agtrace

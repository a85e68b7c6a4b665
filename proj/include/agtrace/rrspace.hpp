#pragma once

#include <string>
#include <vector>

#include "agtrace/divisor.hpp"

namespace agtrace {

/// Element of the function field in curve-specific normal form.
///
/// P^1: num/den with den monic and gcd(num, den) = 1; zero is (0, 1).
/// Weierstrass: u(x) + v(x) y, reduced modulo the curve equation. The normal
/// form is unique per function, so equality is structural.
struct RationalFunction {
    enum class Kind { P1, Curve };

    Kind kind = Kind::P1;
    Poly num, den;  // P1
    Poly u, v;      // Weierstrass

    bool is_zero() const {
        return kind == Kind::P1 ? num.empty() : (u.empty() && v.empty());
    }
    bool is_constant() const {
        return kind == Kind::P1 ? (num.size() <= 1 && poly_deg(den) == 0)
                                : (u.size() <= 1 && v.empty());
    }

    bool operator==(const RationalFunction& o) const = default;

    std::string to_string() const;
};

RationalFunction rf_p1(const FieldTower& t, Poly num, Poly den);
RationalFunction rf_curve(Poly u, Poly v);
RationalFunction rf_constant(const CurveModel& c, Elem value);
RationalFunction rf_zero(const CurveModel& c);

RationalFunction rf_add(const CurveModel& c, const RationalFunction& f,
                        const RationalFunction& g);
RationalFunction rf_sub(const CurveModel& c, const RationalFunction& f,
                        const RationalFunction& g);
RationalFunction rf_mul(const CurveModel& c, const RationalFunction& f,
                        const RationalFunction& g);
RationalFunction rf_scale(const CurveModel& c, Elem a, const RationalFunction& f);
RationalFunction rf_pow(const CurveModel& c, const RationalFunction& f, long long e);

/// Exact value of f at a non-pole point. On P^1 the value at infinity is 0
/// when deg num < deg den and the leading-coefficient ratio when equal; on a
/// Weierstrass curve only constants can be evaluated at infinity.
Elem evaluate(const CurveModel& c, const RationalFunction& f, const RationalPoint& p);

/// Basis of L(G).
struct RRBasis {
    Divisor divisor;
    std::vector<RationalFunction> functions;

    int dim() const { return static_cast<int>(functions.size()); }
};

/// Riemann-Roch basis. On P^1 any supported divisor is accepted and the
/// basis is { z^j N/D } with D, N the positive/negative finite parts. On a
/// Weierstrass curve only one-point divisors k*P_inf are supported, with the
/// gap basis {x^i : 2i <= k} union {x^i y : 2i+3 <= k}, ordered by pole
/// order.
RRBasis rr_basis(const CurveModel& c, const Divisor& g);

/// Membership test (f) + G >= 0, P^1 only; exact divisibility bookkeeping.
bool verify_membership(const CurveModel& c, const RationalFunction& f, const Divisor& g);

}  // namespace agtrace

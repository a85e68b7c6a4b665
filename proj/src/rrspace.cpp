#include "agtrace/rrspace.hpp"

#include <algorithm>
#include <sstream>

namespace agtrace {

namespace {

void check_same_kind(const RationalFunction& f, const RationalFunction& g) {
    if (f.kind != g.kind) throw InvalidParameter("mixed function-field representations");
}

// y^2 = R(x) - A(x) y with A = a1 x + a3, R = x^3 + a2 x^2 + a4 x + a6.
Poly curve_a_poly(const CurveModel& c) {
    const auto& t = *c.tower();
    Poly a{c.a3(), c.a1()};
    poly_trim(a);
    (void)t;
    return a;
}

Poly curve_r_poly(const CurveModel& c) {
    Poly r{c.a6(), c.a4(), c.a2(), 1};
    return r;
}

}  // namespace

std::string RationalFunction::to_string() const {
    std::ostringstream os;
    if (kind == Kind::P1) {
        os << '(' << poly_to_string(num) << ")/(" << poly_to_string(den) << ')';
    } else {
        os << '(' << poly_to_string(u) << ")+(" << poly_to_string(v) << ")*y";
    }
    return os.str();
}

RationalFunction rf_p1(const FieldTower& t, Poly num, Poly den) {
    poly_trim(num);
    poly_trim(den);
    if (den.empty()) throw DivisionByZero("rational function with zero denominator");
    if (num.empty()) return RationalFunction{RationalFunction::Kind::P1, {}, {1}, {}, {}};
    Poly g = poly_gcd(t, num, den);
    if (poly_deg(g) > 0) {
        num = poly_div_exact(t, num, g);
        den = poly_div_exact(t, den, g);
    }
    const Elem lead_inv = t.inv(den.back());
    den = poly_scale(t, lead_inv, den);
    num = poly_scale(t, lead_inv, num);
    return RationalFunction{RationalFunction::Kind::P1, std::move(num), std::move(den), {}, {}};
}

RationalFunction rf_curve(Poly u, Poly v) {
    poly_trim(u);
    poly_trim(v);
    return RationalFunction{RationalFunction::Kind::Curve, {}, {}, std::move(u), std::move(v)};
}

RationalFunction rf_constant(const CurveModel& c, Elem value) {
    if (c.kind() == CurveModel::Kind::ProjectiveLine)
        return rf_p1(*c.tower(), poly_constant(value), {1});
    return rf_curve(poly_constant(value), {});
}

RationalFunction rf_zero(const CurveModel& c) { return rf_constant(c, 0); }

RationalFunction rf_add(const CurveModel& c, const RationalFunction& f,
                        const RationalFunction& g) {
    check_same_kind(f, g);
    const auto& t = *c.tower();
    if (f.kind == RationalFunction::Kind::P1) {
        Poly num = poly_add(t, poly_mul(t, f.num, g.den), poly_mul(t, g.num, f.den));
        Poly den = poly_mul(t, f.den, g.den);
        return rf_p1(t, std::move(num), std::move(den));
    }
    return rf_curve(poly_add(t, f.u, g.u), poly_add(t, f.v, g.v));
}

RationalFunction rf_sub(const CurveModel& c, const RationalFunction& f,
                        const RationalFunction& g) {
    return rf_add(c, f, rf_scale(c, c.tower()->neg(1), g));
}

RationalFunction rf_mul(const CurveModel& c, const RationalFunction& f,
                        const RationalFunction& g) {
    check_same_kind(f, g);
    const auto& t = *c.tower();
    if (f.kind == RationalFunction::Kind::P1)
        return rf_p1(t, poly_mul(t, f.num, g.num), poly_mul(t, f.den, g.den));
    // (u1 + v1 y)(u2 + v2 y) with y^2 = R - A y
    const Poly A = curve_a_poly(c), R = curve_r_poly(c);
    const Poly vv = poly_mul(t, f.v, g.v);
    Poly u = poly_add(t, poly_mul(t, f.u, g.u), poly_mul(t, vv, R));
    Poly v = poly_add(t, poly_mul(t, f.u, g.v), poly_mul(t, g.u, f.v));
    v = poly_sub(t, v, poly_mul(t, vv, A));
    return rf_curve(std::move(u), std::move(v));
}

RationalFunction rf_scale(const CurveModel& c, Elem a, const RationalFunction& f) {
    const auto& t = *c.tower();
    if (f.kind == RationalFunction::Kind::P1) return rf_p1(t, poly_scale(t, a, f.num), f.den);
    return rf_curve(poly_scale(t, a, f.u), poly_scale(t, a, f.v));
}

RationalFunction rf_pow(const CurveModel& c, const RationalFunction& f, long long e) {
    if (e < 0) throw InvalidParameter("negative function power");
    RationalFunction r = rf_constant(c, 1);
    RationalFunction b = f;
    while (e) {
        if (e & 1) r = rf_mul(c, r, b);
        b = rf_mul(c, b, b);
        e >>= 1;
    }
    return r;
}

Elem evaluate(const CurveModel& c, const RationalFunction& f, const RationalPoint& p) {
    const auto& t = *c.tower();
    if (f.kind == RationalFunction::Kind::P1) {
        if (!p.at_infinity) {
            const Elem d = poly_eval(t, f.den, p.x);
            if (d == 0) throw PoleAtPoint("pole at x=" + std::to_string(p.x));
            return t.div(poly_eval(t, f.num, p.x), d);
        }
        const int dn = poly_deg(f.num), dd = poly_deg(f.den);
        if (dn < dd) return 0;
        if (dn == dd) return t.div(f.num.back(), f.den.back());
        throw PoleAtPoint("pole at infinity");
    }
    if (p.at_infinity) {
        if (f.is_zero()) return 0;
        if (f.is_constant()) return f.u[0];
        throw PoleAtPoint("pole at infinity");
    }
    return t.add(poly_eval(t, f.u, p.x), t.mul(poly_eval(t, f.v, p.x), p.y));
}

RRBasis rr_basis(const CurveModel& c, const Divisor& g) {
    const auto& t = *c.tower();
    RRBasis basis{g, {}};

    if (c.kind() == CurveModel::Kind::ProjectiveLine) {
        Poly D{1}, N{1};
        long long n_inf = 0;
        for (const auto& [pl, k] : g.coeffs()) {
            if (pl.kind == Place::Kind::Infinity) {
                n_inf = k;
                continue;
            }
            const Poly pq = pl.kind == Place::Kind::Point
                                ? Poly{t.neg(pl.point.x), 1}
                                : pl.poly;
            if (k > 0)
                D = poly_mul(t, D, poly_pow(t, pq, k));
            else
                N = poly_mul(t, N, poly_pow(t, pq, -k));
        }
        const long long jmax = n_inf + poly_deg(D) - poly_deg(N);
        for (long long j = 0; j <= jmax; ++j) {
            Poly zj(static_cast<size_t>(j) + 1, 0);
            zj.back() = 1;
            basis.functions.push_back(rf_p1(t, poly_mul(t, zj, N), D));
        }
        if (g.degree() >= 0 &&
            static_cast<long long>(basis.functions.size()) != g.degree() + 1)
            throw InternalError("P^1 Riemann-Roch dimension mismatch");
        return basis;
    }

    // Weierstrass: only k * P_inf
    int k = 0;
    for (const auto& [pl, kk] : g.coeffs()) {
        if (pl.kind != Place::Kind::Infinity)
            throw UnsupportedDivisor(
                "Weierstrass Riemann-Roch supports only one-point divisors at infinity");
        k = kk;
    }
    if (k < 0) return basis;
    struct Gen {
        int pole_order;
        int i;
        bool with_y;
    };
    std::vector<Gen> gens;
    for (int i = 0; 2 * i <= k; ++i) gens.push_back({2 * i, i, false});
    for (int i = 0; 2 * i + 3 <= k; ++i) gens.push_back({2 * i + 3, i, true});
    std::sort(gens.begin(), gens.end(),
              [](const Gen& a, const Gen& b) { return a.pole_order < b.pole_order; });
    for (const auto& gen : gens) {
        Poly xi(static_cast<size_t>(gen.i) + 1, 0);
        xi.back() = 1;
        if (gen.with_y)
            basis.functions.push_back(rf_curve({}, xi));
        else
            basis.functions.push_back(rf_curve(xi, {}));
    }
    const int expect = k == 0 ? 1 : k;
    if (basis.dim() != expect) throw InternalError("Weierstrass gap basis size mismatch");
    return basis;
}

bool verify_membership(const CurveModel& c, const RationalFunction& f, const Divisor& g) {
    if (c.kind() != CurveModel::Kind::ProjectiveLine)
        throw Unsupported("membership test is a P^1 utility");
    if (f.is_zero()) return true;
    const auto& t = *c.tower();
    Poly D{1}, N{1};
    long long n_inf = 0;
    for (const auto& [pl, k] : g.coeffs()) {
        if (pl.kind == Place::Kind::Infinity) {
            n_inf = k;
            continue;
        }
        const Poly pq =
            pl.kind == Place::Kind::Point ? Poly{t.neg(pl.point.x), 1} : pl.poly;
        if (k > 0)
            D = poly_mul(t, D, poly_pow(t, pq, k));
        else
            N = poly_mul(t, N, poly_pow(t, pq, -k));
    }
    if (!poly_divides(t, f.den, D)) return false;
    if (!poly_divides(t, N, f.num)) return false;
    return poly_deg(f.num) - poly_deg(f.den) <= n_inf;
}

}  // namespace agtrace

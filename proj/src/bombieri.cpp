#include "agtrace/bombieri.hpp"

#include <cmath>
#include <numbers>

#include "agtrace/linalg.hpp"

namespace agtrace {

namespace {

bool is_p1_polynomial(const RationalFunction& f) {
    return f.kind == RationalFunction::Kind::P1 && poly_deg(f.den) == 0;
}

void expand_poly_coords(const FieldTower& t, const Poly& f, std::size_t max_deg,
                        std::vector<Elem>& out) {
    // digit expansion of each big-field coefficient into rm prime-field slots
    const std::size_t rm = static_cast<std::size_t>(t.ext_degree());
    out.assign((max_deg + 1) * rm, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto digits = t.coeffs(f[i]);
        for (std::size_t e = 0; e < rm; ++e)
            out[i * rm + e] = static_cast<Elem>(digits[e]);
    }
}

// Number of distinct zeros of f over the algebraic closure: the degree of
// its squarefree part.
long long count_distinct_closure_zeros(const FieldTower& t, const Poly& f) {
    if (poly_deg(f) < 1) return 0;
    long long s = 0;
    for (const auto& [e, u] : poly_squarefree_decomposition(t, f)) s += poly_deg(u);
    return s;
}

}  // namespace

bool is_artin_schreier_degenerate(const CurveModel& c, const RationalFunction& f) {
    if (c.kind() != CurveModel::Kind::ProjectiveLine || !is_p1_polynomial(f))
        throw Unsupported("degeneracy test supports polynomial f on P^1 only");
    const auto& t = *c.tower();
    const Poly fpoly = f.num;  // den is a nonzero constant == 1 in normal form
    const int d = poly_deg(fpoly);
    if (d <= 0) return true;  // constants: h = 0, shift c

    const int p = t.p();
    const int B = (d + p - 1) / p;
    const std::size_t rm = static_cast<std::size_t>(t.ext_degree());
    const std::size_t max_deg = static_cast<std::size_t>(p) * B;
    const std::size_t nrows = (max_deg + 1) * rm;

    // columns: phi(x^i * unit_e) for i <= B, plus constant units (the shift c)
    Mat sys(nrows, (static_cast<std::size_t>(B) + 2) * rm);
    std::vector<Elem> col;
    std::size_t cidx = 0;
    for (int i = 0; i <= B; ++i) {
        for (std::size_t e = 0; e < rm; ++e, ++cidx) {
            Elem a = 1;
            for (std::size_t k = 0; k < e; ++k) a *= static_cast<Elem>(p);  // packed x^e
            Poly h(static_cast<std::size_t>(i) + 1, 0);
            h.back() = a;
            // h^p - h: monomial power is a^p x^{ip}
            Poly hp(static_cast<std::size_t>(i) * p + 1, 0);
            hp.back() = t.pow(a, p);
            const Poly img = poly_sub(t, hp, h);
            expand_poly_coords(t, img, max_deg, col);
            for (std::size_t rrow = 0; rrow < nrows; ++rrow) sys.at(rrow, cidx) = col[rrow];
        }
    }
    for (std::size_t e = 0; e < rm; ++e, ++cidx) {
        Elem a = 1;
        for (std::size_t k = 0; k < e; ++k) a *= static_cast<Elem>(p);
        expand_poly_coords(t, poly_constant(a), max_deg, col);
        for (std::size_t rrow = 0; rrow < nrows; ++rrow) sys.at(rrow, cidx) = col[rrow];
    }

    Mat target(nrows, 1);
    expand_poly_coords(t, fpoly, max_deg, col);
    for (std::size_t rrow = 0; rrow < nrows; ++rrow) target.at(rrow, 0) = col[rrow];

    return solve_batch(t, sys, target).has_value();
}

CharSumResult char_sum_check(const CurveModel& c, const RationalFunction& f) {
    const auto& t = *c.tower();
    const bool testable =
        c.kind() == CurveModel::Kind::ProjectiveLine && is_p1_polynomial(f);
    if (testable && is_artin_schreier_degenerate(c, f))
        throw DegenerateInput("f is of the form h^p - h (plus a constant)");
    if (c.kind() == CurveModel::Kind::ProjectiveLine &&
        f.kind != RationalFunction::Kind::P1)
        throw InvalidParameter("function does not live on the curve");

    CharSumResult res;
    res.counts.assign(t.p(), 0);

    bool pole_at_inf = false;
    if (f.kind == RationalFunction::Kind::P1) {
        const int dn = poly_deg(f.num), dd = poly_deg(f.den);
        pole_at_inf = dn > dd;
        res.d_inf = dd + std::max(0, dn - dd);
        // poles counted over the closure: distinct zeros of the denominator
        // plus the point at infinity when the numerator degree dominates
        res.t_poles = count_distinct_closure_zeros(t, f.den) + (pole_at_inf ? 1 : 0);
    } else {
        // u + v y on a Weierstrass model: poles only at infinity, of order
        // max(2 deg u, 3 + 2 deg v); f constant would be degenerate.
        pole_at_inf = !f.is_constant();
        long long ord = 0;
        if (!f.u.empty()) ord = std::max(ord, 2LL * poly_deg(f.u));
        if (!f.v.empty()) ord = std::max(ord, 3 + 2LL * poly_deg(f.v));
        res.d_inf = ord;
        res.t_poles = pole_at_inf ? 1 : 0;
    }

    const auto points = rational_points(c);
    res.n_points = static_cast<long long>(points.size());
    for (const auto& pt : points) {
        if (pt.at_infinity && pole_at_inf) {
            ++res.skipped;
            continue;
        }
        if (!pt.at_infinity && f.kind == RationalFunction::Kind::P1 &&
            poly_eval(t, f.den, pt.x) == 0) {
            ++res.skipped;
            continue;
        }
        const Elem a = t.trace_to_prime(evaluate(c, f, pt));
        ++res.counts[a];
    }

    const long long factor = 2 * c.genus() - 2 + res.t_poles + res.d_inf;
    res.bound_sq = factor <= 0 ? 0 : factor * factor * static_cast<long long>(t.size());

    if (t.p() == 2) {
        const long long s = res.counts[0] - res.counts[1];
        res.sum_sq_exact = s * s;
        res.sum_abs = std::sqrt(static_cast<double>(res.sum_sq_exact));
        res.pass = res.sum_sq_exact <= res.bound_sq;
    } else {
        double re = 0.0, im = 0.0;
        for (int a = 0; a < t.p(); ++a) {
            const double ang = 2.0 * std::numbers::pi * a / t.p();
            re += static_cast<double>(res.counts[a]) * std::cos(ang);
            im += static_cast<double>(res.counts[a]) * std::sin(ang);
        }
        res.sum_abs = std::hypot(re, im);
        const double bound = std::sqrt(static_cast<double>(res.bound_sq));
        res.pass = res.sum_abs <= bound * (1.0 + 1e-6) + 1e-9;
    }
    return res;
}

}  // namespace agtrace

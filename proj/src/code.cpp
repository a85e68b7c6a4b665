#include "agtrace/code.hpp"

#include <algorithm>
#include <set>

namespace agtrace {

namespace {

std::set<RationalPoint> support_points(const Divisor& g) {
    std::set<RationalPoint> pts;
    for (const auto& [pl, k] : g.coeffs()) {
        if (pl.kind == Place::Kind::Point) pts.insert(pl.point);
        if (pl.kind == Place::Kind::Infinity) pts.insert(RationalPoint::infinity());
    }
    return pts;
}

}  // namespace

AGCode build_code(const CurveModel& c, const Divisor& g,
                  const std::optional<std::vector<RationalPoint>>& d,
                  bool drop_negative_support) {
    const auto& t = *c.tower();
    const auto s = split(g);
    const auto plus_pts = support_points(s.plus);

    std::vector<RationalPoint> points;
    if (d.has_value()) {
        points = *d;
        std::set<RationalPoint> seen;
        for (const auto& p : points) {
            if (!p.at_infinity && c.kind() == CurveModel::Kind::Weierstrass &&
                !c.on_curve(p.x, p.y))
                throw InvalidParameter("evaluation point does not lie on the curve");
            if (!p.at_infinity && p.x >= t.size())
                throw InvalidParameter("evaluation point outside the field");
            if (!seen.insert(p).second)
                throw InvalidParameter("duplicate evaluation point");
            if (plus_pts.count(p))
                throw PointInSupport("evaluation point lies in Supp(G+)");
        }
    } else {
        const auto minus_pts =
            drop_negative_support ? support_points(s.minus) : std::set<RationalPoint>{};
        for (const auto& p : rational_points(c)) {
            if (plus_pts.count(p)) continue;
            if (drop_negative_support && minus_pts.count(p)) continue;
            points.push_back(p);
        }
    }

    if (g.degree() >= static_cast<long long>(points.size()))
        throw DegreeTooLarge("deg G must be smaller than the number of evaluation points");

    AGCode code{c, g, std::move(points), rr_basis(c, g), Mat{}};
    const int k = code.k(), n = code.n();
    code.gen_matrix = Mat(k, n);
    for (int i = 0; i < k; ++i)
        for (int l = 0; l < n; ++l)
            code.gen_matrix.at(i, l) = evaluate(c, code.basis.functions[i], code.points[l]);

    // Evaluation is injective on L(G) when deg G < n, so the basis rows are
    // independent; with 2g-2 < deg G this pins rank = deg G + 1 - g.
    if (k > 0) {
        const auto r = rank(t, code.gen_matrix);
        if (r != static_cast<std::size_t>(k))
            throw InternalError("generator matrix rank does not match dim L(G)");
        if (g.degree() > 2 * c.genus() - 2 &&
            static_cast<long long>(r) != g.degree() + 1 - c.genus())
            throw InternalError("Riemann-Roch rank mismatch");
    }
    return code;
}

TraceCode trace_code(const AGCode& code) {
    const auto& t = *code.curve.tower();
    const auto& betas = t.subfield_basis();
    const int k = code.k(), n = code.n(), m = t.m();

    TraceCode tc;
    tc.trace_matrix = Mat(static_cast<std::size_t>(m) * k, n);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < m; ++j)
            for (int l = 0; l < n; ++l)
                tc.trace_matrix.at(static_cast<std::size_t>(i) * m + j, l) =
                    t.trace_to_subfield(t.mul(betas[j], code.gen_matrix.at(i, l)));
    tc.dim = static_cast<long long>(rank(t, tc.trace_matrix));
    if (tc.dim < k || tc.dim > static_cast<long long>(m) * k)
        throw InternalError("trace code dimension outside [k, mk]");
    return tc;
}

KernelSpaces kernel_and_spaces(const AGCode& code, const TraceCode& tc) {
    const auto& c = code.curve;
    const auto& t = *c.tower();
    const int k = code.k(), n = code.n(), m = t.m();
    const std::size_t mk = static_cast<std::size_t>(m) * k;

    KernelSpaces ks;

    // K: left null space of the trace matrix, computed from the transpose.
    ks.kernel.ambient = mk;
    ks.kernel.basis = null_space(t, transpose(tc.trace_matrix));

    // E: span of phi(beta_j h_s) for the L([G/q]) basis {h_s}, phi(h) = h^q - h,
    // expressed in the F_q-coordinates of C by solving the evaluation system.
    const Divisor floor_g = floor_div_q(code.divisor, static_cast<int>(t.q()));
    const RRBasis hbasis = rr_basis(c, floor_g);
    const auto& betas = t.subfield_basis();
    const int kq = hbasis.dim();

    Mat targets(n, static_cast<std::size_t>(m) * kq);
    for (int s = 0; s < kq; ++s) {
        for (int j = 0; j < m; ++j) {
            const RationalFunction bh = rf_scale(c, betas[j], hbasis.functions[s]);
            const RationalFunction img = rf_sub(c, rf_pow(c, bh, t.q()), bh);
            for (int l = 0; l < n; ++l)
                targets.at(l, static_cast<std::size_t>(s) * m + j) =
                    evaluate(c, img, code.points[l]);
        }
    }
    Mat evecs = transpose(code.gen_matrix);  // n x k
    const auto sol = solve_batch(t, evecs, targets);
    if (!sol.has_value())
        throw CoordinateSolveFailed("phi image does not lie in L(G)");

    Mat evec_rows(static_cast<std::size_t>(m) * kq, mk);
    for (std::size_t col = 0; col < sol->cols; ++col) {
        for (int i = 0; i < k; ++i) {
            const auto coords = t.to_subfield_coords(sol->at(i, col));
            for (int j = 0; j < m; ++j)
                evec_rows.at(col, static_cast<std::size_t>(i) * m + j) = coords[j];
        }
    }
    ks.artin_schreier = row_space(t, evec_rows);
    ks.artin_schreier.ambient = mk;

    ks.eq3_holds = static_cast<long long>(mk) ==
                   tc.dim + static_cast<long long>(ks.kernel.dim());
    ks.e_subset_k = subspace_subset(t, ks.artin_schreier, ks.kernel);
    return ks;
}

KernelSpaces kernel_and_spaces(const AGCode& code) {
    return kernel_and_spaces(code, trace_code(code));
}

long long prop1_dim_e(const Divisor& g) {
    const auto s = split(g);
    if (s.minus.support_size() > 1)
        throw ConditionOneViolated("#Supp(G-) must be <= 1");
    const auto& t = *g.curve().tower();
    const Divisor floor_g = floor_div_q(g, static_cast<int>(t.q()));
    const long long dim_l = rr_basis(g.curve(), floor_g).dim();
    return static_cast<long long>(t.m()) * dim_l - s.delta;
}

bool delsarte_check(const AGCode& code, const TraceCode& tc) {
    const auto& t = *code.curve.tower();
    const int k = code.k(), n = code.n(), m = t.m();

    // (Tr C)^perp over F_q.
    const Mat lhs = null_space(t, tc.trace_matrix);

    // (C^perp)|_{F_q}: v in F_q^n with gen_matrix v = 0 over F_{q^m}, each
    // big-field equation expanded into m equations over F_q.
    Mat expanded(static_cast<std::size_t>(k) * m, n);
    for (int i = 0; i < k; ++i)
        for (int l = 0; l < n; ++l) {
            const auto coords = t.to_subfield_coords(code.gen_matrix.at(i, l));
            for (int j = 0; j < m; ++j)
                expanded.at(static_cast<std::size_t>(i) * m + j, l) = coords[j];
        }
    const Mat rhs = null_space(t, expanded);
    return lhs == rhs;
}

bool delsarte_check(const AGCode& code) { return delsarte_check(code, trace_code(code)); }

}  // namespace agtrace

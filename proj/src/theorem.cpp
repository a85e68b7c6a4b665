#include "agtrace/theorem.hpp"

#include <sstream>

#include "json.hpp"

namespace agtrace {

namespace {

// sign of X - Y * sqrt(Q) in exact arithmetic (Q > 0, not a perfect-square
// assumption needed: comparisons go through squaring with sign guards).
int cmp_against_sqrt(long long X, long long Y, long long Q) {
    const __int128 x2 = static_cast<__int128>(X) * X;
    const __int128 y2q = static_cast<__int128>(Y) * Y * Q;
    if (Y >= 0 && X <= 0) {
        if (X == 0 && Y == 0) return 0;
        return -1;
    }
    if (Y <= 0 && X >= 0) {
        if (X == 0 && Y == 0) return 0;
        return 1;
    }
    if (X > 0) {  // both positive
        if (x2 > y2q) return 1;
        if (x2 < y2q) return -1;
        return 0;
    }
    // both negative: X > Y sqrt(Q) iff |X| < |Y| sqrt(Q)
    if (x2 < y2q) return 1;
    if (x2 > y2q) return -1;
    return 0;
}

}  // namespace

Hypotheses check_hypotheses(const CurveModel& c, const Divisor& g) {
    return check_hypotheses(c, g, static_cast<long long>(rational_points(c).size()));
}

Hypotheses check_hypotheses(const CurveModel& c, const Divisor& g, long long n_points) {
    const auto& t = *c.tower();
    const auto s = split(g);
    Hypotheses h;
    const Divisor floor_g = floor_div_q(g, static_cast<int>(t.q()));
    h.h0 = 2 * c.genus() - 2 <= floor_g.degree();
    h.c1 = s.minus.support_size() <= 1;
    const long long A = 2 * c.genus() - 2 + s.plus.degree();
    const long long S = s.plus.support_size();
    h.c2 = cmp_against_sqrt(n_points - S, A + S, t.size()) > 0;
    return h;
}

long long predicted_dimension(const Divisor& g, const FieldTower& t) {
    const auto s = split(g);
    const Divisor floor_g = floor_div_q(g, static_cast<int>(t.q()));
    return static_cast<long long>(t.m()) * (g.degree() - floor_g.degree()) + s.delta;
}

KRange corollary_k_range(int genus, const FieldTower& t) {
    if (genus != 0 && genus != 1) throw InvalidParameter("corollary range needs genus 0 or 1");
    KRange range;
    range.lo = std::max<long long>((2 * genus - 2) * static_cast<long long>(t.q()), 0);
    auto ok = [&](long long k) {
        const long long v = k + 4 * genus - 1;
        if (v < 0) return true;
        return static_cast<__int128>(v) * v < static_cast<__int128>(t.size());
    };
    if (!ok(range.lo)) {
        range.hi = range.lo - 1;
        return range;
    }
    long long k = range.lo;
    while (ok(k + 1)) ++k;
    range.hi = k;
    return range;
}

GoppaCase goppa_case(const Poly& g_poly, const FieldTower& t) {
    if (poly_is_zero(g_poly)) throw InvalidParameter("Goppa polynomial must be nonzero");
    for (Elem x = 0; x < t.size(); ++x)
        if (poly_eval(t, g_poly, x) == 0)
            throw HasRationalZero("Goppa polynomial has a zero in F_{q^m}");

    GoppaCase gc;
    const long long q = t.q();
    if (poly_deg(g_poly) > 0) {
        for (const auto& [e, u] : poly_squarefree_decomposition(t, g_poly)) {
            const long long du = poly_deg(u);
            gc.r1 += (e / q) * du;
            gc.r2 += (e % q) * du;
            gc.s += du;
        }
    }
    const long long X = poly_deg(g_poly) + 2 * gc.s - 2;
    // deg g + 2s < (q^m + 1)/q^{m/2} + 2  <=>  X * q^{m/2} < q^m + 1
    const long long qm = t.size();
    gc.valid = X < 0 || static_cast<__int128>(X) * X * qm <
                            static_cast<__int128>(qm + 1) * (qm + 1);
    gc.predicted = static_cast<long long>(t.m()) * ((q - 1) * gc.r1 + gc.r2);
    return gc;
}

Divisor goppa_divisor(const CurveModel& c, const std::vector<std::pair<Poly, int>>& factors) {
    Divisor g(c);
    for (const auto& [f, e] : factors) g.add_term(Place::finite_poly(f), e);
    g.add_term(Place::at_infinity(), -1);
    return g;
}

TheoremReport verify(const CurveModel& c, const Divisor& g, bool drop_zero_columns) {
    const auto& t = *c.tower();
    TheoremReport rep;
    rep.p = t.p();
    rep.r = t.r();
    rep.m = t.m();
    rep.q = t.q();
    rep.curve_str = c.to_string();
    rep.divisor_str = g.to_string();
    rep.genus = c.genus();

    const auto points = rational_points(c);
    rep.hasse_weil_ok = hasse_weil_check(static_cast<long long>(points.size()), c.genus(), t);

    const AGCode code = build_code(c, g, std::nullopt, drop_zero_columns);
    const TraceCode tc = trace_code(code);
    const KernelSpaces ks = kernel_and_spaces(code, tc);

    rep.n = code.n();
    rep.k = code.k();
    rep.delta = split(g).delta;
    const auto hyp = check_hypotheses(c, g, static_cast<long long>(points.size()));
    rep.h0 = hyp.h0;
    rep.c1 = hyp.c1;
    rep.c2 = hyp.c2;

    rep.predicted = predicted_dimension(g, t);
    rep.computed = tc.dim;
    rep.dim_k = static_cast<long long>(ks.kernel.dim());
    rep.dim_e = static_cast<long long>(ks.artin_schreier.dim());
    rep.k_equals_e = ks.kernel == ks.artin_schreier;
    rep.match = rep.predicted == rep.computed;

    // Formula applicability: both Riemann-Roch substitutions must be exact.
    const Divisor floor_g = floor_div_q(g, static_cast<int>(t.q()));
    const long long dim_lg = code.basis.dim();
    const long long dim_lfloor = rr_basis(c, floor_g).dim();
    rep.boundary = dim_lg != g.degree() + 1 - c.genus() ||
                   dim_lfloor != floor_g.degree() + 1 - c.genus();

    rep.eq3 = ks.eq3_holds;
    rep.e_in_k = ks.e_subset_k;
    rep.bounds_ok = rep.k <= rep.computed &&
                    rep.computed <= static_cast<long long>(rep.m) * rep.k;
    rep.prop1_ok = !rep.c1 || rep.dim_e == prop1_dim_e(g);
    rep.delsarte_ok = delsarte_check(code, tc);
    return rep;
}

std::string report_csv_header() {
    return "p,q,m,curve,G,n,genus,h0,c1,c2,predicted,computed,dimK,dimE,KeqE,match";
}

namespace {

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

}  // namespace

std::string report_csv_row(const TheoremReport& rep) {
    std::ostringstream os;
    os << rep.p << ',' << rep.q << ',' << rep.m << ',' << csv_quote(rep.curve_str) << ','
       << csv_quote(rep.divisor_str) << ',' << rep.n << ',' << rep.genus << ',' << rep.h0
       << ',' << rep.c1 << ',' << rep.c2 << ',' << rep.predicted << ',' << rep.computed
       << ',' << rep.dim_k << ',' << rep.dim_e << ',' << rep.k_equals_e << ',' << rep.match;
    return os.str();
}

std::string report_json(const TheoremReport& rep) {
    nlohmann::ordered_json j;
    j["p"] = rep.p;
    j["q"] = rep.q;
    j["m"] = rep.m;
    j["curve"] = rep.curve_str;
    j["G"] = rep.divisor_str;
    j["n"] = rep.n;
    j["genus"] = rep.genus;
    j["h0"] = rep.h0;
    j["c1"] = rep.c1;
    j["c2"] = rep.c2;
    j["predicted"] = rep.predicted;
    j["computed"] = rep.computed;
    j["dimK"] = rep.dim_k;
    j["dimE"] = rep.dim_e;
    j["KeqE"] = rep.k_equals_e;
    j["match"] = rep.match;
    return j.dump();
}

std::string report_text(const TheoremReport& rep) {
    std::ostringstream os;
    os << "instance: p=" << rep.p << " q=" << rep.q << " m=" << rep.m
       << " curve=" << rep.curve_str << " G=" << rep.divisor_str << "\n"
       << "  n=" << rep.n << " k=" << rep.k << " genus=" << rep.genus
       << " delta=" << rep.delta << "\n"
       << "  hypotheses: h0=" << rep.h0 << " c1=" << rep.c1 << " c2=" << rep.c2;
    if (rep.boundary) os << " (boundary: Riemann-Roch formula not exact here)";
    os << "\n"
       << "  predicted=" << rep.predicted << " computed=" << rep.computed
       << " match=" << rep.match << "\n"
       << "  dimK=" << rep.dim_k << " dimE=" << rep.dim_e << " K==E=" << rep.k_equals_e
       << "\n"
       << "  invariants: eq3=" << rep.eq3 << " E<=K=" << rep.e_in_k
       << " bounds=" << rep.bounds_ok << " prop1=" << rep.prop1_ok
       << " delsarte=" << rep.delsarte_ok << " hasse-weil=" << rep.hasse_weil_ok << "\n";
    return os.str();
}

}  // namespace agtrace

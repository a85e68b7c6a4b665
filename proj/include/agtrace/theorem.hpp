#pragma once

#include <string>
#include <vector>

#include "agtrace/code.hpp"

namespace agtrace {

struct Hypotheses {
    bool h0 = false;  // 2g - 2 <= deg([G/q])
    bool c1 = false;  // #Supp(G-) <= 1
    bool c2 = false;  // point-count inequality, exact integers

    bool all() const { return h0 && c1 && c2; }
};

/// Evaluates the three hypotheses. c2 compares N - S against
/// (2g - 2 + deg G+ + S) * q^{m/2} by integer squaring with sign guards;
/// no floating point is involved.
Hypotheses check_hypotheses(const CurveModel& c, const Divisor& g);
Hypotheses check_hypotheses(const CurveModel& c, const Divisor& g, long long n_points);

/// m (deg G - deg [G/q]) + delta. Total; exact.
long long predicted_dimension(const Divisor& g, const FieldTower& t);

/// Inclusive integer interval, empty when hi < lo.
struct KRange {
    long long lo = 0, hi = -1;

    bool contains(long long k) const { return lo <= k && k <= hi; }
};

/// The one-point range max((2g-2)q, 0) <= k < q^{m/2} - 4g + 1, the upper
/// bound evaluated exactly as (k + 4g - 1)^2 < q^m for k + 4g - 1 >= 0.
KRange corollary_k_range(int genus, const FieldTower& t);

/// g = g1^q g2 with g2 q-th-power free, from the squarefree decomposition.
struct GoppaCase {
    bool valid = false;      // deg g + 2s < (q^m + 1)/q^{m/2} + 2, exact integers
    long long r1 = 0;        // deg g1
    long long r2 = 0;        // deg g2
    long long s = 0;         // distinct zeros over the closure
    long long predicted = 0; // m ((q-1) r1 + r2)
};

/// Analyzes a Goppa polynomial with no zeros in F_{q^m} (checked by
/// evaluating at every element; HasRationalZero otherwise).
GoppaCase goppa_case(const Poly& g_poly, const FieldTower& t);

/// The divisor (g)_0 - P_inf from a factored Goppa polynomial (pairs of
/// monic irreducible factor and multiplicity).
Divisor goppa_divisor(const CurveModel& c,
                      const std::vector<std::pair<Poly, int>>& factors);

/// End-to-end verification record for one instance.
struct TheoremReport {
    int p = 0, r = 0, m = 0;
    long long q = 0;
    std::string curve_str, divisor_str;
    long long n = 0;       // #D
    long long k = 0;       // dim_{F_{q^m}} C
    int genus = 0;
    int delta = 0;
    bool h0 = false, c1 = false, c2 = false;
    long long predicted = 0;
    long long computed = 0;
    long long dim_k = 0, dim_e = 0;
    bool k_equals_e = false;
    bool match = false;

    /// True when the closed formula's Riemann-Roch substitution is not exact
    /// (deg at the 2g-2 edge with a special divisor); such instances are
    /// reported but the formula is not enforced on them.
    bool boundary = false;

    // Unconditional invariants, recomputed per instance.
    bool eq3 = false;
    bool e_in_k = false;
    bool bounds_ok = false;
    bool prop1_ok = false;    // dim E vs Prop-1 formula, when c1 holds
    bool delsarte_ok = false;
    bool hasse_weil_ok = false;

    bool invariants_ok() const {
        return eq3 && e_in_k && bounds_ok && prop1_ok && delsarte_ok && hasse_weil_ok;
    }
    bool hypotheses_held() const { return h0 && c1 && c2; }
    /// The exit-code contract: invariants hold, and on hypotheses-held
    /// non-boundary instances the formula matches and K = E.
    bool ok() const {
        if (!invariants_ok()) return false;
        if (hypotheses_held() && !k_equals_e) return false;
        if (hypotheses_held() && !boundary && !match) return false;
        return true;
    }
};

/// Runs the full pipeline with D = D_max: code, trace code, kernel spaces,
/// hypotheses, prediction, Delsarte.
TheoremReport verify(const CurveModel& c, const Divisor& g, bool drop_zero_columns = false);

std::string report_csv_header();
std::string report_csv_row(const TheoremReport& rep);
std::string report_json(const TheoremReport& rep);
std::string report_text(const TheoremReport& rep);

}  // namespace agtrace

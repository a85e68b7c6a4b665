// Acceptance suite: end-to-end checks of the dimension theorem, the two
// worked families, the kernel structure, duality, and the character-sum
// bound, all at desk scale with exact arithmetic. Prints one line per
// criterion; exits nonzero if any fails.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "agtrace/bombieri.hpp"
#include "agtrace/cli.hpp"
#include "agtrace/theorem.hpp"

using namespace agtrace;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << detail
              << "\n";
    if (!pass) ++g_failures;
}

struct Collected {
    std::vector<TheoremReport> reports;
};

// ---- criterion 1: corollary sweep at genus 0 ----
bool criterion1(Collected& all, std::string& detail) {
    const std::vector<std::array<int, 3>> towers = {
        {2, 1, 2}, {2, 1, 3}, {2, 1, 4}, {2, 2, 2}, {3, 1, 2}, {3, 1, 3}, {2, 1, 6}};
    const auto start = std::chrono::steady_clock::now();
    long long checked = 0;
    bool ok = true;
    for (const auto& [p, r, m] : towers) {
        const auto t = build_tower(p, r, m);
        const auto line = CurveModel::projective_line(t);
        const auto range = corollary_k_range(0, *t);
        for (long long k = range.lo; k <= range.hi; ++k) {
            const auto g = one_point_divisor(line, static_cast<int>(k));
            if (!check_hypotheses(line, g).all()) continue;
            const auto rep = verify(line, g);
            all.reports.push_back(rep);
            ++checked;
            const long long expect = static_cast<long long>(m) * (k - k / t->q()) + 1;
            if (rep.computed != expect || !rep.match) ok = false;
        }
    }
    const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
    std::ostringstream os;
    os << "corollary sweep, " << checked << " hypotheses-held instances over 7 towers, "
       << "dim TrC = m(k - [k/q]) + 1 exact, " << secs.count() << " s";
    detail = os.str();
    return ok && checked >= 30 && secs.count() < 60.0;
}

// ---- criterion 2: hand-verified anchor ----
bool criterion2(std::string& detail) {
    const auto t = build_tower(2, 1, 2);
    const auto line = CurveModel::projective_line(t);
    const auto code = build_code(line, one_point_divisor(line, 2));
    const auto tc = trace_code(code);
    const int expected[6][4] = {{0, 0, 0, 0}, {1, 1, 1, 1}, {0, 0, 1, 1},
                                {0, 1, 1, 0}, {0, 0, 1, 1}, {0, 1, 0, 1}};
    bool ok = tc.trace_matrix.rows == 6 && tc.trace_matrix.cols == 4 && tc.dim == 3;
    for (int i = 0; ok && i < 6; ++i)
        for (int j = 0; j < 4; ++j)
            if (tc.trace_matrix.at(i, j) != Elem(expected[i][j])) ok = false;
    detail = "q=2 m=2 G=2P_inf: frozen 6x4 trace matrix, reduced rank 3";
    return ok;
}

// ---- criterion 3: Goppa studies ----
bool goppa_batch(int p, int r, int m, std::uint64_t seed, int min_count,
                 const std::vector<int>& degrees, const std::vector<int>& powers,
                 bool force_composite, Collected& all, long long& valid_count,
                 long long& composite_count) {
    const auto t = build_tower(p, r, m);
    const auto line = CurveModel::projective_line(t);
    std::mt19937_64 rng(seed);
    bool ok = true;
    int attempts = 0;
    while (valid_count < min_count && attempts < 400) {
        ++attempts;
        const int d = degrees[rng() % degrees.size()];
        int e = powers[rng() % powers.size()];
        if (force_composite && valid_count < 5) e = t->q();  // guarantee r1 >= 1 cases
        const Poly pi = poly_random_monic_irreducible(*t, d, rng);
        const Poly g = poly_pow(*t, pi, e);
        const auto gc = goppa_case(g, *t);
        if (!gc.valid) continue;
        ++valid_count;
        if (gc.r1 >= 1) ++composite_count;
        const auto div = goppa_divisor(line, {{pi, e}});
        const auto rep = verify(line, div);
        all.reports.push_back(rep);
        const long long expect =
            static_cast<long long>(m) * ((t->q() - 1) * gc.r1 + gc.r2);
        if (rep.computed != expect || rep.predicted != expect) ok = false;
        if (!rep.hypotheses_held()) ok = false;  // the Example-2 condition implies (2)
    }
    return ok && valid_count >= min_count;
}

bool criterion3(Collected& all, std::string& detail) {
    bool ok = true;
    long long v16 = 0, c16 = 0, v81 = 0, c81 = 0, v64 = 0, c64 = 0;
    // F_16, q=2, m=4: only single irreducible quadratics pass the condition
    ok = goppa_batch(2, 1, 4, 42, 20, {2, 3}, {1}, false, all, v16, c16) && ok;
    // F_81 with q = 9, m = 2: quadratics, cubics and squared quadratics pass
    ok = goppa_batch(3, 2, 2, 42, 20, {2, 3}, {1, 2}, false, all, v81, c81) && ok;
    // F_64, q = 2, m = 6: the condition admits g = h^2, exercising r1 >= 1
    ok = goppa_batch(2, 1, 6, 42, 10, {2, 3}, {1, 2}, true, all, v64, c64) && ok;
    ok = ok && c64 >= 1;
    std::ostringstream os;
    os << "Goppa dim = m((q-1)r1 + r2) exact on " << v16 << " F_16, " << v81 << " F_81(q=9), "
       << v64 << " F_64 condition-passing samples (" << c64 << " with r1 >= 1)";
    detail = os.str();
    return ok;
}

// ---- criterion 4: kernel structure on every collected instance ----
bool criterion4(const Collected& all, std::string& detail) {
    bool ok = !all.reports.empty();
    for (const auto& rep : all.reports) {
        if (!rep.eq3 || !rep.e_in_k) ok = false;
        if (rep.c1 && !rep.prop1_ok) ok = false;
        if (rep.hypotheses_held() && !rep.k_equals_e) ok = false;
    }
    std::ostringstream os;
    os << "Eq.(3), E in K, Prop.1 dim E, and K = E (subspace equality) on "
       << all.reports.size() << " instances";
    detail = os.str();
    return ok;
}

// ---- criterion 5: genus 1 over F_64 ----
bool criterion5(Collected& all, std::string& detail) {
    const auto t = build_tower(2, 1, 6);
    const auto curve = CurveModel::weierstrass(t, 0, 1, 0, 0, 0);  // y^2 + y = x^3
    const auto pts = rational_points(curve);
    bool ok = hasse_weil_check(static_cast<long long>(pts.size()), 1, *t);

    const auto range = corollary_k_range(1, *t);
    long long enforced = 0, boundary_checked = 0;
    std::ostringstream notes;
    for (long long k = range.lo; k <= range.hi; ++k) {
        const auto g = one_point_divisor(curve, static_cast<int>(k));
        if (!check_hypotheses(curve, g).all()) continue;
        const auto rep = verify(curve, g);
        all.reports.push_back(rep);
        const long long formula = 6 * (k - k / 2) + 1;
        if (!rep.boundary) {
            ++enforced;
            if (rep.computed != formula || !rep.match) ok = false;
        } else {
            // deg [G/q] sits at 2g-2 and [G/q] ~ 0 is special: the closed
            // formula is not applicable; assert the exact chain instead.
            ++boundary_checked;
            const auto floor_g = floor_div_q(g, 2);
            const long long dim_floor = rr_basis(curve, floor_g).dim();
            const long long chain = 6 * (rep.k - dim_floor) + rep.delta;
            if (rep.computed != chain || !rep.k_equals_e || !rep.eq3) ok = false;
            if (rep.computed != formula)
                notes << " [k=" << k << ": formula " << formula << " vs computed "
                      << rep.computed << ", boundary]";
        }
    }
    std::ostringstream os;
    os << "y^2+y=x^3 / F_64, N = " << pts.size() << ", " << enforced
       << " formula-exact k, " << boundary_checked << " boundary k chain-exact"
       << notes.str();
    detail = os.str();
    return ok && enforced >= 3 && boundary_checked == 2;
}

// ---- criterion 6: Delsarte duality on every collected instance ----
bool criterion6(const Collected& all, std::string& detail) {
    bool ok = !all.reports.empty();
    for (const auto& rep : all.reports)
        if (!rep.delsarte_ok) ok = false;
    std::ostringstream os;
    os << "(Tr C)^perp = (C^perp)|_{F_q} on " << all.reports.size() << " instances";
    detail = os.str();
    return ok;
}

// ---- criterion 7: Bombieri bound ----
bool criterion7(std::string& detail) {
    bool ok = true;
    long long total = 0;
    for (const auto& [p, r, m] : {std::array<int, 3>{2, 1, 2}, {2, 1, 3}, {2, 1, 4}}) {
        const auto t = build_tower(p, r, m);
        const auto line = CurveModel::projective_line(t);
        std::mt19937_64 rng(20240 + m);
        std::uniform_int_distribution<std::uint32_t> dist(0, t->size() - 1);
        int accepted = 0;
        while (accepted < 20) {
            const int d = 1 + static_cast<int>(rng() % 5);
            Poly f(static_cast<size_t>(d) + 1);
            for (int i = 0; i < d; ++i) f[i] = dist(rng);
            do {
                f[d] = dist(rng);
            } while (f[d] == 0);
            const auto rf = rf_p1(*t, f, {1});
            if (is_artin_schreier_degenerate(line, rf)) continue;
            ++accepted;
            ++total;
            const auto res = char_sum_check(line, rf);
            if (!res.pass || res.sum_sq_exact > res.bound_sq) ok = false;
        }
    }
    // odd characteristic batch over F_9: floating comparison with 1e-6 slack
    const auto t9 = build_tower(3, 1, 2);
    const auto line9 = CurveModel::projective_line(t9);
    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<std::uint32_t> dist(0, t9->size() - 1);
    int accepted9 = 0;
    while (accepted9 < 20) {
        const int d = 1 + static_cast<int>(rng() % 5);
        Poly f(static_cast<size_t>(d) + 1);
        for (int i = 0; i < d; ++i) f[i] = dist(rng);
        do {
            f[d] = dist(rng);
        } while (f[d] == 0);
        const auto rf = rf_p1(*t9, f, {1});
        if (is_artin_schreier_degenerate(line9, rf)) continue;
        ++accepted9;
        if (!char_sum_check(line9, rf).pass) ok = false;
    }
    std::ostringstream os;
    os << "character-sum bound on " << total << " samples over F_4/F_8/F_16 (exact) and "
       << accepted9 << " over F_9 (1e-6 relative)";
    detail = os.str();
    return ok && total >= 50;
}

// ---- criterion 8: property suite ----
bool criterion8(const Collected& all, std::string& detail) {
    bool ok = true;

    // trace census on every tower used above
    for (const auto& [p, r, m] :
         {std::array<int, 3>{2, 1, 2}, {2, 1, 3}, {2, 1, 4}, {2, 2, 2}, {3, 1, 2},
          {3, 1, 3}, {2, 1, 6}, {3, 2, 2}}) {
        const auto t = build_tower(p, r, m);
        std::vector<long long> census(t->size(), 0);
        for (Elem a = 0; a < t->size(); ++a) ++census[t->trace_to_subfield(a)];
        const long long expect = t->size() / t->q();
        for (Elem v : t->subfield_elements())
            if (census[v] != expect) ok = false;
    }

    // dimension bounds on every collected instance
    for (const auto& rep : all.reports)
        if (!rep.bounds_ok) ok = false;

    // permutation invariance of dim under reordering D
    {
        const auto t = build_tower(2, 1, 3);
        const auto line = CurveModel::projective_line(t);
        const auto g = one_point_divisor(line, 3);
        auto pts = build_code(line, g).points;
        const auto dim0 = trace_code(build_code(line, g)).dim;
        std::mt19937_64 rng(88);
        for (int it = 0; it < 4; ++it) {
            std::shuffle(pts.begin(), pts.end(), rng);
            if (trace_code(build_code(line, g, pts)).dim != dim0) ok = false;
        }
    }

    // byte-identical reruns of every seeded command
    const std::vector<std::vector<std::string>> cmds = {
        {"sweep", "--towers", "2,1,2;2,1,3;2,1,4;2,2,2;3,1,2;3,1,3;2,1,6", "--family",
         "corollary"},
        {"goppa", "--tower", "2,1,4", "--count", "20", "--seed", "42"},
        {"goppa", "--tower", "3,2,2", "--count", "10", "--seed", "42"},
        {"bombieri", "--tower", "2,1,3", "--count", "25", "--seed", "7"},
        {"bombieri", "--tower", "3,1,2", "--count", "15", "--seed", "9"},
    };
    for (const auto& cmd : cmds) {
        std::ostringstream o1, e1, o2, e2;
        const int c1 = cli_main(cmd, o1, e1);
        const int c2 = cli_main(cmd, o2, e2);
        if (c1 != c2 || o1.str() != o2.str() || e1.str() != e2.str()) ok = false;
        if (c1 != 0) ok = false;
    }

    detail = "trace census, dimension bounds, permutation invariance, seeded reruns";
    return ok;
}

}  // namespace

int main() {
    Collected all;
    std::string detail;

    bool p1 = criterion1(all, detail);
    report(1, p1, detail);

    report(2, criterion2(detail), detail);

    bool p3 = criterion3(all, detail);
    report(3, p3, detail);

    report(4, criterion4(all, detail), detail);

    bool p5 = criterion5(all, detail);
    report(5, p5, detail);

    report(6, criterion6(all, detail), detail);

    report(7, criterion7(detail), detail);

    report(8, criterion8(all, detail), detail);

    if (g_failures) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}

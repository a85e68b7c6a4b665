#include <algorithm>
#include <random>

#include "agtrace/code.hpp"
#include "doctest.h"

using namespace agtrace;

namespace {

// Independent GF(2) rank oracle on bit rows.
int bit_rank(std::vector<std::uint64_t> rows) {
    int rank = 0;
    for (int col = 0; col < 64; ++col) {
        int piv = -1;
        for (size_t i = rank; i < rows.size(); ++i)
            if ((rows[i] >> col) & 1) {
                piv = static_cast<int>(i);
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        for (size_t i = 0; i < rows.size(); ++i)
            if (static_cast<int>(i) != rank && ((rows[i] >> col) & 1)) rows[i] ^= rows[rank];
        ++rank;
    }
    return rank;
}

Divisor goppa_quadratic_divisor(const CurveModel& line, const Poly& g) {
    Divisor d(line);
    d.add_term(Place::finite_poly(g), 1);
    d.add_term(Place::at_infinity(), -1);
    return d;
}

}  // namespace

TEST_CASE("hand-verified anchor: F_4, G = 2P_inf") {
    const auto t = build_tower(2, 1, 2);
    const auto line = CurveModel::projective_line(t);
    const auto code = build_code(line, one_point_divisor(line, 2));

    CHECK(code.n() == 4);  // D_max = 5 points minus P_inf
    CHECK(code.k() == 3);

    const auto tc = trace_code(code);
    REQUIRE(tc.trace_matrix.rows == 6);
    REQUIRE(tc.trace_matrix.cols == 4);
    // frozen 6x4 matrix (row index i*m+j, points in packed order 0,1,w,w+1)
    const int expected[6][4] = {{0, 0, 0, 0}, {1, 1, 1, 1}, {0, 0, 1, 1},
                                {0, 1, 1, 0}, {0, 0, 1, 1}, {0, 1, 0, 1}};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 4; ++j) CHECK(tc.trace_matrix.at(i, j) == Elem(expected[i][j]));
    CHECK(tc.dim == 3);

    const auto ks = kernel_and_spaces(code, tc);
    CHECK(ks.kernel.dim() == 3);          // 6 - 3
    CHECK(ks.artin_schreier.dim() == 3);  // 2*2 - 1
    CHECK(ks.kernel == ks.artin_schreier);
    CHECK(ks.eq3_holds);
    CHECK(ks.e_subset_k);
    CHECK(prop1_dim_e(one_point_divisor(line, 2)) == 3);
    CHECK(delsarte_check(code, tc));
}

TEST_CASE("G = 0 gives the repetition code") {
    for (const auto& [p, r, m] : {std::array<int, 3>{2, 1, 2}, {2, 1, 4}, {3, 1, 2}}) {
        const auto t = build_tower(p, r, m);
        const auto line = CurveModel::projective_line(t);
        const auto code = build_code(line, Divisor(line));
        const auto tc = trace_code(code);
        CHECK(tc.dim == 1);
        const auto ks = kernel_and_spaces(code, tc);
        CHECK(static_cast<int>(ks.kernel.dim()) == m - 1);
        CHECK(static_cast<int>(ks.artin_schreier.dim()) == m - 1);
        CHECK(ks.kernel == ks.artin_schreier);
        CHECK(prop1_dim_e(Divisor(line)) == m - 1);

        // Delsarte: (Tr C)^perp is the zero-sum space
        CHECK(delsarte_check(code, tc));
        const auto perp = null_space(*t, tc.trace_matrix);
        CHECK(perp.rows == code.points.size() - 1);
    }
}

TEST_CASE("G = P_inf over F_4 has trace dimension 3") {
    const auto t = build_tower(2, 1, 2);
    const auto line = CurveModel::projective_line(t);
    const auto code = build_code(line, one_point_divisor(line, 1));
    CHECK(code.k() == 2);
    const auto tc = trace_code(code);
    // 4x4 matrix with rows Tr(1), Tr(w), Tr(z), Tr(wz): rank 3 = 2(1-0)+1
    CHECK(tc.dim == 3);
    const auto ks = kernel_and_spaces(code, tc);
    CHECK(ks.kernel.dim() == 1);
    CHECK(ks.kernel == ks.artin_schreier);
}

TEST_CASE("goppa code over F_16: n = 17, k = 2, dim 8") {
    const auto t = build_tower(2, 1, 4);
    const auto line = CurveModel::projective_line(t);
    const Poly g{2, 1, 1};  // irreducible quadratic
    const auto div = goppa_quadratic_divisor(line, g);

    const auto code = build_code(line, div);
    CHECK(code.n() == 17);  // P_inf is in Supp(G-), not Supp(G+), so it stays
    CHECK(code.k() == 2);

    // the column at infinity is identically zero
    const size_t inf_col = 16;
    for (int i = 0; i < code.k(); ++i) CHECK(code.gen_matrix.at(i, inf_col) == 0);

    const auto tc = trace_code(code);
    CHECK(tc.dim == 8);

    // independent GF(2) rank oracle on the same matrix
    std::vector<std::uint64_t> bits(tc.trace_matrix.rows, 0);
    for (size_t i = 0; i < tc.trace_matrix.rows; ++i)
        for (size_t j = 0; j < tc.trace_matrix.cols; ++j)
            bits[i] |= static_cast<std::uint64_t>(tc.trace_matrix.at(i, j)) << j;
    CHECK(bit_rank(bits) == 8);

    // dropping the Supp(G-) column changes n but not the dimension
    const auto dropped = build_code(line, div, std::nullopt, true);
    CHECK(dropped.n() == 16);
    CHECK(trace_code(dropped).dim == 8);

    const auto ks = kernel_and_spaces(code, tc);
    CHECK(ks.eq3_holds);
    CHECK(ks.e_subset_k);
    CHECK(prop1_dim_e(div) == 0);  // r1 = 0: L([G/q]) = 0
    CHECK(ks.artin_schreier.dim() == 0);
    CHECK(delsarte_check(code, tc));
}

TEST_CASE("build_code validates points") {
    const auto t = build_tower(2, 1, 2);
    const auto line = CurveModel::projective_line(t);
    const auto g = one_point_divisor(line, 2);

    std::vector<RationalPoint> with_support = {RationalPoint::affine(0),
                                               RationalPoint::infinity()};
    CHECK_THROWS_AS(build_code(line, g, with_support), PointInSupport);

    std::vector<RationalPoint> dup = {RationalPoint::affine(0), RationalPoint::affine(0)};
    CHECK_THROWS_AS(build_code(line, g, dup), InvalidParameter);

    CHECK_THROWS_AS(build_code(line, one_point_divisor(line, 4)), DegreeTooLarge);
    CHECK_THROWS_AS(build_code(line, one_point_divisor(line, 7)), DegreeTooLarge);
}

TEST_CASE("trace dimension is invariant under permutations of D") {
    const auto t = build_tower(2, 1, 3);
    const auto line = CurveModel::projective_line(t);
    const auto g = one_point_divisor(line, 3);
    const auto base = build_code(line, g);
    const auto dim0 = trace_code(base).dim;

    std::mt19937_64 rng(5);
    auto pts = base.points;
    for (int it = 0; it < 5; ++it) {
        std::shuffle(pts.begin(), pts.end(), rng);
        const auto code = build_code(line, g, pts);
        CHECK(trace_code(code).dim == dim0);
    }
}

TEST_CASE("negative-degree G yields the zero code and trivial duals") {
    const auto t = build_tower(2, 1, 2);
    const auto line = CurveModel::projective_line(t);
    Divisor g(line);
    g.add_term(Place::at_point(RationalPoint::affine(0)), -1);

    const auto code = build_code(line, g);
    CHECK(code.k() == 0);
    const auto tc = trace_code(code);
    CHECK(tc.dim == 0);
    const auto ks = kernel_and_spaces(code, tc);
    CHECK(ks.kernel.dim() == 0);
    CHECK(ks.artin_schreier.dim() == 0);
    CHECK(ks.eq3_holds);
    CHECK(delsarte_check(code, tc));  // both sides are all of F_q^n
}

TEST_CASE("condition-one violation is reported") {
    const auto t = build_tower(2, 1, 2);
    const auto line = CurveModel::projective_line(t);
    Divisor g(line);
    g.add_term(Place::at_point(RationalPoint::affine(0)), -1);
    g.add_term(Place::at_point(RationalPoint::affine(1)), -1);
    g.add_term(Place::at_infinity(), 3);
    CHECK_THROWS_AS(prop1_dim_e(g), ConditionOneViolated);
}

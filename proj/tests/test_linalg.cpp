#include <random>

#include "agtrace/linalg.hpp"
#include "doctest.h"

using namespace agtrace;

namespace {

Mat mat_mul(const FieldTower& t, const Mat& a, const Mat& b) {
    Mat r(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (a.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                r.at(i, j) = t.add(r.at(i, j), t.mul(a.at(i, k), b.at(k, j)));
        }
    return r;
}

}  // namespace

TEST_CASE("rref rank on a known F_2 matrix") {
    const auto t = build_tower(2, 1, 2);
    // rows: 0110, 1111, 1001 -> rank 2 (r3 = r1 + r2)
    Mat m(3, 4);
    const int rows[3][4] = {{0, 1, 1, 0}, {1, 1, 1, 1}, {1, 0, 0, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) m.at(i, j) = rows[i][j];
    CHECK(rank(*t, m) == 2);
}

TEST_CASE("null space basis annihilates the matrix") {
    const auto t = build_tower(3, 1, 2);
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::uint32_t> dist(0, t->size() - 1);
    for (int it = 0; it < 50; ++it) {
        Mat m(2 + rng() % 4, 2 + rng() % 5);
        for (auto& v : m.a) v = dist(rng);
        const Mat ns = null_space(*t, m);
        CHECK(ns.rows == m.cols - rank(*t, m));
        if (ns.rows) {
            const Mat prod = mat_mul(*t, m, transpose(ns));
            for (Elem v : prod.a) CHECK(v == 0);
        }
    }
}

TEST_CASE("solve_batch returns exact solutions and detects inconsistency") {
    const auto t = build_tower(2, 1, 4);
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<std::uint32_t> dist(0, t->size() - 1);
    for (int it = 0; it < 50; ++it) {
        Mat a(3 + rng() % 3, 2 + rng() % 2);
        for (auto& v : a.a) v = dist(rng);
        Mat x(a.cols, 2);
        for (auto& v : x.a) v = dist(rng);
        const Mat b = mat_mul(*t, a, x);
        const auto sol = solve_batch(*t, a, b);
        REQUIRE(sol.has_value());
        CHECK(mat_mul(*t, a, *sol) == b);
    }
    // inconsistent: x + y = 1 and x + y = 0
    Mat a(2, 2);
    a.at(0, 0) = a.at(0, 1) = a.at(1, 0) = a.at(1, 1) = 1;
    Mat b(2, 1);
    b.at(0, 0) = 1;
    CHECK_FALSE(solve_batch(*t, a, b).has_value());
}

TEST_CASE("elimination stays inside the subfield") {
    const auto t = build_tower(2, 2, 2);  // F_16 over F_4
    const auto& sub = t->subfield_elements();
    std::mt19937_64 rng(31);
    Mat m(4, 6);
    for (auto& v : m.a) v = sub[rng() % sub.size()];
    rref(*t, m);
    for (Elem v : m.a) CHECK(t->in_subfield(v));
}

TEST_CASE("row spaces are canonical") {
    const auto t = build_tower(2, 1, 2);
    Mat a(2, 3), b(2, 3);
    // same row space, different presentations
    const int ra[2][3] = {{1, 0, 1}, {0, 1, 1}};
    const int rb[2][3] = {{1, 1, 0}, {0, 1, 1}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) {
            a.at(i, j) = ra[i][j];
            b.at(i, j) = rb[i][j];
        }
    const auto sa = row_space(*t, a), sb = row_space(*t, b);
    CHECK(sa == sb);
    CHECK(sa.dim() == 2);
    CHECK(subspace_contains(*t, sa, {1, 1, 0}));
    CHECK_FALSE(subspace_contains(*t, sa, {1, 1, 1}));
    CHECK(subspace_subset(*t, sa, sb));
}

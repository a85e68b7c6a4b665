#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "agtrace/field_tower.hpp"

namespace agtrace {

/// Dense row-major matrix of field elements. Entries may live in any
/// subfield; every algorithm here uses only field operations, so subfield
/// closure is preserved automatically.
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<Elem> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

    Elem& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    Elem at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    bool operator==(const Mat& o) const = default;
};

Mat transpose(const Mat& m);

/// In-place reduced row echelon form with deterministic pivoting (first row
/// with a nonzero entry in the current column). Returns the pivot columns;
/// the rank is their count.
std::vector<std::size_t> rref(const FieldTower& t, Mat& m);

std::size_t rank(const FieldTower& t, Mat m);

/// Canonical basis of {v : m v = 0}, one row per basis vector, in reduced
/// echelon form. For a matrix with no rows the null space is everything.
Mat null_space(const FieldTower& t, const Mat& m);

/// Solves A X = B column-by-column; nullopt if any column is inconsistent.
/// A is n x k, B is n x t, X is k x t. Underdetermined systems take the
/// canonical solution with free variables set to zero.
std::optional<Mat> solve_batch(const FieldTower& t, const Mat& A, const Mat& B);

/// A subspace of F_q^ambient in canonical form: RREF basis rows.
struct SubspaceFq {
    std::size_t ambient = 0;
    Mat basis;  // rank x ambient, reduced echelon, no zero rows

    std::size_t dim() const { return basis.rows; }
    bool operator==(const SubspaceFq& o) const = default;
};

/// Row space of m as a canonical subspace.
SubspaceFq row_space(const FieldTower& t, Mat m);

/// Does the subspace contain the vector v (length ambient)?
bool subspace_contains(const FieldTower& t, const SubspaceFq& s, const std::vector<Elem>& v);

/// Is a contained in b?
bool subspace_subset(const FieldTower& t, const SubspaceFq& a, const SubspaceFq& b);

}  // namespace agtrace

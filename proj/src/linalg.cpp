#include "agtrace/linalg.hpp"

#include <algorithm>

namespace agtrace {

Mat transpose(const Mat& m) {
    Mat r(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
    return r;
}

std::vector<std::size_t> rref(const FieldTower& t, Mat& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t piv = row;
        while (piv < m.rows && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(row, j), m.at(piv, j));
        const Elem pi = t.inv(m.at(row, col));
        for (std::size_t j = 0; j < m.cols; ++j) m.at(row, j) = t.mul(m.at(row, j), pi);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == row) continue;
            const Elem f = m.at(i, col);
            if (f == 0) continue;
            for (std::size_t j = 0; j < m.cols; ++j)
                m.at(i, j) = t.sub(m.at(i, j), t.mul(f, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(const FieldTower& t, Mat m) { return rref(t, m).size(); }

Mat null_space(const FieldTower& t, const Mat& m) {
    Mat red = m;
    const auto pivots = rref(t, red);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : pivots) is_pivot[c] = true;

    Mat basis(m.cols - pivots.size(), m.cols);
    std::size_t bi = 0;
    for (std::size_t free_col = 0; free_col < m.cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        basis.at(bi, free_col) = 1;
        for (std::size_t pr = 0; pr < pivots.size(); ++pr)
            basis.at(bi, pivots[pr]) = t.neg(red.at(pr, free_col));
        ++bi;
    }
    rref(t, basis);  // canonical form
    return basis;
}

std::optional<Mat> solve_batch(const FieldTower& t, const Mat& A, const Mat& B) {
    if (A.rows != B.rows) throw InvalidParameter("solve_batch: row mismatch");
    Mat aug(A.rows, A.cols + B.cols);
    for (std::size_t i = 0; i < A.rows; ++i) {
        for (std::size_t j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
        for (std::size_t j = 0; j < B.cols; ++j) aug.at(i, A.cols + j) = B.at(i, j);
    }
    const auto pivots = rref(t, aug);
    // inconsistent iff some pivot falls in the augmented block
    for (auto c : pivots)
        if (c >= A.cols) return std::nullopt;
    Mat x(A.cols, B.cols);
    for (std::size_t pr = 0; pr < pivots.size(); ++pr)
        for (std::size_t j = 0; j < B.cols; ++j) x.at(pivots[pr], j) = aug.at(pr, A.cols + j);
    return x;
}

SubspaceFq row_space(const FieldTower& t, Mat m) {
    const auto pivots = rref(t, m);
    SubspaceFq s;
    s.ambient = m.cols;
    s.basis = Mat(pivots.size(), m.cols);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < m.cols; ++j) s.basis.at(i, j) = m.at(i, j);
    return s;
}

bool subspace_contains(const FieldTower& t, const SubspaceFq& s, const std::vector<Elem>& v) {
    if (v.size() != s.ambient) throw InvalidParameter("vector length mismatch");
    std::vector<Elem> w = v;
    for (std::size_t i = 0; i < s.basis.rows; ++i) {
        // leading column of basis row i
        std::size_t lead = 0;
        while (lead < s.ambient && s.basis.at(i, lead) == 0) ++lead;
        if (lead == s.ambient) continue;
        const Elem f = w[lead];
        if (f == 0) continue;
        for (std::size_t j = 0; j < s.ambient; ++j)
            w[j] = t.sub(w[j], t.mul(f, s.basis.at(i, j)));
    }
    return std::all_of(w.begin(), w.end(), [](Elem x) { return x == 0; });
}

bool subspace_subset(const FieldTower& t, const SubspaceFq& a, const SubspaceFq& b) {
    for (std::size_t i = 0; i < a.basis.rows; ++i) {
        std::vector<Elem> v(a.ambient);
        for (std::size_t j = 0; j < a.ambient; ++j) v[j] = a.basis.at(i, j);
        if (!subspace_contains(t, b, v)) return false;
    }
    return true;
}

}  // namespace agtrace

#include "lynpbw/linalg.hpp"

namespace lynpbw {

Echelon::Echelon(FieldPtr field, std::size_t ncols) : field_(std::move(field)), ncols_(ncols) {}

void Echelon::reduce(std::vector<Scalar>& row) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Scalar& c = row[pivots_[i]];
        if (c.is_zero()) continue;
        Scalar f = c;  // pivot rows are normalized
        for (std::size_t j = 0; j < ncols_; ++j)
            if (!rows_[i][j].is_zero()) row[j] -= f * rows_[i][j];
    }
}

bool Echelon::add(std::vector<Scalar> row) {
    reduce(row);
    std::size_t pivot = ncols_;
    for (std::size_t j = 0; j < ncols_; ++j) {
        if (!row[j].is_zero()) {
            pivot = j;
            break;
        }
    }
    if (pivot == ncols_) return false;
    Scalar inv = row[pivot].inverse();
    for (auto& c : row) c = c * inv;
    // back-reduce stored rows so every row has zeros at all other pivots
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Scalar& c = rows_[i][pivot];
        if (c.is_zero()) continue;
        Scalar f = c;
        for (std::size_t j = 0; j < ncols_; ++j)
            if (!row[j].is_zero()) rows_[i][j] -= f * row[j];
    }
    // keep rows ordered by pivot column for deterministic reduction
    std::size_t at = rows_.size();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (pivots_[i] > pivot) {
            at = i;
            break;
        }
    }
    rows_.insert(rows_.begin() + at, std::move(row));
    pivots_.insert(pivots_.begin() + at, pivot);
    return true;
}

bool Echelon::contains(std::vector<Scalar> row) const {
    reduce(row);
    for (const auto& c : row)
        if (!c.is_zero()) return false;
    return true;
}

bool linear_solve(const FieldPtr& field, std::vector<std::vector<Scalar>> A,
                  std::vector<Scalar> b, std::vector<Scalar>& x) {
    std::size_t nrows = A.size();
    std::size_t ncols = nrows ? A[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t sel = nrows;
        for (std::size_t i = r; i < nrows; ++i) {
            if (!A[i][c].is_zero()) {
                sel = i;
                break;
            }
        }
        if (sel == nrows) continue;
        std::swap(A[r], A[sel]);
        std::swap(b[r], b[sel]);
        Scalar inv = A[r][c].inverse();
        for (auto& v : A[r]) v = v * inv;
        b[r] = b[r] * inv;
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == r || A[i][c].is_zero()) continue;
            Scalar f = A[i][c];
            for (std::size_t j = c; j < ncols; ++j) A[i][j] -= f * A[r][j];
            b[i] = b[i] - f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < nrows; ++i)
        if (!b[i].is_zero()) return false;
    x.assign(ncols, Scalar::zero(field));
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
    return true;
}

bool is_invertible(const FieldPtr& field, const std::vector<std::vector<Scalar>>& A) {
    if (A.empty()) return true;
    if (A.size() != A[0].size()) return false;
    Echelon e(field, A[0].size());
    for (const auto& row : A)
        if (!e.add(row)) return false;
    return true;
}

} // namespace lynpbw

#include "algrest/linalg.hpp"

#include "algrest/error.hpp"

namespace algrest {

void RowSpan::reduce_in_place(RatVec &v) const {
    // Rows are keyed by increasing pivot, so one forward sweep suffices.
    for (const auto &[p, row] : rows_) {
        const Rat &c = v[p];
        if (c == 0) continue;
        Rat f = c;  // row[p] == 1
        for (size_t j = p; j < row.size(); ++j)
            if (row[j] != 0) v[j] -= f * row[j];
    }
}

bool RowSpan::insert(RatVec v) {
    if (static_cast<int>(v.size()) != cols_ + aug_)
        throw DomainError("row_width", "row width mismatch");
    reduce_in_place(v);
    int pivot = -1;
    for (int j = 0; j < cols_; ++j)
        if (v[j] != 0) { pivot = j; break; }
    if (pivot < 0) return false;
    Rat inv = Rat(1) / v[pivot];
    for (auto &x : v)
        if (x != 0) x *= inv;
    rows_.emplace(pivot, std::move(v));
    return true;
}

RatVec RowSpan::residual(RatVec v) const {
    if (static_cast<int>(v.size()) == cols_ && aug_ > 0)
        v.resize(cols_ + aug_, Rat(0));
    if (static_cast<int>(v.size()) != cols_ + aug_)
        throw DomainError("row_width", "row width mismatch");
    reduce_in_place(v);
    return v;
}

bool RowSpan::contains(const RatVec &v) const {
    RatVec r = residual(v);
    for (int j = 0; j < cols_; ++j)
        if (r[j] != 0) return false;
    return true;
}

namespace {

// Full reduced row echelon form; returns pivot column per row.
std::vector<int> rref(RatMat &rows, int ncols) {
    std::vector<int> pivots;
    size_t r = 0;
    for (int c = 0; c < ncols && r < rows.size(); ++c) {
        size_t sel = r;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        Rat inv = Rat(1) / rows[r][c];
        for (auto &x : rows[r]) x *= inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rat f = rows[i][c];
            for (size_t j = c; j < rows[i].size(); ++j)
                if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

}  // namespace

RatMat nullspace(RatMat rows, int ncols) {
    std::vector<int> pivots = rref(rows, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (int p : pivots) is_pivot[p] = true;

    RatMat basis;
    for (int c = 0; c < ncols; ++c) {
        if (is_pivot[c]) continue;
        RatVec v(ncols, Rat(0));
        v[c] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

int rank(RatMat rows, int ncols) {
    return static_cast<int>(rref(rows, ncols).size());
}

bool solve(const RatMat &rows, const RatVec &b, int ncols, RatVec *sol) {
    RatMat aug = rows;
    for (size_t i = 0; i < aug.size(); ++i) {
        aug[i].resize(ncols + 1, Rat(0));
        aug[i][ncols] = b[i];
    }
    // Eliminate through the RHS column too: a pivot landing there means an
    // inconsistent row 0 = nonzero.
    std::vector<int> pivots = rref(aug, ncols + 1);
    for (int p : pivots)
        if (p == ncols) return false;
    if (sol) {
        sol->assign(ncols, Rat(0));
        for (size_t i = 0; i < pivots.size(); ++i) (*sol)[pivots[i]] = aug[i][ncols];
    }
    return true;
}

}  // namespace algrest

#pragma once

// Test-side linear algebra, deliberately independent of src/linalg.cpp:
// plain textbook elimination with no pivot bookkeeping, used to cross-check
// ranks and span membership computed by the library.

#include "algrest/rational.hpp"

#include <vector>

namespace oracle {

using algrest::Rat;
using Mat = std::vector<std::vector<Rat>>;

inline int rank(Mat m) {
    int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(m[r], m[pivot]);
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c] / m[r][c];
            for (int j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

inline bool in_span(const Mat &rows, const std::vector<Rat> &v) {
    Mat with = rows;
    with.push_back(v);
    return rank(rows) == rank(with);
}

}  // namespace oracle

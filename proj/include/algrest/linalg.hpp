#pragma once

#include "algrest/rational.hpp"

#include <map>
#include <vector>

namespace algrest {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

// Incrementally maintained row space over Q, forward-reduced with unit
// pivots. Vectors carry `cols` main entries plus `aug` bookkeeping entries;
// rank and pivots are decided on the main part only.
class RowSpan {
public:
    explicit RowSpan(int cols, int aug = 0) : cols_(cols), aug_(aug) {}

    int cols() const { return cols_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    // Reduces v against the stored rows and keeps it if it adds rank.
    // Returns true when the rank grew.
    bool insert(RatVec v);

    // v minus its projection onto the span, with the augmented entries
    // accumulating the (negated) combination coefficients of tagged rows.
    RatVec residual(RatVec v) const;

    bool contains(const RatVec &v) const;

private:
    void reduce_in_place(RatVec &v) const;

    int cols_, aug_;
    std::map<int, RatVec> rows_;  // pivot column -> normalized row
};

// Basis of {x : M x = 0} for an ncols-column matrix given by rows.
RatMat nullspace(RatMat rows, int ncols);

int rank(RatMat rows, int ncols);

// Kernel of the linear map given by rows (same as nullspace; named for
// call sites that read better with this spelling).
inline RatMat kernel_basis(RatMat rows, int ncols) { return nullspace(std::move(rows), ncols); }

// Whether M x = b is solvable; if so and sol != nullptr, one solution is
// written there.
bool solve(const RatMat &rows, const RatVec &b, int ncols, RatVec *sol = nullptr);

}  // namespace algrest

#pragma once

#include "algrest/forms.hpp"
#include "algrest/ideal.hpp"
#include "algrest/linalg.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace algrest {

// Coordinates for the space of p-form jets with coefficient degree <= maxdeg:
// one column per (index tuple, coefficient monomial) pair, ordered monomial
// first (graded-lex, lowest degree first), then tuple.
class FormIndex {
public:
    FormIndex(int num_vars, int degree, int maxdeg);

    int size() const { return static_cast<int>(entries_.size()); }
    const std::vector<std::pair<IdxTuple, Exp>> &entries() const { return entries_; }
    int index_of(const IdxTuple &idx, const Exp &e) const;

    RatVec to_vec(const DiffForm &omega) const;  // jet of omega at maxdeg
    DiffForm from_vec(const RatVec &v) const;

private:
    int num_vars_, degree_, maxdeg_;
    std::vector<std::pair<IdxTuple, Exp>> entries_;
    std::map<std::pair<IdxTuple, Exp>, int> index_;
};

class RestrictionSpace;

// Coordinates of [omega]_I in the space's quotient basis.
struct AlgRestriction {
    const RestrictionSpace *space;
    RatVec coords;

    bool is_zero() const {
        for (const Rat &c : coords)
            if (c != 0) return false;
        return true;
    }
};

struct BuildOptions {
    bool closed_only = true;
    int trunc_override = 0;   // 0: use nilpotency_order(I)
    int nilpotency_cap = 24;
    bool check_stability = true;
};

// The quotient Lambda^p (or its closed subspace) modulo
// A^p_0 = { alpha + d beta : alpha in I.Lambda^p, beta in I.Lambda^{p-1} },
// computed on jets at the ideal's nilpotency order.
class RestrictionSpace {
public:
    static RestrictionSpace build(const FGIdeal &ideal, int p, BuildOptions opts = {});

    const FGIdeal &ideal() const { return ideal_; }
    int degree() const { return degree_; }
    int trunc() const { return trunc_; }
    bool closed_only() const { return closed_only_; }
    int dimension() const { return static_cast<int>(quotient_basis_.size()); }
    const std::vector<DiffForm> &quotient_basis() const { return quotient_basis_; }
    const std::vector<DiffForm> &a0_basis() const { return a0_basis_; }
    const std::vector<RatVec> &a0_vectors() const { return a0_vectors_; }
    const FormIndex &form_index() const { return *index_; }

    AlgRestriction reduce(const DiffForm &omega) const;
    RatVec reduce_vec(const DiffForm &omega) const;
    bool is_zero_restriction(const DiffForm &omega) const;
    DiffForm representative(const RatVec &coords) const;

private:
    RestrictionSpace(const FGIdeal &ideal, int p) : ideal_(ideal), degree_(p) {}

    FGIdeal ideal_;
    int degree_ = 0;
    int trunc_ = 0;
    bool closed_only_ = true;
    std::shared_ptr<FormIndex> index_;
    std::vector<DiffForm> quotient_basis_;
    std::vector<DiffForm> a0_basis_;    // independent spanning jets of A^p_0
    std::vector<RatVec> a0_vectors_;
    std::shared_ptr<RowSpan> reduce_span_;        // A^p_0 rows + tagged basis rows
    std::shared_ptr<RowSpan> a0_span_next_degree_;  // A^{p+1}_0, for the closedness check
};

// For closed omega in I.Lambda^p over a quasi-homogeneous ideal: a primitive
// alpha in I.Lambda^{p-1} with d(alpha) = omega, via the graded interior
// product formula alpha = sum_delta (1/delta) i_E(omega_delta).
DiffForm homotopy_primitive(const DiffForm &omega, const FGIdeal &ideal,
                            int nilpotency_cap = 24);

}  // namespace algrest

#include "algrest/restriction.hpp"

#include "algrest/error.hpp"

#include <algorithm>

namespace algrest {

namespace {

std::vector<IdxTuple> index_tuples(int m, int p) {
    std::vector<IdxTuple> out;
    if (p == 0) {
        out.push_back({});
        return out;
    }
    if (p > m || p < 0) return out;
    IdxTuple cur;
    // Iterative combinations in lexicographic order.
    std::vector<int> c(p);
    for (int i = 0; i < p; ++i) c[i] = i;
    while (true) {
        out.emplace_back(c.begin(), c.end());
        int i = p - 1;
        while (i >= 0 && c[i] == m - p + i) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < p; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

}  // namespace

FormIndex::FormIndex(int num_vars, int degree, int maxdeg)
    : num_vars_(num_vars), degree_(degree), maxdeg_(maxdeg) {
    MonoIndex monos(num_vars, maxdeg);
    std::vector<IdxTuple> tuples = index_tuples(num_vars, degree);
    for (const Exp &e : monos.monomials())
        for (const IdxTuple &idx : tuples)
            entries_.emplace_back(idx, e);
    for (int i = 0; i < size(); ++i) index_.emplace(entries_[i], i);
}

int FormIndex::index_of(const IdxTuple &idx, const Exp &e) const {
    auto it = index_.find({idx, e});
    return it == index_.end() ? -1 : it->second;
}

RatVec FormIndex::to_vec(const DiffForm &omega) const {
    RatVec v(size(), Rat(0));
    for (const auto &[idx, c] : omega.components())
        for (const auto &[e, coeff] : c.terms()) {
            int i = index_of(idx, e);
            if (i >= 0) v[i] = coeff;
        }
    return v;
}

DiffForm FormIndex::from_vec(const RatVec &v) const {
    DiffForm w(num_vars_, degree_);
    for (int i = 0; i < size(); ++i)
        if (v[i] != 0)
            w.add_term(Poly::monomial(num_vars_, entries_[i].second, v[i]), entries_[i].first);
    return w;
}

namespace {

// Inserts the spanning jets of A^p_0 into `span`, recording the independent
// ones in `vectors`/`forms` when requested.
void span_a0(const FGIdeal &ideal, int p, int trunc, const FormIndex &index,
             RowSpan &span, std::vector<RatVec> *vectors, std::vector<DiffForm> *forms) {
    int m = ideal.num_vars;
    MonoIndex betas(m, trunc + 1);
    std::vector<IdxTuple> tuples_p = index_tuples(m, p);
    std::vector<IdxTuple> tuples_prev = p >= 1 ? index_tuples(m, p - 1) : std::vector<IdxTuple>{};

    auto feed = [&](const DiffForm &jet) {
        if (jet.is_zero()) return;
        RatVec v = index.to_vec(jet);
        if (!span.insert(v)) return;
        if (vectors) vectors->push_back(index.to_vec(jet));
        if (forms) forms->push_back(jet);
    };

    for (const Poly &g : ideal.generators) {
        for (const Exp &beta : betas.monomials()) {
            Poly coeff = g * Poly::monomial(m, beta, 1);
            for (const IdxTuple &idx : tuples_p)
                feed(DiffForm::monomial_form(coeff, idx).truncate_coeff(trunc));
            for (const IdxTuple &idx : tuples_prev)
                feed(exterior_derivative(DiffForm::monomial_form(coeff, idx))
                         .truncate_coeff(trunc));
        }
    }
}

}  // namespace

RestrictionSpace RestrictionSpace::build(const FGIdeal &ideal, int p, BuildOptions opts) {
    RestrictionSpace space(ideal, p);
    space.closed_only_ = opts.closed_only;

    int T;
    if (opts.trunc_override > 0) {
        T = opts.trunc_override;
    } else {
        auto n = nilpotency_order(ideal, opts.nilpotency_cap);
        if (!n)
            throw DomainError("zero_dimensional",
                              "no nilpotency order below the cap; the ideal is not "
                              "zero-dimensional (or the cap is too small)");
        T = *n;
    }
    space.trunc_ = T;

    space.index_ = std::make_shared<FormIndex>(ideal.num_vars, p, T);
    const FormIndex &index = *space.index_;

    RowSpan a0(index.size());
    span_a0(ideal, p, T, index, a0, &space.a0_vectors_, &space.a0_basis_);

    // Quotient representatives: monomial p-forms in graded-lex order, lowest
    // degree first, kept when independent of A^p_0 and the earlier picks.
    RowSpan sel(index.size());
    for (const RatVec &v : space.a0_vectors_) sel.insert(v);
    std::vector<RatVec> chosen_vecs;
    for (const auto &[idx, e] : index.entries()) {
        DiffForm cand = DiffForm::monomial_form(Poly::monomial(ideal.num_vars, e, 1), idx);
        if (opts.closed_only && p < ideal.num_vars &&
            !exterior_derivative(cand).is_zero())
            continue;
        RatVec v = index.to_vec(cand);
        if (sel.insert(v)) {
            space.quotient_basis_.push_back(cand);
            chosen_vecs.push_back(std::move(v));
        }
    }

    if (opts.closed_only) {
        // The monomial representatives must exhaust the closed classes:
        // rank(A0 + closed) - rank(A0) equals the number of picks.
        FormIndex next(ideal.num_vars, std::min(p + 1, ideal.num_vars), T);
        RatMat d_rows;
        for (const auto &[idx, e] : index.entries()) {
            DiffForm de = exterior_derivative(
                DiffForm::monomial_form(Poly::monomial(ideal.num_vars, e, 1), idx));
            d_rows.push_back(next.to_vec(de));
        }
        // Columns of d as a map: transpose so nullspace works on p-form coords.
        RatMat d_t(next.size(), RatVec(index.size(), Rat(0)));
        for (int i = 0; i < index.size(); ++i)
            for (int j = 0; j < next.size(); ++j)
                if (d_rows[i][j] != 0) d_t[j][i] = d_rows[i][j];
        RatMat closed = nullspace(std::move(d_t), index.size());
        // Monomial forms alone cannot represent classes like [z dy + y dz]
        // whose summands are not closed; complete the basis with general
        // closed jets where needed (never hit for p = 2 in two variables).
        for (const RatVec &v : closed) {
            if (sel.insert(v)) {
                space.quotient_basis_.push_back(index.from_vec(v));
                chosen_vecs.push_back(v);
            }
        }
        RowSpan check(index.size());
        for (const RatVec &v : space.a0_vectors_) check.insert(v);
        int a0_rank = check.rank();
        for (RatVec &v : closed) check.insert(std::move(v));
        if (check.rank() - a0_rank != space.dimension())
            throw DomainError("quotient_basis",
                              "chosen representatives do not span the closed quotient");
    }

    // Reduction span: A^p_0 rows untagged, quotient rows tagged with unit
    // bookkeeping entries.
    int q = space.dimension();
    space.reduce_span_ = std::make_shared<RowSpan>(index.size(), q);
    for (const RatVec &v : space.a0_vectors_) {
        RatVec row = v;
        row.resize(index.size() + q, Rat(0));
        space.reduce_span_->insert(std::move(row));
    }
    for (int k = 0; k < q; ++k) {
        RatVec row = chosen_vecs[k];
        row.resize(index.size() + q, Rat(0));
        row[index.size() + k] = 1;
        space.reduce_span_->insert(std::move(row));
    }

    if (opts.closed_only) {
        int p1 = std::min(p + 1, ideal.num_vars);
        FormIndex next(ideal.num_vars, p1, T);
        space.a0_span_next_degree_ = std::make_shared<RowSpan>(next.size());
        RowSpan &s = *space.a0_span_next_degree_;
        span_a0(ideal, p1, T, next, s, nullptr, nullptr);
    }

    if (opts.check_stability && opts.trunc_override == 0) {
        BuildOptions probe = opts;
        probe.check_stability = false;
        probe.trunc_override = T + 1;
        RestrictionSpace above = build(ideal, p, probe);
        if (above.dimension() != space.dimension())
            throw DomainError("trunc_stability",
                              "quotient dimension changed between trunc and trunc+1");
    }
    return space;
}

RatVec RestrictionSpace::reduce_vec(const DiffForm &omega) const {
    if (omega.num_vars() != ideal_.num_vars || omega.degree() != degree_)
        throw DomainError("form_degree", "form does not match the restriction space");
    if (closed_only_ && degree_ < ideal_.num_vars) {
        DiffForm d = exterior_derivative(omega).truncate_coeff(trunc_);
        FormIndex next(ideal_.num_vars, std::min(degree_ + 1, ideal_.num_vars), trunc_);
        if (!a0_span_next_degree_->contains(next.to_vec(d)))
            throw DomainError("closed_restriction",
                              "d(omega) has nonzero algebraic restriction");
    }
    RatVec v = index_->to_vec(omega.truncate_coeff(trunc_));
    RatVec res = reduce_span_->residual(std::move(v));
    for (int i = 0; i < index_->size(); ++i)
        if (res[i] != 0)
            throw DomainError("representable",
                              "form is not representable in this restriction space");
    RatVec coords(dimension(), Rat(0));
    for (int k = 0; k < dimension(); ++k) coords[k] = -res[index_->size() + k];
    return coords;
}

AlgRestriction RestrictionSpace::reduce(const DiffForm &omega) const {
    return AlgRestriction{this, reduce_vec(omega)};
}

bool RestrictionSpace::is_zero_restriction(const DiffForm &omega) const {
    return reduce(omega).is_zero();
}

DiffForm RestrictionSpace::representative(const RatVec &coords) const {
    if (static_cast<int>(coords.size()) != dimension())
        throw DomainError("dimension_match", "coordinate length != quotient dimension");
    DiffForm w(ideal_.num_vars, degree_);
    for (int k = 0; k < dimension(); ++k)
        w = w + quotient_basis_[k].scaled(coords[k]);
    return w;
}

DiffForm homotopy_primitive(const DiffForm &omega, const FGIdeal &ideal,
                            int nilpotency_cap) {
    if (omega.degree() < 1)
        throw DomainError("form_degree", "primitive of a 0-form is undefined");
    if (omega.num_vars() != ideal.num_vars)
        throw DomainError("dimension_match", "form/ideal variable mismatch");
    if (!ideal.weights)
        throw DomainError("quasi_homogeneous", "ideal carries no weight data");
    if (omega.degree() < ideal.num_vars &&
        !exterior_derivative(omega).is_zero())
        throw DomainError("closed", "omega must be closed");

    auto n = nilpotency_order(ideal, nilpotency_cap);
    if (!n)
        throw DomainError("zero_dimensional", "no nilpotency order below the cap");
    // m^{N+1} lies in I, so membership is decided by the N-jet alone.
    JetSpan span(ideal, *n);
    for (const auto &[idx, c] : omega.components())
        if (!span.contains(c))
            throw DomainError("ideal_membership",
                              "omega is not in I.Lambda^p");

    VectorField E = euler_field(*ideal.weights);
    DiffForm alpha(omega.num_vars(), omega.degree() - 1);
    for (const auto &[delta, piece] : graded_pieces(omega, *ideal.weights)) {
        if (delta <= 0)
            throw DomainError("positive_quasi_degree",
                              "malformed input: a graded piece has quasi-degree <= 0");
        alpha = alpha + interior_product(E, piece).scaled(Rat(1, delta));
    }
    return alpha;
}

}  // namespace algrest

#include "algrest/forms.hpp"

#include "algrest/error.hpp"

#include <algorithm>

namespace algrest {

namespace {

// Sorts indices, returns the permutation sign, or 0 on a repeat.
int normalize_indices(IdxTuple &idx) {
    int sign = 1;
    for (size_t i = 0; i + 1 < idx.size(); ++i)
        for (size_t j = 0; j + 1 < idx.size() - i; ++j)
            if (idx[j] > idx[j + 1]) {
                std::swap(idx[j], idx[j + 1]);
                sign = -sign;
            }
    for (size_t i = 0; i + 1 < idx.size(); ++i)
        if (idx[i] == idx[i + 1]) return 0;
    return sign;
}

}  // namespace

DiffForm::DiffForm(int num_vars, int degree) : num_vars_(num_vars), degree_(degree) {
    if (degree < 0 || degree > num_vars)
        throw DomainError("form_degree", "degree must satisfy 0 <= p <= num_vars");
}

DiffForm DiffForm::from_poly(const Poly &f) {
    DiffForm w(f.num_vars(), 0);
    w.add_term(f, {});
    return w;
}

DiffForm DiffForm::monomial_form(const Poly &coeff, const IdxTuple &indices) {
    DiffForm w(coeff.num_vars(), static_cast<int>(indices.size()));
    w.add_term(coeff, indices);
    return w;
}

void DiffForm::add_term(const Poly &coeff, const IdxTuple &indices) {
    if (static_cast<int>(indices.size()) != degree_)
        throw DomainError("form_degree", "index tuple size != form degree");
    if (coeff.num_vars() != num_vars_)
        throw DomainError("dimension_match", "coefficient variable count mismatch");
    IdxTuple idx = indices;
    for (int i : idx)
        if (i < 0 || i >= num_vars_)
            throw DomainError("variable_index", "differential index out of range");
    int sign = normalize_indices(idx);
    if (sign == 0 || coeff.is_zero()) return;
    Poly add = sign == 1 ? coeff : -coeff;
    auto it = comps_.find(idx);
    if (it == comps_.end()) {
        comps_.emplace(std::move(idx), std::move(add));
    } else {
        it->second = it->second + add;
        if (it->second.is_zero()) comps_.erase(it);
    }
}

Poly DiffForm::component(const IdxTuple &sorted_indices) const {
    auto it = comps_.find(sorted_indices);
    return it == comps_.end() ? Poly(num_vars_) : it->second;
}

Poly DiffForm::as_poly() const {
    if (degree_ != 0)
        throw DomainError("form_degree", "only a 0-form is identified with a Poly");
    return component({});
}

DiffForm DiffForm::operator-() const { return scaled(Rat(-1)); }

DiffForm DiffForm::operator+(const DiffForm &o) const {
    if (num_vars_ != o.num_vars_ || degree_ != o.degree_)
        throw DomainError("dimension_match", "form sum shape mismatch");
    DiffForm r = *this;
    for (const auto &[idx, c] : o.comps_) r.add_term(c, idx);
    return r;
}

DiffForm DiffForm::operator-(const DiffForm &o) const { return *this + (-o); }

DiffForm DiffForm::scaled(const Rat &c) const {
    DiffForm r(num_vars_, degree_);
    if (c == 0) return r;
    for (const auto &[idx, f] : comps_) r.comps_.emplace(idx, f.scaled(c));
    return r;
}

DiffForm DiffForm::scaled(const Poly &f) const {
    DiffForm r(num_vars_, degree_);
    for (const auto &[idx, c] : comps_) r.add_term(f * c, idx);
    return r;
}

bool DiffForm::operator==(const DiffForm &o) const {
    return num_vars_ == o.num_vars_ && degree_ == o.degree_ && comps_ == o.comps_;
}

DiffForm DiffForm::truncate_coeff(int d) const {
    DiffForm r(num_vars_, degree_);
    for (const auto &[idx, c] : comps_) r.add_term(c.truncate(d), idx);
    return r;
}

long long DiffForm::max_coeff_degree() const {
    long long d = 0;
    for (const auto &[idx, c] : comps_) d = std::max(d, c.total_degree());
    return d;
}

VectorField::VectorField(std::vector<Poly> comps) : components(std::move(comps)) {
    if (components.empty())
        throw DomainError("dimension_match", "vector field needs at least one component");
    for (const Poly &c : components)
        if (c.num_vars() != num_vars())
            throw DomainError("dimension_match", "vector field component variable mismatch");
}

Poly VectorField::apply(const Poly &f) const {
    if (f.num_vars() != num_vars())
        throw DomainError("dimension_match", "vector field applied across variable spaces");
    Poly r(f.num_vars());
    for (int i = 0; i < num_vars(); ++i) r = r + components[i] * f.derivative(i);
    return r;
}

PolyMap::PolyMap(std::vector<Poly> comps) : components(std::move(comps)) {
    if (components.empty())
        throw DomainError("dimension_match", "map needs at least one component");
    for (const Poly &c : components) {
        if (c.num_vars() != source_vars())
            throw DomainError("dimension_match", "map component variable mismatch");
        if (!c.vanishes_at_origin())
            throw DomainError("germ_at_origin", "map components must vanish at 0");
    }
}

PolyMap PolyMap::identity(int num_vars) {
    std::vector<Poly> comps;
    for (int i = 0; i < num_vars; ++i) comps.push_back(Poly::variable(num_vars, i));
    return PolyMap(std::move(comps));
}

PolyMap PolyMap::scaling(const Weights &w, const Rat &t) {
    std::vector<Poly> comps;
    for (int i = 0; i < w.size(); ++i) {
        Rat c = 1;
        for (long long k = 0; k < w.lambda[i]; ++k) c *= t;
        comps.push_back(Poly::variable(w.size(), i).scaled(c));
    }
    return PolyMap(std::move(comps));
}

DiffForm exterior_derivative(const DiffForm &omega) {
    int m = omega.num_vars();
    int p = omega.degree();
    // d of a top-degree form vanishes identically; degree m+1 is not
    // representable, so the zero result is reported at degree m.
    if (p >= m) return DiffForm(m, m);
    DiffForm r(m, p + 1);
    for (const auto &[idx, c] : omega.components()) {
        for (int i = 0; i < m; ++i) {
            Poly dc = c.derivative(i);
            if (dc.is_zero()) continue;
            IdxTuple widened;
            widened.push_back(i);
            widened.insert(widened.end(), idx.begin(), idx.end());
            r.add_term(dc, widened);
        }
    }
    return r;
}

DiffForm wedge(const DiffForm &alpha, const DiffForm &beta) {
    if (alpha.num_vars() != beta.num_vars())
        throw DomainError("dimension_match", "wedge across variable spaces");
    int m = alpha.num_vars();
    int p = alpha.degree() + beta.degree();
    if (p > m) return DiffForm(m, m);  // zero top-degree-overflow form
    DiffForm r(m, p);
    for (const auto &[ia, ca] : alpha.components()) {
        for (const auto &[ib, cb] : beta.components()) {
            IdxTuple idx = ia;
            idx.insert(idx.end(), ib.begin(), ib.end());
            r.add_term(ca * cb, idx);
        }
    }
    return r;
}

DiffForm interior_product(const VectorField &X, const DiffForm &omega) {
    if (X.num_vars() != omega.num_vars())
        throw DomainError("dimension_match", "interior product across variable spaces");
    if (omega.degree() < 1)
        throw DomainError("form_degree", "interior product needs degree >= 1");
    DiffForm r(omega.num_vars(), omega.degree() - 1);
    for (const auto &[idx, c] : omega.components()) {
        for (size_t k = 0; k < idx.size(); ++k) {
            Poly coeff = c * X.components[idx[k]];
            if (coeff.is_zero()) continue;
            if (k % 2 == 1) coeff = -coeff;
            IdxTuple rest;
            for (size_t j = 0; j < idx.size(); ++j)
                if (j != k) rest.push_back(idx[j]);
            r.add_term(coeff, rest);
        }
    }
    return r;
}

DiffForm lie_derivative(const VectorField &X, const DiffForm &omega) {
    if (omega.degree() == 0)
        return DiffForm::from_poly(X.apply(omega.as_poly()));
    DiffForm a = exterior_derivative(interior_product(X, omega));
    if (omega.degree() == omega.num_vars()) return a;  // d(omega) vanishes
    DiffForm b = interior_product(X, exterior_derivative(omega));
    return a + b;
}

DiffForm pullback(const PolyMap &phi, const DiffForm &omega, int trunc) {
    if (phi.target_vars() != omega.num_vars())
        throw DomainError("dimension_match", "pullback target dimension mismatch");
    int s = phi.source_vars();
    if (omega.degree() > s) return DiffForm(s, s);
    DiffForm r(s, omega.degree());

    // d(phi_j) for every target variable, computed once.
    std::vector<DiffForm> dphi;
    for (const Poly &c : phi.components)
        dphi.push_back(exterior_derivative(DiffForm::from_poly(c)));

    for (const auto &[idx, c] : omega.components()) {
        DiffForm term = DiffForm::from_poly(c.compose(phi.components, trunc));
        for (int j : idx) {
            term = wedge(term, dphi[j]);
            term = term.truncate_coeff(trunc);
        }
        if (term.degree() == omega.degree()) r = r + term;
    }
    return r.truncate_coeff(trunc);
}

VectorField euler_field(const Weights &w) {
    std::vector<Poly> comps;
    for (int i = 0; i < w.size(); ++i)
        comps.push_back(Poly::variable(w.size(), i).scaled(Rat(w.lambda[i])));
    return VectorField(std::move(comps));
}

namespace {

long long tuple_weight(const IdxTuple &idx, const Weights &w) {
    long long d = 0;
    for (int i : idx) d += w.lambda[i];
    return d;
}

}  // namespace

QuasiDegree form_quasi_degree(const DiffForm &omega, const Weights &w) {
    if (omega.num_vars() != w.size())
        throw DomainError("dimension_match", "form/weight dimension mismatch");
    QuasiDegree result;
    if (omega.is_zero()) {
        result.is_zero = true;
        return result;
    }
    std::optional<long long> deg;
    for (const auto &[idx, c] : omega.components()) {
        long long shift = tuple_weight(idx, w);
        for (const auto &[e, coeff] : c.terms()) {
            long long d = weighted_degree(e, w) + shift;
            if (!deg) {
                deg = d;
            } else if (*deg != d) {
                return result;
            }
        }
    }
    result.degree = deg;
    return result;
}

std::map<long long, DiffForm> graded_pieces(const DiffForm &omega, const Weights &w) {
    std::map<long long, DiffForm> pieces;
    for (const auto &[idx, c] : omega.components()) {
        long long shift = tuple_weight(idx, w);
        for (const auto &[e, coeff] : c.terms()) {
            long long d = weighted_degree(e, w) + shift;
            auto [it, created] =
                pieces.try_emplace(d, DiffForm(omega.num_vars(), omega.degree()));
            it->second.add_term(Poly::monomial(omega.num_vars(), e, coeff), idx);
        }
    }
    return pieces;
}

}  // namespace algrest

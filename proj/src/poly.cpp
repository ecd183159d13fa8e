#include "algrest/poly.hpp"

#include <numeric>

namespace algrest {

Weights::Weights(std::vector<long long> l) : lambda(std::move(l)) {
    if (lambda.empty())
        throw DomainError("weights_nonempty", "weight vector must be nonempty");
    long long g = 0;
    for (long long x : lambda) {
        if (x < 1)
            throw DomainError("weights_positive", "all weights must be >= 1");
        g = std::gcd(g, x);
    }
    if (g != 1)
        throw DomainError("weights_primitive", "weight vector must have gcd 1");
}

long long weighted_degree(const Exp &e, const Weights &w) {
    if (static_cast<int>(e.size()) != w.size())
        throw DomainError("dimension_match", "exponent/weight length mismatch");
    long long d = 0;
    for (size_t i = 0; i < e.size(); ++i) d += e[i] * w.lambda[i];
    return d;
}

Poly::Poly(int num_vars) : num_vars_(num_vars) {
    if (num_vars < 0)
        throw DomainError("num_vars_nonnegative", "negative variable count");
}

Poly Poly::constant(int num_vars, const Rat &c) {
    Poly p(num_vars);
    p.add_term(Exp(num_vars, 0), c);
    return p;
}

Poly Poly::variable(int num_vars, int i) {
    if (i < 0 || i >= num_vars)
        throw DomainError("variable_index", "variable index out of range");
    Exp e(num_vars, 0);
    e[i] = 1;
    return monomial(num_vars, e, 1);
}

Poly Poly::monomial(int num_vars, const Exp &e, const Rat &c) {
    if (static_cast<int>(e.size()) != num_vars)
        throw DomainError("dimension_match", "exponent length != num_vars");
    for (int x : e)
        if (x < 0) throw DomainError("exponent_nonnegative", "negative exponent");
    Poly p(num_vars);
    p.add_term(e, c);
    return p;
}

void Poly::add_term(const Exp &e, const Rat &c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Poly::check_vars(const Poly &o) const {
    if (num_vars_ != o.num_vars_)
        throw DomainError("dimension_match", "operands live on different variable spaces");
}

Rat Poly::coeff(const Exp &e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat Poly::constant_term() const { return coeff(Exp(num_vars_, 0)); }

std::vector<Rat> Poly::linear_part() const {
    std::vector<Rat> lin(num_vars_, Rat(0));
    for (int i = 0; i < num_vars_; ++i) {
        Exp e(num_vars_, 0);
        e[i] = 1;
        lin[i] = coeff(e);
    }
    return lin;
}

long long Poly::total_degree() const {
    long long d = 0;
    for (const auto &[e, c] : terms_) d = std::max(d, exp_total_degree(e));
    return d;
}

Poly Poly::operator-() const {
    Poly r(num_vars_);
    for (const auto &[e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly Poly::operator+(const Poly &o) const {
    check_vars(o);
    Poly r = *this;
    for (const auto &[e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Poly Poly::operator-(const Poly &o) const {
    check_vars(o);
    Poly r = *this;
    for (const auto &[e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Poly Poly::operator*(const Poly &o) const {
    check_vars(o);
    Poly r(num_vars_);
    for (const auto &[ea, ca] : terms_) {
        for (const auto &[eb, cb] : o.terms_) {
            Exp e(num_vars_);
            for (int i = 0; i < num_vars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Poly Poly::scaled(const Rat &c) const {
    Poly r(num_vars_);
    if (c == 0) return r;
    for (const auto &[e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

Poly Poly::pow(int k) const {
    if (k < 0) throw DomainError("exponent_nonnegative", "negative power");
    Poly r = constant(num_vars_, 1);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

bool Poly::operator==(const Poly &o) const {
    return num_vars_ == o.num_vars_ && terms_ == o.terms_;
}

Poly Poly::derivative(int i) const {
    Poly r(num_vars_);
    for (const auto &[e, c] : terms_) {
        if (e[i] == 0) continue;
        Exp d = e;
        d[i] -= 1;
        r.add_term(d, c * e[i]);
    }
    return r;
}

Poly Poly::truncate(int d) const {
    Poly r(num_vars_);
    for (const auto &[e, c] : terms_)
        if (exp_total_degree(e) <= d) r.terms_.emplace(e, c);
    return r;
}

Poly Poly::truncate(int d, const Weights &w) const {
    Poly r(num_vars_);
    for (const auto &[e, c] : terms_)
        if (weighted_degree(e, w) <= d) r.terms_.emplace(e, c);
    return r;
}

Poly Poly::compose(const std::vector<Poly> &comps, int trunc) const {
    if (static_cast<int>(comps.size()) != num_vars_)
        throw DomainError("dimension_match", "substitution arity mismatch");
    int target_vars = comps.empty() ? 0 : comps[0].num_vars();
    for (const Poly &c : comps)
        if (c.num_vars() != target_vars)
            throw DomainError("dimension_match", "substitution components disagree on variables");

    auto clip = [&](const Poly &p) { return trunc >= 0 ? p.truncate(trunc) : p; };

    // Cached powers per component.
    std::vector<std::vector<Poly>> powers(num_vars_);
    for (int i = 0; i < num_vars_; ++i)
        powers[i].push_back(Poly::constant(target_vars, 1));

    Poly result(target_vars);
    for (const auto &[e, c] : terms_) {
        Poly term = Poly::constant(target_vars, c);
        for (int i = 0; i < num_vars_; ++i) {
            while (static_cast<int>(powers[i].size()) <= e[i])
                powers[i].push_back(clip(powers[i].back() * comps[i]));
            term = clip(term * powers[i][e[i]]);
        }
        result = result + term;
    }
    return result;
}

Poly Poly::weighted_part(long long d, const Weights &w) const {
    Poly r(num_vars_);
    for (const auto &[e, c] : terms_)
        if (weighted_degree(e, w) == d) r.terms_.emplace(e, c);
    return r;
}

QuasiDegree quasi_degree(const Poly &f, const Weights &w) {
    if (f.num_vars() != w.size())
        throw DomainError("dimension_match", "polynomial/weight dimension mismatch");
    QuasiDegree result;
    if (f.is_zero()) {
        result.is_zero = true;
        return result;
    }
    std::optional<long long> deg;
    for (const auto &[e, c] : f.terms()) {
        long long d = weighted_degree(e, w);
        if (!deg) {
            deg = d;
        } else if (*deg != d) {
            return result;  // monomials disagree
        }
    }
    result.degree = deg;
    return result;
}

}  // namespace algrest

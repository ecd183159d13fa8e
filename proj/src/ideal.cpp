#include "algrest/ideal.hpp"

#include "algrest/error.hpp"

#include <algorithm>
#include <numeric>

namespace algrest {

namespace {

void enumerate_monos(int num_vars, int max_degree, int pos, Exp &cur, int used,
                     std::vector<Exp> &out) {
    if (pos == num_vars) {
        out.push_back(cur);
        return;
    }
    for (int e = 0; e + used <= max_degree; ++e) {
        cur[pos] = e;
        enumerate_monos(num_vars, max_degree, pos + 1, cur, used + e, out);
    }
    cur[pos] = 0;
}

}  // namespace

MonoIndex::MonoIndex(int num_vars, int max_degree)
    : num_vars_(num_vars), max_degree_(max_degree) {
    Exp cur(num_vars, 0);
    if (num_vars == 0) {
        monos_.push_back(cur);
    } else {
        enumerate_monos(num_vars, max_degree, 0, cur, 0, monos_);
    }
    std::sort(monos_.begin(), monos_.end(), MonoLess{});
    for (int i = 0; i < static_cast<int>(monos_.size()); ++i) index_.emplace(monos_[i], i);
}

int MonoIndex::index_of(const Exp &e) const {
    auto it = index_.find(e);
    return it == index_.end() ? -1 : it->second;
}

RatVec MonoIndex::to_vec(const Poly &f) const {
    RatVec v(size(), Rat(0));
    for (const auto &[e, c] : f.terms()) {
        int i = index_of(e);
        if (i >= 0) v[i] = c;
    }
    return v;
}

Poly MonoIndex::from_vec(const RatVec &v) const {
    Poly f(num_vars_);
    for (int i = 0; i < size(); ++i)
        if (v[i] != 0) f = f + Poly::monomial(num_vars_, monos_[i], v[i]);
    return f;
}

FGIdeal::FGIdeal(std::vector<Poly> gens, std::optional<Weights> w)
    : generators(std::move(gens)), num_vars(0), weights(std::move(w)) {
    if (generators.empty())
        throw DomainError("generators_nonempty", "ideal needs at least one generator");
    num_vars = generators[0].num_vars();
    for (const Poly &g : generators) {
        if (g.num_vars() != num_vars)
            throw DomainError("dimension_match", "generator variable counts disagree");
        if (!g.vanishes_at_origin())
            throw DomainError("germ_at_origin", "generators must vanish at 0");
    }
    if (weights) {
        for (const Poly &g : generators) {
            QuasiDegree qd = quasi_degree(g, *weights);
            if (!qd.degree && !qd.is_zero)
                throw DomainError("quasi_homogeneous",
                                  "generator is not quasi-homogeneous for the given weights");
            quasi_degrees.push_back(qd.degree.value_or(0));
        }
    }
}

long long FGIdeal::max_generator_degree() const {
    long long d = 0;
    for (const Poly &g : generators) d = std::max(d, g.total_degree());
    return d;
}

void FGIdeal::detect_weights() {
    if (auto sol = find_weights(generators)) {
        weights = sol->weights;
        quasi_degrees = sol->quasi_degrees;
    }
}

JetSpan::JetSpan(const FGIdeal &ideal, int d)
    : d_(d), index_(ideal.num_vars, d), span_(index_.size()) {
    MonoIndex betas(ideal.num_vars, d);
    for (const Poly &g : ideal.generators) {
        for (const Exp &beta : betas.monomials()) {
            Poly prod = (g * Poly::monomial(ideal.num_vars, beta, 1)).truncate(d);
            if (prod.is_zero()) continue;
            span_.insert(index_.to_vec(prod));
        }
    }
}

bool JetSpan::contains(const Poly &f) const {
    return span_.contains(index_.to_vec(f.truncate(d_)));
}

std::optional<WeightSolution> find_weights(const std::vector<Poly> &gens) {
    if (gens.empty()) return std::nullopt;
    int m = gens[0].num_vars();
    for (const Poly &g : gens) {
        if (g.is_zero() || !g.vanishes_at_origin()) return std::nullopt;
        if (g.num_vars() != m)
            throw DomainError("dimension_match", "generator variable counts disagree");
    }

    // Exponent-difference constraints: within one generator all monomials
    // share the same weighted degree.
    RatMat constraints;
    for (const Poly &g : gens) {
        const Exp &first = g.terms().begin()->first;
        for (const auto &[e, c] : g.terms()) {
            if (e == first) continue;
            RatVec row(m, Rat(0));
            for (int i = 0; i < m; ++i) row[i] = Rat(e[i] - first[i]);
            constraints.push_back(std::move(row));
        }
    }

    std::optional<std::vector<long long>> best;
    auto consider = [&](RatVec w) {
        // Require strict positivity, then scale to the primitive integer
        // vector on the same ray.
        for (const Rat &x : w)
            if (x <= 0) return;
        Int l = 1;
        for (const Rat &x : w) l = lcm(l, denominator(x));
        std::vector<Int> iv;
        Int g = 0;
        for (const Rat &x : w) {
            Int n = numerator(Rat(x * l));
            iv.push_back(n);
            g = gcd(g, n);
        }
        std::vector<long long> cand;
        for (Int &n : iv) {
            Int s = n / g;
            if (s > 64) return;  // bounded grid
            cand.push_back(s.convert_to<long long>());
        }
        if (!best || cand < *best) best = cand;
    };

    if (constraints.empty()) {
        best = std::vector<long long>(m, 1);
    } else {
        RatMat basis = nullspace(constraints, m);
        int d = static_cast<int>(basis.size());
        if (d == 0) return std::nullopt;
        if (d > 3)
            throw DomainError("weight_space_dimension",
                              "weight solution space too large to scan");
        // Scan integer combinations of the nullspace basis.
        std::vector<long long> coeff(d, -64);
        while (true) {
            bool all_zero = true;
            for (long long c : coeff)
                if (c != 0) all_zero = false;
            if (!all_zero) {
                RatVec w(m, Rat(0));
                for (int k = 0; k < d; ++k)
                    for (int i = 0; i < m; ++i) w[i] += Rat(coeff[k]) * basis[k][i];
                consider(std::move(w));
            }
            int k = 0;
            while (k < d && coeff[k] == 64) coeff[k++] = -64;
            if (k == d) break;
            ++coeff[k];
        }
    }

    if (!best) return std::nullopt;
    Weights w(*best);
    WeightSolution sol{w, {}};
    for (const Poly &g : gens) {
        QuasiDegree qd = quasi_degree(g, w);
        if (!qd.degree) return std::nullopt;  // cannot happen for scanned solutions
        sol.quasi_degrees.push_back(*qd.degree);
    }
    return sol;
}

bool jet_membership(const Poly &f, const FGIdeal &ideal, int d) {
    if (f.num_vars() != ideal.num_vars)
        throw DomainError("dimension_match", "polynomial/ideal variable mismatch");
    return JetSpan(ideal, d).contains(f);
}

std::optional<int> nilpotency_order(const FGIdeal &ideal, int cap) {
    long long gdeg = ideal.max_generator_degree();
    for (int n = 1; n <= cap; ++n) {
        int d = n + static_cast<int>(gdeg);
        JetSpan span(ideal, d);
        MonoIndex monos(ideal.num_vars, n);
        bool all_in = true;
        for (const Exp &e : monos.monomials()) {
            if (exp_total_degree(e) != n) continue;
            if (!span.contains(Poly::monomial(ideal.num_vars, e, 1))) {
                all_in = false;
                break;
            }
        }
        if (all_in) return n;
    }
    return std::nullopt;
}

EmbeddingCodim embedding_codim(const FGIdeal &ideal) {
    RatMat lin;
    for (const Poly &g : ideal.generators) lin.push_back(g.linear_part());
    EmbeddingCodim result;
    result.kernel = nullspace(lin, ideal.num_vars);
    result.codim = ideal.num_vars - static_cast<int>(result.kernel.size());
    return result;
}

FGIdeal suspend(const FGIdeal &ideal, int extra_vars) {
    if (extra_vars < 0)
        throw DomainError("suspension_count", "extra variable count must be >= 0");
    if (extra_vars == 0) return ideal;
    int m = ideal.num_vars, mm = m + extra_vars;
    std::vector<Poly> gens;
    for (const Poly &g : ideal.generators) {
        Poly h(mm);
        for (const auto &[e, c] : g.terms()) {
            Exp ee = e;
            ee.resize(mm, 0);
            h = h + Poly::monomial(mm, ee, c);
        }
        gens.push_back(h);
    }
    for (int i = 0; i < extra_vars; ++i) gens.push_back(Poly::variable(mm, m + i));

    std::optional<Weights> w;
    if (ideal.weights) {
        std::vector<long long> lam = ideal.weights->lambda;
        lam.resize(mm, 1);
        w = Weights(lam);
    }
    return FGIdeal(std::move(gens), w);
}

FGIdeal restrict_ideal_to_graph(const FGIdeal &ideal, const PolyMap &graph, int trunc) {
    if (graph.target_vars() != ideal.num_vars)
        throw DomainError("dimension_match", "graph parametrization dimension mismatch");
    std::vector<Poly> gens;
    for (const Poly &g : ideal.generators) {
        Poly h = g.compose(graph.components, trunc);
        if (!h.is_zero()) gens.push_back(h);
    }
    // All generators may die on the submanifold (the zero-variable ideal of
    // a point); keep a single zero generator so the value stays well formed.
    if (gens.empty()) gens.push_back(Poly(graph.source_vars()));
    FGIdeal result(std::move(gens));
    result.detect_weights();
    return result;
}

}  // namespace algrest

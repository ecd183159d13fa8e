#include "algrest/symclass.hpp"

#include "algrest/error.hpp"

#include <algorithm>

namespace algrest {

std::optional<Family> family_from_string(const std::string &name) {
    if (name == "Iab" || name == "Ia,b") return Family::Iab;
    if (name == "I2a+1") return Family::I2a1;
    if (name == "I2a+4") return Family::I2a4;
    if (name == "Ia+5") return Family::Ia5;
    if (name == "I10star" || name == "I10*") return Family::I10star;
    return std::nullopt;
}

std::string family_to_string(Family f) {
    switch (f) {
        case Family::Iab: return "Iab";
        case Family::I2a1: return "I2a+1";
        case Family::I2a4: return "I2a+4";
        case Family::Ia5: return "Ia+5";
        case Family::I10star: return "I10star";
    }
    return "?";
}

bool family_uses_a(Family f) { return f != Family::I10star; }
bool family_uses_b(Family f) { return f == Family::Iab; }

void check_family_params(Family f, const FamilyParams &p) {
    switch (f) {
        case Family::Iab:
            if (!(p.a >= p.b && p.b >= 2))
                throw DomainError("family_params", "Iab requires a >= b >= 2");
            break;
        case Family::I2a1:
            if (p.a < 3) throw DomainError("family_params", "I2a+1 requires a >= 3");
            break;
        case Family::I2a4:
            if (p.a < 2) throw DomainError("family_params", "I2a+4 requires a >= 2");
            break;
        case Family::Ia5:
            if (p.a < 4) throw DomainError("family_params", "Ia+5 requires a >= 4");
            break;
        case Family::I10star:
            break;
    }
}

int family_class_count(Family f) {
    switch (f) {
        case Family::Iab: return 2;
        case Family::I10star: return 4;
        default: return 3;
    }
}

namespace {

// The two template generators of the family in an m-variable space, with
// the roles of (y, z) played by variables u and v.
std::pair<Poly, Poly> family_templates(Family f, const FamilyParams &p, int m, int u, int v) {
    Poly y = Poly::variable(m, u), z = Poly::variable(m, v);
    switch (f) {
        case Family::Iab:
            return {y * z, y.pow(static_cast<int>(p.a)) + z.pow(static_cast<int>(p.b))};
        case Family::I2a1:
            return {y * y + z.pow(3), z.pow(static_cast<int>(p.a))};
        case Family::I2a4:
            return {y * y + z.pow(3), y * z.pow(static_cast<int>(p.a))};
        case Family::Ia5:
            return {y * y + z.pow(static_cast<int>(p.a)), y * z * z};
        case Family::I10star:
            return {y * y, z.pow(4)};
    }
    throw DomainError("family", "unknown family");
}

}  // namespace

FGIdeal plane_ideal(Family f, const FamilyParams &p) {
    check_family_params(f, p);
    auto [g1, g2] = family_templates(f, p, 2, 0, 1);
    FGIdeal ideal({g1, g2});
    ideal.detect_weights();
    return ideal;
}

namespace {

// Exponent k if f == c * x_var^k with c == 1 and k >= 1.
std::optional<int> pure_power(const Poly &f, int var) {
    if (f.terms().size() != 1) return std::nullopt;
    const auto &[e, c] = *f.terms().begin();
    if (c != 1) return std::nullopt;
    for (int i = 0; i < f.num_vars(); ++i)
        if (i != var && e[i] != 0) return std::nullopt;
    return e[var] >= 1 ? std::optional<int>(e[var]) : std::nullopt;
}

std::optional<std::pair<Family, FamilyParams>> match_pair(const Poly &g, const Poly &h,
                                                          int u, int v) {
    int m = g.num_vars();
    Poly y = Poly::variable(m, u), z = Poly::variable(m, v);

    if (g == y * y && h == z.pow(4)) return {{Family::I10star, {}}};

    if (g == y * z) {
        // h must be y^a + z^b with a >= b >= 2.
        if (h.terms().size() == 2) {
            std::optional<int> a, b;
            for (const auto &[e, c] : h.terms()) {
                Poly term = Poly::monomial(m, e, c);
                if (auto k = pure_power(term, u)) a = k;
                if (auto k = pure_power(term, v)) b = k;
            }
            if (a && b && *a >= *b && *b >= 2)
                return {{Family::Iab, {*a, *b}}};
        }
        return std::nullopt;
    }

    if (g == y * y + z.pow(3)) {
        if (auto a = pure_power(h, v); a && *a >= 3) return {{Family::I2a1, {*a}}};
        // h == y * z^a
        if (h.terms().size() == 1) {
            const auto &[e, c] = *h.terms().begin();
            Exp expect(m, 0);
            expect[u] = 1;
            bool ok = c == 1 && e[u] == 1;
            for (int i = 0; ok && i < m; ++i)
                if (i != u && i != v && e[i] != 0) ok = false;
            if (ok && e[v] >= 2) return {{Family::I2a4, {e[v]}}};
        }
        return std::nullopt;
    }

    if (h == y * z * z && g.terms().size() == 2) {
        Poly rest = g - y * y;
        if (auto a = pure_power(rest, v); a && *a >= 4)
            return {{Family::Ia5, {*a}}};
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::pair<Family, FamilyParams>> recognize_plane_ideal(const FGIdeal &ideal) {
    if (ideal.num_vars != 2 || ideal.generators.size() != 2) return std::nullopt;
    const Poly &f0 = ideal.generators[0], &f1 = ideal.generators[1];
    for (int swap = 0; swap < 2; ++swap) {
        int u = swap ? 1 : 0, v = swap ? 0 : 1;
        if (auto m = match_pair(f0, f1, u, v)) return m;
        if (auto m = match_pair(f1, f0, u, v)) return m;
    }
    return std::nullopt;
}

SymplecticForm::SymplecticForm(DiffForm f, int half_dim) : form(std::move(f)), n(half_dim) {
    if (form.degree() != 2 || form.num_vars() != 2 * n)
        throw DomainError("symplectic_shape", "need a 2-form on C^{2n}");
    if (form.degree() < form.num_vars() && !exterior_derivative(form).is_zero())
        throw DomainError("symplectic_closed", "symplectic form must be closed");
    int m = 2 * n;
    RatMat mat(m, RatVec(m, Rat(0)));
    for (const auto &[idx, c] : form.components()) {
        Rat c0 = c.constant_term();
        mat[idx[0]][idx[1]] = c0;
        mat[idx[1]][idx[0]] = -c0;
    }
    if (rank(mat, m) != m)
        throw DomainError("symplectic_nondegenerate",
                          "symplectic form is degenerate at 0");
}

DiffForm standard_symplectic(int n) {
    DiffForm w(2 * n, 2);
    for (int i = 0; i < n; ++i)
        w.add_term(Poly::constant(2 * n, 1), {2 * i, 2 * i + 1});
    return w;
}

Reduction reduce_to_submanifold(const DiffForm &omega, const FGIdeal &ideal, int trunc) {
    int m = ideal.num_vars;
    if (omega.num_vars() != m)
        throw DomainError("dimension_match", "form/ideal variable mismatch");

    int k = static_cast<int>(ideal.generators.size());
    // Row-reduce the linear parts, tracking generator combinations.
    RatMat rows;
    for (int i = 0; i < k; ++i) {
        RatVec row = ideal.generators[i].linear_part();
        row.resize(m + k, Rat(0));
        row[m + i] = 1;
        rows.push_back(std::move(row));
    }
    std::vector<int> pivots;
    {
        size_t r = 0;
        for (int c = 0; c < m && r < rows.size(); ++c) {
            size_t sel = r;
            while (sel < rows.size() && rows[sel][c] == 0) ++sel;
            if (sel == rows.size()) continue;
            std::swap(rows[r], rows[sel]);
            Rat inv = Rat(1) / rows[r][c];
            for (auto &x : rows[r]) x *= inv;
            for (size_t i = 0; i < rows.size(); ++i) {
                if (i == r || rows[i][c] == 0) continue;
                Rat fct = rows[i][c];
                for (int j = 0; j < m + k; ++j)
                    if (rows[r][j] != 0) rows[i][j] -= fct * rows[r][j];
            }
            pivots.push_back(c);
            ++r;
        }
    }
    int c = static_cast<int>(pivots.size());

    if (c == 0) {
        FGIdeal same = ideal;
        if (!same.weights) same.detect_weights();
        return Reduction{omega, std::move(same), PolyMap::identity(m), [&] {
                             std::vector<int> all(m);
                             for (int i = 0; i < m; ++i) all[i] = i;
                             return all;
                         }(), 0};
    }

    std::vector<int> free_vars;
    {
        std::vector<bool> dep(m, false);
        for (int p : pivots) dep[p] = true;
        for (int i = 0; i < m; ++i)
            if (!dep[i]) free_vars.push_back(i);
    }
    int r = m - c;

    // Generator combinations with independent linear parts, g_j = x_{pivot_j} + ...
    std::vector<Poly> combos;
    for (int j = 0; j < c; ++j) {
        Poly g(m);
        for (int i = 0; i < k; ++i)
            if (rows[j][m + i] != 0) g = g + ideal.generators[i].scaled(rows[j][m + i]);
        combos.push_back(std::move(g));
    }

    // Solve g_j = 0 as x_dep = g(x_free) by jet iteration.
    std::vector<Poly> dep_series(c, Poly(r));
    auto substitution = [&]() {
        std::vector<Poly> comps(m, Poly(r));
        for (int i = 0; i < r; ++i) comps[free_vars[i]] = Poly::variable(r, i);
        for (int j = 0; j < c; ++j) comps[pivots[j]] = dep_series[j];
        return comps;
    };
    for (int iter = 0; iter <= trunc + 1; ++iter) {
        std::vector<Poly> comps = substitution();
        bool done = true;
        for (int j = 0; j < c; ++j) {
            Poly res = combos[j].compose(comps, trunc);
            if (!res.is_zero()) {
                dep_series[j] = dep_series[j] - res;
                done = false;
            }
        }
        if (done) break;
        if (iter == trunc + 1)
            throw DomainError("graph_solvable",
                              "linear parts not solvable as a graph over the chosen "
                              "coordinate subset");
    }

    PolyMap graph(substitution());
    DiffForm theta = pullback(graph, omega, trunc);
    FGIdeal restricted = restrict_ideal_to_graph(ideal, graph, trunc);
    return Reduction{std::move(theta), std::move(restricted), std::move(graph),
                     std::move(free_vars), c};
}

std::vector<VectorField> derlog(const FGIdeal &ideal, int trunc) {
    int m = ideal.num_vars;
    auto n = nilpotency_order(ideal);
    if (!n)
        throw DomainError("zero_dimensional", "derlog needs a zero-dimensional ideal");
    MonoIndex jets(m, *n);
    MonoIndex coeffs(m, trunc);

    // One unknown per (variable slot, coefficient monomial).
    struct Unknown { int var; Exp mono; };
    std::vector<Unknown> unknowns;
    for (int i = 0; i < m; ++i)
        for (const Exp &e : coeffs.monomials()) unknowns.push_back({i, e});

    int k = static_cast<int>(ideal.generators.size());
    // Span of the ideal's N-jets, for reducing X(f_j) modulo I.
    RowSpan raw(jets.size());
    {
        MonoIndex betas(m, *n);
        for (const Poly &g : ideal.generators)
            for (const Exp &beta : betas.monomials()) {
                Poly prod = (g * Poly::monomial(m, beta, 1)).truncate(*n);
                if (!prod.is_zero()) raw.insert(jets.to_vec(prod));
            }
    }
    RatMat cons(k * jets.size(), RatVec(unknowns.size(), Rat(0)));
    for (size_t u = 0; u < unknowns.size(); ++u) {
        Poly h = Poly::monomial(m, unknowns[u].mono, 1);
        for (int j = 0; j < k; ++j) {
            Poly img = (h * ideal.generators[j].derivative(unknowns[u].var)).truncate(*n);
            RatVec res = raw.residual(jets.to_vec(img));
            for (int t = 0; t < jets.size(); ++t)
                if (res[t] != 0) cons[j * jets.size() + t][u] = res[t];
        }
    }

    RatMat basis = nullspace(std::move(cons), static_cast<int>(unknowns.size()));
    std::vector<VectorField> fields;
    for (const RatVec &v : basis) {
        std::vector<Poly> comps(m, Poly(m));
        for (size_t u = 0; u < unknowns.size(); ++u)
            if (v[u] != 0)
                comps[unknowns[u].var] =
                    comps[unknowns[u].var] + Poly::monomial(m, unknowns[u].mono, v[u]);
        fields.emplace_back(std::move(comps));
    }
    return fields;
}

int symplectic_multiplicity(const AlgRestriction &ar) {
    const RestrictionSpace &S = *ar.space;
    const FGIdeal &ideal = S.ideal();
    if (!ideal.weights)
        throw DomainError("quasi_homogeneous",
                          "symplectic multiplicity needs a quasi-homogeneous ideal");
    DiffForm rep = S.representative(ar.coords);
    std::vector<VectorField> fields = derlog(ideal, S.trunc() + 1);
    RowSpan tangent(S.dimension());
    for (const VectorField &X : fields)
        tangent.insert(S.reduce_vec(lie_derivative(X, rep)));
    return S.dimension() - tangent.rank();
}

std::optional<int> index_of_isotropy(const AlgRestriction &ar) {
    if (ar.is_zero()) return std::nullopt;  // infinity: the zero form represents it
    const RestrictionSpace &S = *ar.space;
    int m = S.ideal().num_vars;
    int T = S.trunc();
    const FormIndex &index = S.form_index();
    FormIndex next(m, std::min(S.degree() + 1, m), T);

    DiffForm rep = S.representative(ar.coords);
    RatVec rep_vec = index.to_vec(rep);
    RatVec rep_d = next.to_vec(exterior_derivative(rep).truncate_coeff(T));

    const std::vector<DiffForm> &a0 = S.a0_basis();
    int u = static_cast<int>(a0.size());
    std::vector<RatVec> a0_vecs, a0_d;
    for (const DiffForm &f : a0) {
        a0_vecs.push_back(index.to_vec(f));
        a0_d.push_back(next.to_vec(exterior_derivative(f).truncate_coeff(T)));
    }

    auto feasible = [&](int vanish_order) {
        RatMat rows;
        RatVec rhs;
        for (int t = 0; t < index.size(); ++t) {
            if (exp_total_degree(index.entries()[t].second) >= vanish_order) continue;
            RatVec row(u, Rat(0));
            for (int i = 0; i < u; ++i) row[i] = a0_vecs[i][t];
            rows.push_back(std::move(row));
            rhs.push_back(-rep_vec[t]);
        }
        for (int s = 0; s < next.size(); ++s) {
            RatVec row(u, Rat(0));
            bool any = false;
            for (int i = 0; i < u; ++i) {
                row[i] = a0_d[i][s];
                if (row[i] != 0) any = true;
            }
            if (!any && rep_d[s] == 0) continue;
            rows.push_back(std::move(row));
            rhs.push_back(-rep_d[s]);
        }
        return solve(rows, rhs, u);
    };

    int best = 0;
    for (int kk = 1; kk <= T; ++kk) {
        if (!feasible(kk)) break;
        best = kk;
        if (kk == T)
            throw DomainError("index_of_isotropy",
                              "nonzero restriction with representative in m^T");
    }
    return best;
}

bool realizable(const AlgRestriction &ar, int n) {
    const RestrictionSpace &S = *ar.space;
    int r = S.ideal().num_vars;
    DiffForm rep = S.representative(ar.coords);
    RatMat mat(r, RatVec(r, Rat(0)));
    for (const auto &[idx, c] : rep.components()) {
        Rat c0 = c.constant_term();
        mat[idx[0]][idx[1]] = c0;
        mat[idx[1]][idx[0]] = -c0;
    }
    return rank(mat, r) >= 2 * r - 2 * n;
}

std::vector<Poly> normal_form_generators(Family f, const FamilyParams &p, int n,
                                         int class_index) {
    check_family_params(f, p);
    int m = 2 * n;
    auto pvar = [&](int i) { return 2 * (i - 1); };      // p_i, 1-based
    auto qvar = [&](int i) { return 2 * (i - 1) + 1; };  // q_i

    std::vector<Poly> gens;
    if (class_index == 0) {
        auto [g1, g2] = family_templates(f, p, m, pvar(1), qvar(1));
        gens = {g1, g2};
    } else {
        if (n < 2)
            throw DomainError("family_params", "classes beyond 0 need n >= 2");
        auto [g1, g2] = family_templates(f, p, m, pvar(1), pvar(2));
        gens = {g1, g2};
        Poly q1 = Poly::variable(m, qvar(1)), q2 = Poly::variable(m, qvar(2));
        Poly p1 = Poly::variable(m, pvar(1)), p2 = Poly::variable(m, pvar(2));
        int last = family_class_count(f) - 1;
        if (class_index == last) {
            gens.push_back(q1);
            gens.push_back(q2);
        } else if (f == Family::I10star && class_index == 2) {
            gens.push_back(q1);
            gens.push_back(q2 + p1 * p2 * p2);
        } else if (class_index == 1) {
            gens.push_back(q1);
            gens.push_back(q2 + p1 * p2);
        } else {
            throw DomainError("class_index", "class index out of range");
        }
    }
    for (int i = class_index == 0 ? 2 : 3; i <= n; ++i) {
        gens.push_back(Poly::variable(m, pvar(i)));
        gens.push_back(Poly::variable(m, qvar(i)));
    }
    return gens;
}

ClassRecord classify(const SymplecticForm &omega, const FGIdeal &ideal, int trunc_cap) {
    if (ideal.num_vars != 2 * omega.n)
        throw DomainError("dimension_match", "ideal must live on C^{2n}");

    Reduction red = reduce_to_submanifold(omega.form, ideal, trunc_cap);
    if (red.ideal.num_vars != 2)
        throw DomainError("catalog_member",
                          "reduction did not land on a 2-variable catalog ideal");
    auto match = recognize_plane_ideal(red.ideal);
    if (!match)
        throw DomainError("catalog_member",
                          "reduced ideal is not a catalog normal form");
    auto [family, params] = *match;

    BuildOptions opts;
    opts.nilpotency_cap = trunc_cap;
    RestrictionSpace S = RestrictionSpace::build(red.ideal, 2, opts);
    AlgRestriction ar = S.reduce(red.theta);

    int class_index = S.dimension();
    for (int i = 0; i < S.dimension(); ++i)
        if (ar.coords[i] != 0) { class_index = i; break; }

    if (!realizable(ar, omega.n))
        throw DomainError("realizable", "not realizable by a symplectic form");

    ClassRecord rec;
    rec.family = family;
    rec.params = params;
    rec.n = omega.n;
    rec.class_index = class_index;
    rec.normal_form = normal_form_generators(family, params, omega.n, class_index);
    rec.mu = symplectic_multiplicity(ar);
    rec.cod = rec.mu;
    rec.iota = index_of_isotropy(ar);
    rec.coords = ar.coords;
    return rec;
}

std::vector<ClassRecord> table_rows(Family f, const FamilyParams &p, int n, int trunc_cap) {
    check_family_params(f, p);
    if (n < 1) throw DomainError("family_params", "n must be >= 1");
    std::vector<ClassRecord> records;
    SymplecticForm omega(standard_symplectic(n), n);
    int count = family_class_count(f);
    for (int k = 0; k < count; ++k) {
        if (k > 0 && n < 2) continue;
        FGIdeal ideal(normal_form_generators(f, p, n, k));
        ClassRecord rec = classify(omega, ideal, trunc_cap);
        if (rec.class_index != k || rec.family != f)
            throw DomainError("table_consistency",
                              "normal form did not classify into its own class");
        records.push_back(std::move(rec));
    }
    return records;
}

bool contains_lagrangian_plane(const FGIdeal &ideal, int n, int trunc_cap) {
    if (ideal.num_vars != 2 * n)
        throw DomainError("dimension_match", "ideal must live on C^{2n}");
    DiffForm dummy(2 * n, 2);
    Reduction red = reduce_to_submanifold(dummy, ideal, trunc_cap);
    auto N = nilpotency_order(red.ideal, trunc_cap);
    if (!N)
        throw DomainError("zero_dimensional", "no nilpotency order below the cap");
    JetSpan span(ideal, *N);
    for (int i = 1; i <= n; ++i) {
        Poly qi = Poly::variable(2 * n, 2 * (i - 1) + 1);
        if (!span.contains(qi)) return false;
    }
    return true;
}

}  // namespace algrest

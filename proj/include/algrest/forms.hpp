#pragma once

#include "algrest/poly.hpp"

#include <map>
#include <optional>
#include <vector>

namespace algrest {

// Strictly increasing 0-based variable indices; empty for 0-forms.
using IdxTuple = std::vector<int>;

// Polynomial-coefficient differential p-form germ. Components are stored
// sparsely over ordered index tuples; sign bookkeeping is normalized at
// insertion time.
class DiffForm {
public:
    DiffForm(int num_vars, int degree);

    static DiffForm zero(int num_vars, int degree) { return DiffForm(num_vars, degree); }
    static DiffForm from_poly(const Poly &f);  // 0-form
    // c * dx_{J}, indices need not be sorted; an odd sort permutation flips
    // the sign, a repeated index gives zero.
    static DiffForm monomial_form(const Poly &coeff, const IdxTuple &indices);

    int num_vars() const { return num_vars_; }
    int degree() const { return degree_; }
    bool is_zero() const { return comps_.empty(); }
    const std::map<IdxTuple, Poly> &components() const { return comps_; }
    Poly component(const IdxTuple &sorted_indices) const;
    // The Poly identified with a 0-form.
    Poly as_poly() const;

    DiffForm operator-() const;
    DiffForm operator+(const DiffForm &o) const;
    DiffForm operator-(const DiffForm &o) const;
    DiffForm scaled(const Rat &c) const;
    DiffForm scaled(const Poly &f) const;
    bool operator==(const DiffForm &o) const;
    bool operator!=(const DiffForm &o) const { return !(*this == o); }

    // Drops coefficient monomials of total degree > d.
    DiffForm truncate_coeff(int d) const;

    long long max_coeff_degree() const;

    void add_term(const Poly &coeff, const IdxTuple &indices);

private:
    int num_vars_, degree_;
    std::map<IdxTuple, Poly> comps_;
};

// Polynomial-coefficient derivation sum_i comps[i] d/dx_i.
struct VectorField {
    std::vector<Poly> components;

    explicit VectorField(std::vector<Poly> comps);
    int num_vars() const { return static_cast<int>(components.size()); }
    Poly apply(const Poly &f) const;  // directional derivative
};

// Map-germ (C^s,0) -> (C^m,0): m component polynomials in s source
// variables, all vanishing at the origin.
struct PolyMap {
    std::vector<Poly> components;

    explicit PolyMap(std::vector<Poly> comps);
    int source_vars() const { return components.empty() ? 0 : components[0].num_vars(); }
    int target_vars() const { return static_cast<int>(components.size()); }

    static PolyMap identity(int num_vars);
    // F_t at a fixed rational t for given weights: x_i -> t^{lambda_i} x_i.
    static PolyMap scaling(const Weights &w, const Rat &t);
};

DiffForm exterior_derivative(const DiffForm &omega);
DiffForm wedge(const DiffForm &alpha, const DiffForm &beta);
DiffForm interior_product(const VectorField &X, const DiffForm &omega);
// Cartan's formula d(i_X w) + i_X(dw); on 0-forms this is X(f).
DiffForm lie_derivative(const VectorField &X, const DiffForm &omega);
// Pullback along phi, coefficients truncated at total degree trunc.
DiffForm pullback(const PolyMap &phi, const DiffForm &omega, int trunc);

// Euler field sum_i lambda_i x_i d/dx_i.
VectorField euler_field(const Weights &w);

// Quasi-degree of a form: coefficient quasi-degree plus the weights of the
// wedged variables. Same contract as the Poly version.
QuasiDegree form_quasi_degree(const DiffForm &omega, const Weights &w);

// Splits omega into its quasi-degree-homogeneous pieces (degree -> piece).
std::map<long long, DiffForm> graded_pieces(const DiffForm &omega, const Weights &w);

}  // namespace algrest

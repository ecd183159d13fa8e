#pragma once

#include "algrest/error.hpp"
#include "algrest/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace algrest {

// Exponent vector of a monomial; one entry per variable.
using Exp = std::vector<int>;

inline long long exp_total_degree(const Exp &e) {
    long long d = 0;
    for (int x : e) d += x;
    return d;
}

// Graded lexicographic order, lowest degree first; within a degree the
// monomial with the larger power of an earlier variable comes first.
struct MonoLess {
    bool operator()(const Exp &a, const Exp &b) const {
        long long da = exp_total_degree(a), db = exp_total_degree(b);
        if (da != db) return da < db;
        return a > b;
    }
};

// Positive integer weights, one per variable, with gcd 1.
struct Weights {
    std::vector<long long> lambda;

    explicit Weights(std::vector<long long> l);
    int size() const { return static_cast<int>(lambda.size()); }
    bool operator==(const Weights &o) const { return lambda == o.lambda; }
};

long long weighted_degree(const Exp &e, const Weights &w);

// Sparse multivariate polynomial over exact rationals. Immutable in spirit:
// every operation returns a fresh value, no stored coefficient is zero.
class Poly {
public:
    explicit Poly(int num_vars);

    static Poly constant(int num_vars, const Rat &c);
    static Poly variable(int num_vars, int i);
    static Poly monomial(int num_vars, const Exp &e, const Rat &c);

    int num_vars() const { return num_vars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exp, Rat, MonoLess> &terms() const { return terms_; }

    Rat coeff(const Exp &e) const;
    Rat constant_term() const;
    // Coefficients of the degree-1 part, one per variable.
    std::vector<Rat> linear_part() const;
    bool vanishes_at_origin() const { return constant_term() == 0; }
    long long total_degree() const;  // 0 for the zero polynomial

    Poly operator-() const;
    Poly operator+(const Poly &o) const;
    Poly operator-(const Poly &o) const;
    Poly operator*(const Poly &o) const;
    Poly scaled(const Rat &c) const;
    Poly pow(int k) const;
    bool operator==(const Poly &o) const;
    bool operator!=(const Poly &o) const { return !(*this == o); }

    Poly derivative(int i) const;

    // Drops monomials of total degree > d.
    Poly truncate(int d) const;
    // Drops monomials of weighted degree > d.
    Poly truncate(int d, const Weights &w) const;

    // Substitutes comps[i] for variable i; the result lives in the variable
    // space of the comps. trunc >= 0 truncates every intermediate product at
    // that total degree, trunc < 0 keeps the substitution exact.
    Poly compose(const std::vector<Poly> &comps, int trunc) const;

    // Keeps only monomials of weighted degree exactly d.
    Poly weighted_part(long long d, const Weights &w) const;

private:
    void add_term(const Exp &e, const Rat &c);
    void check_vars(const Poly &o) const;

    int num_vars_;
    std::map<Exp, Rat, MonoLess> terms_;
};

struct QuasiDegree {
    bool is_zero = false;                // f = 0: quasi-homogeneous of every degree
    std::optional<long long> degree;     // absent when monomials disagree
};

QuasiDegree quasi_degree(const Poly &f, const Weights &w);

}  // namespace algrest

#pragma once

#include "algrest/forms.hpp"
#include "algrest/linalg.hpp"
#include "algrest/poly.hpp"

#include <optional>
#include <vector>

namespace algrest {

// Monomial indexing for the space of polynomials of total degree <= d in
// num_vars variables, in graded-lex order. Shared by every jet computation.
class MonoIndex {
public:
    MonoIndex(int num_vars, int max_degree);

    int size() const { return static_cast<int>(monos_.size()); }
    const std::vector<Exp> &monomials() const { return monos_; }
    int index_of(const Exp &e) const;  // -1 if above the degree bound

    // Dense coefficient vector of the d-jet of f (higher terms dropped).
    RatVec to_vec(const Poly &f) const;
    Poly from_vec(const RatVec &v) const;

private:
    int num_vars_, max_degree_;
    std::vector<Exp> monos_;
    std::map<Exp, int, MonoLess> index_;
};

// Finitely generated ideal of function-germs, optionally with
// quasi-homogeneous weight data.
struct FGIdeal {
    std::vector<Poly> generators;
    int num_vars;
    std::optional<Weights> weights;
    std::vector<long long> quasi_degrees;  // per generator, when weights set

    FGIdeal(std::vector<Poly> gens, std::optional<Weights> w = std::nullopt);

    long long max_generator_degree() const;
    // Attaches weights found by find_weights, when they exist.
    void detect_weights();
};

// Span of the d-jets of {x^beta * f_i : |beta| <= d}, i.e. the image of the
// ideal in O/m^{d+1}, by exact rational row reduction.
class JetSpan {
public:
    JetSpan(const FGIdeal &ideal, int d);

    int degree() const { return d_; }
    const MonoIndex &index() const { return index_; }
    bool contains(const Poly &f) const;

private:
    int d_;
    MonoIndex index_;
    RowSpan span_;
};

struct WeightSolution {
    Weights weights;
    std::vector<long long> quasi_degrees;
};

// The lexicographically smallest primitive positive integer weight vector
// making every generator quasi-homogeneous in the given coordinates, if one
// exists with entries <= 64.
std::optional<WeightSolution> find_weights(const std::vector<Poly> &gens);

// True iff the d-jet of f lies in the ideal's jet span. Faithful membership
// in the germ ideal when d >= nilpotency_order(I).
bool jet_membership(const Poly &f, const FGIdeal &ideal, int d);

// Smallest N <= cap with every degree-N monomial in the ideal; absent if no
// such N is found below the cap.
std::optional<int> nilpotency_order(const FGIdeal &ideal, int cap = 24);

struct EmbeddingCodim {
    int codim;       // rank of the generators' linear parts
    RatMat kernel;   // basis of T_0 M for a minimal nonsingular M
};

EmbeddingCodim embedding_codim(const FGIdeal &ideal);

// Appends extra new coordinates as generators, extending weights by 1.
FGIdeal suspend(const FGIdeal &ideal, int extra_vars);

// Substitutes a graph parametrization into all generators, truncates at
// trunc, drops zero generators.
FGIdeal restrict_ideal_to_graph(const FGIdeal &ideal, const PolyMap &graph, int trunc);

}  // namespace algrest

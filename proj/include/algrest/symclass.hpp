#pragma once

#include "algrest/forms.hpp"
#include "algrest/ideal.hpp"
#include "algrest/restriction.hpp"

#include <optional>
#include <string>
#include <vector>

namespace algrest {

// The five families of V-simple plane map-germs.
enum class Family { Iab, I2a1, I2a4, Ia5, I10star };

std::optional<Family> family_from_string(const std::string &name);
std::string family_to_string(Family f);

struct FamilyParams {
    long long a = 0;
    long long b = 0;
};

// Validates the parameter constraints of the family; throws DomainError.
void check_family_params(Family f, const FamilyParams &p);
bool family_uses_a(Family f);
bool family_uses_b(Family f);
// Number of symplectic classes for n >= 2.
int family_class_count(Family f);

// The plane (2-variable) normal-form ideal of the family, weights attached.
FGIdeal plane_ideal(Family f, const FamilyParams &p);

// Syntactic recognition of a 2-variable ideal as a catalog normal form, up
// to generator order and swapping the two variables.
std::optional<std::pair<Family, FamilyParams>> recognize_plane_ideal(const FGIdeal &ideal);

// Closed nondegenerate 2-form on C^{2n}; throws when either fails.
struct SymplecticForm {
    DiffForm form;
    int n;

    SymplecticForm(DiffForm f, int half_dim);
};

// Standard form sum dp_i ^ dq_i with variables ordered p1,q1,...,pn,qn.
DiffForm standard_symplectic(int n);

struct Reduction {
    DiffForm theta;       // omega pulled back to the graph parametrization
    FGIdeal ideal;        // I restricted to the submanifold
    PolyMap graph;        // parametrization C^r -> C^m
    std::vector<int> free_vars;
    int codim = 0;
};

// Solves generator combinations with independent linear parts as a graph
// over the remaining coordinates and restricts both the form and the ideal.
Reduction reduce_to_submanifold(const DiffForm &omega, const FGIdeal &ideal, int trunc);

// Vector fields X with coefficient jets of degree <= trunc and X(f_i) in I
// for every generator; always contains the Euler field when weights exist.
std::vector<VectorField> derlog(const FGIdeal &ideal, int trunc);

// Codimension of the infinitesimal orbit of `ar` under Derlog inside the
// quotient of algebraic restrictions.
int symplectic_multiplicity(const AlgRestriction &ar);

// Maximal vanishing order of closed representatives; nullopt encodes
// infinity (the zero restriction).
std::optional<int> index_of_isotropy(const AlgRestriction &ar);

// Rank condition rank(theta|_{T_0 M}) >= 2r - 2n for a representative of ar
// living on the reduced r-variable space.
bool realizable(const AlgRestriction &ar, int n);

struct ClassRecord {
    Family family;
    FamilyParams params;
    int n = 1;
    int class_index = 0;
    std::vector<Poly> normal_form;   // in 2n variables p1,q1,...,pn,qn
    int cod = 0;
    int mu = 0;
    std::optional<int> iota;  // nullopt = infinity
    bool is_realizable = true;
    RatVec coords;            // restriction coordinates of the input form
};

// Full pipeline for a symplectic form and a catalog ideal (up to
// suspension, in the given coordinates).
ClassRecord classify(const SymplecticForm &omega, const FGIdeal &ideal, int trunc_cap = 24);

// All classes of a family block at the given parameters and half-dimension;
// each normal form is classified and must land in its own class.
std::vector<ClassRecord> table_rows(Family f, const FamilyParams &p, int n,
                                    int trunc_cap = 24);

// The catalog normal-form generators of a class, in 2n variables.
std::vector<Poly> normal_form_generators(Family f, const FamilyParams &p, int n,
                                         int class_index);

// Whether the ideal (on C^{2n}) contains the ideal of the Lagrangian plane
// {q_1 = ... = q_n = 0}, by jet membership of each q_i.
bool contains_lagrangian_plane(const FGIdeal &ideal, int n, int trunc_cap = 24);

}  // namespace algrest

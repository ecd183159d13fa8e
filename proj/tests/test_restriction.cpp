#include "doctest.h"

#include "algrest/restriction.hpp"
#include "oracle.hpp"

using namespace algrest;

namespace {

Poly Y() { return Poly::variable(2, 0); }
Poly Z() { return Poly::variable(2, 1); }

DiffForm dydz(const Poly &coeff) { return DiffForm::monomial_form(coeff, {0, 1}); }

// Oracle: the quotient dimension p-forms / A^p_0 on jets, assembled from
// scratch with the textbook elimination.
int quotient_dim_oracle(const FGIdeal &I, int p, int T) {
    FormIndex idx(I.num_vars, p, T);
    oracle::Mat a0;
    MonoIndex betas(I.num_vars, T + 1);
    std::vector<std::vector<int>> tuples;
    if (p == 2) tuples = {{0, 1}};
    // components of I.Lambda^p
    for (const Poly &g : I.generators)
        for (const Exp &beta : betas.monomials()) {
            Poly c = g * Poly::monomial(I.num_vars, beta, 1);
            for (const auto &t : tuples)
                a0.push_back(idx.to_vec(DiffForm::monomial_form(c, t).truncate_coeff(T)));
            // d of I.Lambda^{p-1}
            for (int v = 0; v < I.num_vars; ++v)
                a0.push_back(idx.to_vec(
                    exterior_derivative(DiffForm::monomial_form(c, {v})).truncate_coeff(T)));
        }
    int a0_rank = oracle::rank(a0);
    oracle::Mat all = a0;
    for (const auto &[t, e] : idx.entries()) {
        RatVec v(idx.size(), Rat(0));
        v[idx.index_of(t, e)] = 1;
        all.push_back(v);
    }
    return oracle::rank(all) - a0_rank;
}

}  // namespace

TEST_CASE("basis for the fat point of I10star type") {
    FGIdeal I({Y() * Y(), Z().pow(4)});
    RestrictionSpace S = RestrictionSpace::build(I, 2);
    REQUIRE(S.dimension() == 3);
    CHECK(S.quotient_basis()[0] == dydz(Poly::constant(2, 1)));
    CHECK(S.quotient_basis()[1] == dydz(Z()));
    CHECK(S.quotient_basis()[2] == dydz(Z() * Z()));
    CHECK(S.dimension() == quotient_dim_oracle(I, 2, S.trunc()));
}

TEST_CASE("basis for y^2+z^a, yz^2") {
    for (int a : {4, 5, 6}) {
        FGIdeal I({Y() * Y() + Z().pow(a), Y() * Z() * Z()});
        RestrictionSpace S = RestrictionSpace::build(I, 2);
        REQUIRE(S.dimension() == 2);
        CHECK(S.quotient_basis()[0] == dydz(Poly::constant(2, 1)));
        CHECK(S.quotient_basis()[1] == dydz(Z()));
        CHECK(S.dimension() == quotient_dim_oracle(I, 2, S.trunc()));
    }
}

TEST_CASE("reduce picks out coordinates and kills A^2_0") {
    FGIdeal I({Y() * Y(), Z().pow(4)});
    RestrictionSpace S = RestrictionSpace::build(I, 2);
    SUBCASE("basis forms have unit coordinates") {
        RatVec c0 = S.reduce_vec(dydz(Poly::constant(2, 1)));
        CHECK(c0 == RatVec{Rat(1), Rat(0), Rat(0)});
        RatVec c2 = S.reduce_vec(dydz(Z() * Z()));
        CHECK(c2 == RatVec{Rat(0), Rat(0), Rat(1)});
    }
    SUBCASE("z^3 dy^dz is exact modulo the ideal") {
        CHECK(S.is_zero_restriction(dydz(Z().pow(3))));
    }
    SUBCASE("ideal-coefficient forms restrict to zero") {
        CHECK(S.is_zero_restriction(dydz(Y() * Y())));
        CHECK(S.is_zero_restriction(dydz(Z().pow(4).scaled(Rat(2, 3)))));
    }
    SUBCASE("mixed form") {
        DiffForm w = dydz(Poly::constant(2, 1) + Z() + Z().pow(3) + Y() * Y() * Z());
        RatVec c = S.reduce_vec(w);
        CHECK(c == RatVec{Rat(1), Rat(1), Rat(0)});
    }
    SUBCASE("representative maps back to the same coordinates") {
        RatVec coords{Rat(2), Rat(0), Rat(-1)};
        CHECK(S.reduce_vec(S.representative(coords)) == coords);
    }
}

TEST_CASE("a 1-form with nonzero d-restriction is rejected in closed mode") {
    FGIdeal I({Y() * Y(), Z().pow(4)});
    RestrictionSpace S = RestrictionSpace::build(I, 1);
    // d(z dy) = dz^dy = -dy^dz has nonzero restriction
    DiffForm zdy = DiffForm::monomial_form(Z(), {0});
    CHECK_THROWS_AS(S.reduce(zdy), DomainError);
}

TEST_CASE("homotopy primitive") {
    FGIdeal I({Y() * Y(), Z().pow(4)});
    I.detect_weights();
    SUBCASE("explicit value") {
        DiffForm omega = dydz(Y() * Y() * Z());
        DiffForm alpha = homotopy_primitive(omega, I);
        CHECK(exterior_derivative(alpha) == omega);
        // alpha has coefficients in I.Lambda^1
        for (const auto &[idx, c] : alpha.components())
            CHECK(jet_membership(c, I, 8));
    }
    SUBCASE("exact input") {
        // d(y^2 z dy) = -y^2 dy^dz stays inside I.Lambda^2
        DiffForm omega = exterior_derivative(DiffForm::monomial_form(Y() * Y() * Z(), {0}));
        DiffForm alpha = homotopy_primitive(omega, I);
        CHECK(exterior_derivative(alpha) == omega);
        for (const auto &[idx, c] : alpha.components())
            CHECK(jet_membership(c, I, 8));
    }
    SUBCASE("membership is required") {
        CHECK_THROWS_AS(homotopy_primitive(dydz(Y() * Z()), I), DomainError);
    }
    SUBCASE("closedness is required") {
        FGIdeal J({Y() * Y() + Z().pow(4), Y() * Z() * Z()});
        J.detect_weights();
        DiffForm open_form = DiffForm::monomial_form(Y() * Y() + Z().pow(4), {0});
        CHECK_THROWS_AS(homotopy_primitive(open_form, J), DomainError);
    }
}

TEST_CASE("truncation stability across the catalog plane ideals") {
    std::vector<FGIdeal> ideals;
    ideals.emplace_back(std::vector<Poly>{Y() * Y(), Z().pow(4)});
    ideals.emplace_back(std::vector<Poly>{Y() * Z(), Y() * Y() + Z() * Z()});
    ideals.emplace_back(std::vector<Poly>{Y() * Y() + Z().pow(3), Z().pow(3)});
    ideals.emplace_back(std::vector<Poly>{Y() * Y() + Z().pow(4), Y() * Z() * Z()});
    for (const FGIdeal &I : ideals) {
        RestrictionSpace S = RestrictionSpace::build(I, 2);
        BuildOptions above;
        above.trunc_override = S.trunc() + 1;
        RestrictionSpace S1 = RestrictionSpace::build(I, 2, above);
        CHECK(S.dimension() == S1.dimension());
    }
}

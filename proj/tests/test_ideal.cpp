#include "doctest.h"

#include "algrest/ideal.hpp"
#include "oracle.hpp"

using namespace algrest;

namespace {

Poly Y(int m = 2) { return Poly::variable(m, 0); }
Poly Z(int m = 2) { return Poly::variable(m, 1); }

// Oracle: d-jet membership by assembling the multiple matrix from scratch.
bool member_oracle(const Poly &f, const std::vector<Poly> &gens, int d) {
    int m = f.num_vars();
    MonoIndex idx(m, d);
    oracle::Mat rows;
    MonoIndex betas(m, d);
    for (const Poly &g : gens)
        for (const Exp &beta : betas.monomials())
            rows.push_back(idx.to_vec(g * Poly::monomial(m, beta, 1)));
    return oracle::in_span(rows, idx.to_vec(f));
}

}  // namespace

TEST_CASE("MonoIndex round trip") {
    MonoIndex idx(2, 3);
    CHECK(idx.size() == 10);
    Poly f = Y() + Z().pow(3).scaled(Rat(1, 2));
    CHECK(idx.from_vec(idx.to_vec(f)) == f);
    CHECK(idx.index_of({0, 0}) == 0);
    CHECK(idx.index_of({0, 4}) == -1);
}

TEST_CASE("find_weights on catalog shapes") {
    SUBCASE("constraint forced by a binomial generator") {
        auto sol = find_weights({Y() * Y() + Z().pow(4), Y() * Z() * Z()});
        REQUIRE(sol.has_value());
        CHECK(sol->weights.lambda == std::vector<long long>{2, 1});
        CHECK(sol->quasi_degrees == std::vector<long long>{4, 4});
    }
    SUBCASE("no constraints: lexicographically smallest positive vector") {
        auto sol = find_weights({Y() * Y(), Z().pow(4)});
        REQUIRE(sol.has_value());
        CHECK(sol->weights.lambda == std::vector<long long>{1, 1});
    }
    SUBCASE("odd weights") {
        auto sol = find_weights({Y() * Z(), Y().pow(3) + Z().pow(2)});
        REQUIRE(sol.has_value());
        CHECK(sol->weights.lambda == std::vector<long long>{2, 3});
        CHECK(sol->quasi_degrees == std::vector<long long>{5, 6});
    }
    SUBCASE("not quasi-homogeneous in the given coordinates") {
        CHECK_FALSE(find_weights({Y() + Y() * Y()}).has_value());
    }
    SUBCASE("returned weights make every generator quasi-homogeneous") {
        std::vector<Poly> gens = {Y() * Y() + Z().pow(3), Y() * Z().pow(4)};
        auto sol = find_weights(gens);
        REQUIRE(sol.has_value());
        for (size_t i = 0; i < gens.size(); ++i) {
            auto qd = quasi_degree(gens[i], sol->weights);
            REQUIRE(qd.degree.has_value());
            CHECK(*qd.degree == sol->quasi_degrees[i]);
        }
    }
}

TEST_CASE("nilpotency order") {
    FGIdeal I({Y() * Y(), Z().pow(4)});
    auto n = nilpotency_order(I);
    REQUIRE(n.has_value());
    CHECK(*n == 5);  // y*z^3 is not in the ideal, every degree-5 monomial is
    FGIdeal J({Y() * Z(), Y() * Y() + Z() * Z()});
    auto nj = nilpotency_order(J);
    REQUIRE(nj.has_value());
    CHECK(*nj == 3);
    // Not zero-dimensional: <y^2> misses every power of z.
    FGIdeal K({Y() * Y()});
    CHECK_FALSE(nilpotency_order(K, 10).has_value());
}

TEST_CASE("jet membership matches the oracle") {
    FGIdeal I({Y() * Y(), Z().pow(4)});
    std::vector<Poly> probes = {
        Y() * Y() * Z(),
        Y() * Z().pow(3),
        Z().pow(4) + Y().pow(3),
        Y() + Z(),
        Y().pow(2).scaled(Rat(1, 3)) - Z().pow(5),
    };
    for (const Poly &f : probes)
        CHECK(jet_membership(f, I, 6) == member_oracle(f, I.generators, 6));
    CHECK(jet_membership(Y() * Y() * Z(), I, 6));
    CHECK_FALSE(jet_membership(Y() * Z().pow(3), I, 6));
}

TEST_CASE("embedding codimension") {
    int m = 4;
    Poly p1 = Poly::variable(m, 0), q1 = Poly::variable(m, 1);
    Poly p2 = Poly::variable(m, 2), q2 = Poly::variable(m, 3);
    FGIdeal I({p1 * p1, p2.pow(4), q1, q2 + p1 * p2});
    EmbeddingCodim ec = embedding_codim(I);
    CHECK(ec.codim == 2);
    REQUIRE(ec.kernel.size() == 2);
    // T_0 M is the p-plane: q-entries of every kernel vector vanish.
    for (const RatVec &v : ec.kernel) {
        CHECK(v[1] == 0);
        CHECK(v[3] == 0);
    }
}

TEST_CASE("suspension") {
    FGIdeal I({Y() * Y(), Z().pow(4)}, Weights({2, 1}));
    FGIdeal S = suspend(I, 2);
    CHECK(S.num_vars == 4);
    REQUIRE(S.generators.size() == 4);
    CHECK(S.generators[2] == Poly::variable(4, 2));
    CHECK(S.generators[3] == Poly::variable(4, 3));
    REQUIRE(S.weights.has_value());
    CHECK(S.weights->lambda == std::vector<long long>{2, 1, 1, 1});
}

TEST_CASE("restricting an ideal to a graph") {
    int m = 4;
    Poly p1 = Poly::variable(m, 0), q1 = Poly::variable(m, 1);
    Poly p2 = Poly::variable(m, 2), q2 = Poly::variable(m, 3);
    FGIdeal I({p1 * p1, p2.pow(4), q1, q2 + p1 * p2});
    // graph over (p1, p2): q1 = 0, q2 = -p1 p2
    Poly u = Poly::variable(2, 0), v = Poly::variable(2, 1);
    PolyMap graph({u, Poly(2), v, -(u * v)});
    FGIdeal R = restrict_ideal_to_graph(I, graph, 12);
    REQUIRE(R.generators.size() == 2);
    CHECK(R.generators[0] == u * u);
    CHECK(R.generators[1] == v.pow(4));
}

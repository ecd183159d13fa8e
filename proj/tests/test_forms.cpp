#include "doctest.h"

#include "algrest/forms.hpp"

using namespace algrest;

namespace {

Poly Y(int m = 2) { return Poly::variable(m, 0); }
Poly Z(int m = 2) { return Poly::variable(m, 1); }

}  // namespace

TEST_CASE("index tuple normalization") {
    Poly one = Poly::constant(2, 1);
    DiffForm a = DiffForm::monomial_form(one, {1, 0});
    DiffForm b = DiffForm::monomial_form(one, {0, 1});
    CHECK(a == -b);
    CHECK(DiffForm::monomial_form(one, {0, 0}).is_zero());
}

TEST_CASE("d of a 0-form and d of d") {
    Poly f = Y() * Y() * Z() + Z().pow(3);
    DiffForm df = exterior_derivative(DiffForm::from_poly(f));
    CHECK(df.component({0}) == Y().scaled(2) * Z());
    CHECK(df.component({1}) == Y() * Y() + Z().pow(2).scaled(3));
    CHECK(exterior_derivative(df).is_zero());
}

TEST_CASE("wedge is graded-anticommutative") {
    DiffForm a = DiffForm::monomial_form(Y(), {0});
    DiffForm b = DiffForm::monomial_form(Z().pow(2), {1});
    CHECK(wedge(a, b) == -wedge(b, a));
    DiffForm f = DiffForm::from_poly(Y() + Z());
    CHECK(wedge(f, a) == wedge(a, f));
    CHECK(wedge(a, a).is_zero());
}

TEST_CASE("interior product and Cartan formula") {
    Weights w({2, 1});
    VectorField E = euler_field(w);
    DiffForm dydz = DiffForm::monomial_form(Poly::constant(2, 1), {0, 1});
    DiffForm iE = interior_product(E, dydz);
    // i_E(dy^dz) = 2y dz - z dy
    CHECK(iE.component({1}) == Y().scaled(2));
    CHECK(iE.component({0}) == -Z());
    // L_E omega = delta * omega on quasi-homogeneous omega
    DiffForm omega = dydz.scaled(Y() * Y() * Z());  // quasi-degree 5 + 3
    CHECK(lie_derivative(E, omega) == omega.scaled(Rat(8)));
}

TEST_CASE("lie derivative on functions is the directional derivative") {
    VectorField X({Z(), Y()});
    Poly f = Y() * Y() + Z().pow(3);
    DiffForm lf = lie_derivative(X, DiffForm::from_poly(f));
    CHECK(lf.as_poly() == Y().scaled(2) * Z() + Y() * Z().pow(2).scaled(3));
    CHECK(lf.as_poly() == X.apply(f));
}

TEST_CASE("pullback: functoriality and chain rule") {
    // phi: (y,z) -> (y + z^2, z); psi: (y,z) -> (y, y*z)
    PolyMap phi({Y() + Z().pow(2), Z()});
    PolyMap psi({Y(), Y() * Z()});
    DiffForm omega = DiffForm::monomial_form(Y(), {0, 1});
    int T = 12;
    DiffForm lhs = pullback(psi, pullback(phi, omega, T), T);
    // composite map psi then phi reads phi(psi(x)) componentwise
    std::vector<Poly> comp;
    for (const Poly &c : phi.components) comp.push_back(c.compose(psi.components, -1));
    PolyMap both(comp);
    DiffForm rhs = pullback(both, omega, T);
    CHECK(lhs == rhs);
    // d commutes with pullback
    DiffForm a = DiffForm::monomial_form(Y() * Y(), {1});
    CHECK(pullback(phi, exterior_derivative(a), T) ==
          exterior_derivative(pullback(phi, a, T)));
}

TEST_CASE("pullback by the normalization map scales the area form") {
    // Phi(y,z) = (y, z(A + B/2 z + C/3 z^2)) pulls dy^dz back to
    // (A + Bz + Cz^2) dy^dz exactly.
    Rat A(3), B(-1), C(Rat(2, 5));
    Poly z = Z();
    Poly second = z.scaled(A) + z.pow(2).scaled(B / 2) + z.pow(3).scaled(C / 3);
    PolyMap Phi({Y(), second});
    DiffForm dydz = DiffForm::monomial_form(Poly::constant(2, 1), {0, 1});
    DiffForm pulled = pullback(Phi, dydz, 16);
    Poly expect = Poly::constant(2, A) + z.scaled(B) + z.pow(2).scaled(C);
    CHECK(pulled == dydz.scaled(expect));
}

TEST_CASE("quasi-degree of forms and graded pieces") {
    Weights w({2, 1});
    DiffForm omega(2, 2);
    omega.add_term(Poly::constant(2, 1) + Z() + Y() * Z(), {0, 1});
    auto pieces = graded_pieces(omega, w);
    REQUIRE(pieces.size() == 3);
    CHECK(pieces.count(3) == 1);  // dy^dz
    CHECK(pieces.count(4) == 1);  // z dy^dz
    CHECK(pieces.count(6) == 1);  // yz dy^dz
    DiffForm sum(2, 2);
    for (const auto &[d, piece] : pieces) {
        auto qd = form_quasi_degree(piece, w);
        REQUIRE(qd.degree.has_value());
        CHECK(*qd.degree == d);
        sum = sum + piece;
    }
    CHECK(sum == omega);
}

TEST_CASE("scaling maps realize the torus action") {
    Weights w({2, 1});
    PolyMap Ft = PolyMap::scaling(w, Rat(3));
    DiffForm omega = DiffForm::monomial_form(Z(), {0, 1});  // quasi-degree 4
    DiffForm pulled = pullback(Ft, omega, 8);
    CHECK(pulled == omega.scaled(Rat(81)));
}

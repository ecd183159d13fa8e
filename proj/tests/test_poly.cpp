#include "doctest.h"

#include "algrest/poly.hpp"

using namespace algrest;

namespace {

Poly y2() { return Poly::variable(2, 0); }
Poly z2() { return Poly::variable(2, 1); }

}  // namespace

TEST_CASE("monomial order is graded lex, lowest degree first") {
    MonoLess less;
    Exp one{0, 0}, y{1, 0}, z{0, 1}, yy{2, 0}, yz{1, 1}, zz{0, 2};
    CHECK(less(one, y));
    CHECK(less(y, z));
    CHECK(less(z, yy));
    CHECK(less(yy, yz));
    CHECK(less(yz, zz));
    CHECK_FALSE(less(zz, yz));
}

TEST_CASE("arithmetic identities") {
    Poly y = y2(), z = z2();
    Poly f = y * y + z.scaled(3);
    Poly g = y - z;
    CHECK((f + g) - g == f);
    CHECK(f * g == g * f);
    CHECK((f + g) * g == f * g + g * g);
    CHECK(f.scaled(Rat(1, 2)) + f.scaled(Rat(1, 2)) == f);
    CHECK((f - f).is_zero());
    CHECK(-(-f) == f);
    CHECK(y.pow(0) == Poly::constant(2, 1));
    CHECK(y.pow(3) == y * y * y);
}

TEST_CASE("coefficient access and degrees") {
    Poly y = y2(), z = z2();
    Poly f = Poly::constant(2, 5) + y.scaled(2) + y * z * z;
    CHECK(f.constant_term() == 5);
    CHECK(f.coeff({1, 2}) == 1);
    CHECK(f.coeff({2, 0}) == 0);
    CHECK(f.total_degree() == 3);
    CHECK(Poly(2).total_degree() == 0);
    auto lin = f.linear_part();
    CHECK(lin[0] == 2);
    CHECK(lin[1] == 0);
    CHECK_FALSE(f.vanishes_at_origin());
    CHECK((f - Poly::constant(2, 5)).vanishes_at_origin());
}

TEST_CASE("derivative") {
    Poly y = y2(), z = z2();
    Poly f = y.pow(3) * z + z.pow(2);
    CHECK(f.derivative(0) == y.pow(2).scaled(3) * z);
    CHECK(f.derivative(1) == y.pow(3) + z.scaled(2));
    // d/dy d/dz == d/dz d/dy
    CHECK(f.derivative(0).derivative(1) == f.derivative(1).derivative(0));
}

TEST_CASE("truncation, total and weighted") {
    Poly y = y2(), z = z2();
    Poly f = Poly::constant(2, 1) + y + y * y * z + z.pow(5);
    CHECK(f.truncate(2) == Poly::constant(2, 1) + y);
    CHECK(f.truncate(3) == Poly::constant(2, 1) + y + y * y * z);
    Weights w({2, 1});
    // weighted degrees: 0, 2, 5, 5
    CHECK(f.truncate(4, w) == Poly::constant(2, 1) + y);
    CHECK(f.truncate(5, w) == f);
    CHECK(f.weighted_part(5, w) == y * y * z + z.pow(5));
    CHECK(f.weighted_part(3, w).is_zero());
}

TEST_CASE("composition") {
    Poly y = y2(), z = z2();
    Poly f = y * y + z;
    // y -> z, z -> y*z: exact substitution
    Poly g = f.compose({z, y * z}, -1);
    CHECK(g == z * z + y * z);
    // truncated substitution drops high degrees of intermediate products
    Poly h = (y.pow(4)).compose({y + z, z}, 3);
    CHECK(h.is_zero());
    Poly h2 = (y.pow(2)).compose({y + z, z}, 2);
    CHECK(h2 == y * y + (y * z).scaled(2) + z * z);
}

TEST_CASE("quasi-degree") {
    Poly y = y2(), z = z2();
    Weights w({2, 1});
    auto qd = quasi_degree(y * y + z.pow(4), w);
    CHECK_FALSE(qd.is_zero);
    REQUIRE(qd.degree.has_value());
    CHECK(*qd.degree == 4);
    auto mixed = quasi_degree(y + z, w);
    CHECK_FALSE(mixed.degree.has_value());
    auto zero = quasi_degree(Poly(2), w);
    CHECK(zero.is_zero);
}

TEST_CASE("weights validation") {
    CHECK_THROWS_AS(Weights({0, 1}), DomainError);
    CHECK_THROWS_AS(Weights({2, 2}), DomainError);  // gcd 2, not primitive
    CHECK_NOTHROW(Weights({2, 1}));
    CHECK_NOTHROW(Weights({3, 2}));
}

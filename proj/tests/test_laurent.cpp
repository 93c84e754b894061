#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "padspher/laurent.hpp"
#include "test_helpers.hpp"

using namespace padspher;
using padspher::testing::LaurentGen;

namespace {

Laurent X(int nv, int i) { return Laurent::x(nv, i); }

} // namespace

TEST_CASE("constants and monomials") {
    Laurent z(2);
    CHECK(z.is_zero());
    Laurent c = Laurent::constant(2, Rational(3, 2));
    CHECK(c.is_constant());
    CHECK(c.constant_value() == Rational(3, 2));
    CHECK(Laurent::constant(2, 0).is_zero());

    Laurent q = Laurent::q(1, -2);
    CHECK(q.term_count() == 1);
    CHECK(q.leading_term().first == Exp{-2, 0});
}

TEST_CASE("difference of squares") {
    int nv = 2;
    Laurent lhs = (X(nv, 1) + X(nv, 2)) * (X(nv, 1) - X(nv, 2));
    Laurent rhs = X(nv, 1) * X(nv, 1) - X(nv, 2) * X(nv, 2);
    CHECK(lhs == rhs);
}

TEST_CASE("ring axioms on random triples") {
    LaurentGen gen(12345, 3);
    for (int it = 0; it < 40; ++it) {
        Laurent a = gen.next(), b = gen.next(), c = gen.next();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("nvars mismatch is rejected") {
    Laurent a = Laurent::x(2, 1), b = Laurent::x(3, 1);
    CHECK_THROWS_AS(a + b, VarMismatch);
    CHECK_THROWS_AS(a * b, VarMismatch);
}

TEST_CASE("pow") {
    Laurent a = Laurent::constant(1, 1) + Laurent::q(1);
    Laurent sq = a * a;
    CHECK(a.pow(2) == sq);
    CHECK(a.pow(0) == Laurent::constant(1, 1));
    Laurent m = Laurent::q(1, 2).scaled(Rational(3));
    CHECK(m.pow(-1) == Laurent::monomial(1, Exp{-2, 0}, Rational(1, 3)));
    CHECK_THROWS_AS(a.pow(-1), DivisionByZero);
}

TEST_CASE("exact division") {
    int nv = 2;
    SUBCASE("cancellation of (x1^2-x2^2)/(x1-x2)") {
        Laurent f = X(nv, 1) * X(nv, 1) - X(nv, 2) * X(nv, 2);
        Laurent g = X(nv, 1) - X(nv, 2);
        CHECK(Laurent::exact_div(f, g) == X(nv, 1) + X(nv, 2));
    }
    SUBCASE("laurent shifts divide") {
        Laurent f = Laurent::constant(1, 1) + Laurent::q(1);     // 1 + q
        Laurent g = Laurent::q(1, -3);                           // q^-3
        Laurent h = Laurent::exact_div(f, g);
        CHECK(h == f * Laurent::q(1, 3));
    }
    SUBCASE("inexact division throws") {
        Laurent f = X(nv, 1) + Laurent::constant(nv, 1);
        Laurent g = X(nv, 2) + Laurent::constant(nv, 1);
        CHECK_THROWS_AS(Laurent::exact_div(f, g), InexactDivision);
        CHECK_THROWS_AS(Laurent::exact_div(f, Laurent(nv)), DivisionByZero);
    }
    SUBCASE("random products divide back") {
        LaurentGen gen(777, 2);
        for (int it = 0; it < 30; ++it) {
            Laurent a = gen.next_nonzero(), b = gen.next_nonzero();
            CHECK(Laurent::exact_div(a * b, b) == a);
        }
    }
}

TEST_CASE("poly_gcd") {
    int nv = 2;
    SUBCASE("shared factor recovered") {
        Laurent a = X(nv, 1) - X(nv, 2);
        Laurent f = (X(nv, 1) + X(nv, 2)) * a;
        Laurent g = (X(nv, 1) + Laurent::constant(nv, 1)) * a;
        Laurent d = Laurent::poly_gcd(f, g);
        CHECK(d == a);
    }
    SUBCASE("coprime inputs give a constant") {
        Laurent d = Laurent::poly_gcd(X(nv, 1) + Laurent::constant(nv, 1),
                                      X(nv, 2) + Laurent::constant(nv, 2));
        CHECK(d.is_constant());
    }
    SUBCASE("random common factors divide both") {
        LaurentGen gen(4242, 2, 3, 2);
        for (int it = 0; it < 15; ++it) {
            Laurent a = gen.next_polynomial(), b = gen.next_polynomial(), c = gen.next_polynomial();
            if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
            Laurent d = Laurent::poly_gcd(a * c, b * c);
            // c divides the gcd.
            Laurent q = Laurent::exact_div(d, Laurent::poly_gcd(d, c));
            CHECK(Laurent::exact_div(a * c, d) * d == a * c);
            CHECK(Laurent::exact_div(b * c, d) * d == b * c);
            (void)q;
        }
    }
}

TEST_CASE("substitute_monomials") {
    int nv = 2;
    // x2 -> q^-1 x1 turns x1 + x2 into (1 + q^-1) x1.
    Laurent f = X(nv, 1) + X(nv, 2);
    std::map<int, std::pair<Exp, Rational>> bind;
    bind[2] = {Exp{-1, 1, 0}, Rational(1)};
    Laurent g = f.substitute_monomials(bind);
    Laurent expect = X(nv, 1) + Laurent::monomial(nv, Exp{-1, 1, 0}, 1);
    CHECK(g == expect);
}

TEST_CASE("permuted acts on slots") {
    int nv = 3;
    Laurent f = X(nv, 1) + X(nv, 2).scaled(2);
    Laurent g = f.permuted({2, 1, 3}, 3);
    CHECK(g == X(nv, 2) + X(nv, 1).scaled(2));
}

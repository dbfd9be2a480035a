#include <doctest.h>

#include "adyn/biform.hpp"
#include "adyn/randgen.hpp"

using namespace adyn;

TEST_CASE("scalar arithmetic over Q") {
    Scalar a(3, 4), b(1, 2);
    CHECK((a + b).str() == "5/4");
    CHECK((a * b).str() == "3/8");
    CHECK((a - b).str() == "1/4");
    CHECK((a / b).str() == "3/2");
    CHECK(a.inv().str() == "4/3");
    CHECK(Scalar(-2).pow(3).str() == "-8");
    CHECK(Scalar(2, 3).pow(-2).str() == "9/4");
    CHECK_THROWS_WITH(Scalar(0).inv(), "division by zero");
}

TEST_CASE("scalar arithmetic over F_p") {
    Field f7 = prime_field(7);
    Scalar a(10, f7);  // = 3
    CHECK(a.str() == "3");
    CHECK((a + Scalar(5, f7)).str() == "1");
    CHECK(a.inv().str() == "5");  // 3*5 = 15 = 1 mod 7
    CHECK(Scalar(-1, f7).str() == "6");
    CHECK_THROWS(prime_field(6));
    // 1/2 as a rational literal maps to the residue inverse
    CHECK(Scalar(mpq_class(1, 2), f7).str() == "4");
}

TEST_CASE("characteristic collision is an explicit error") {
    Field f5 = prime_field(5);
    CHECK_THROWS_WITH(Scalar(mpq_class(1, 5), f5), "characteristic collision: division by zero mod 5");
}

TEST_CASE("exact square roots") {
    CHECK(Scalar(4).sqrt_exact()->str() == "2");
    CHECK(Scalar(9, 25).sqrt_exact()->str() == "3/5");
    CHECK(!Scalar(2).sqrt_exact());
    CHECK(!Scalar(-4).sqrt_exact());
    Field f7 = prime_field(7);
    auto r = Scalar(2, f7).sqrt_exact();  // 3^2 = 2, 4^2 = 2 mod 7
    REQUIRE(r);
    CHECK((*r) * (*r) == Scalar(2, f7));
    CHECK(!Scalar(3, f7).sqrt_exact());
}

TEST_CASE("unipoly basics") {
    UniPoly p = UniPoly::from_ints({-1, 0, 1});  // x^2 - 1
    CHECK(p.degree() == 2);
    CHECK(p.str() == "x^2 - 1");
    CHECK(p.eval(Scalar(3)).str() == "8");
    CHECK(p.derivative().str() == "2*x");
    CHECK((p * p).degree() == 4);
    CHECK(UniPoly(rationals()).degree() == UniPoly::kZeroDeg);

    auto [q, r] = p.divmod(UniPoly::from_ints({-1, 1}));
    CHECK(q.str() == "x + 1");
    CHECK(r.is_zero());
    CHECK_THROWS_WITH(p.exact_div(UniPoly::from_ints({0, 1})), "inexact division");
}

TEST_CASE("unipoly normalization") {
    UniPoly p = UniPoly::from_ints({-4, 0, 6});  // 6x^2 - 4
    auto [n, s] = p.normalized();
    CHECK(n.str() == "3*x^2 - 2");  // content 2 removed, lead positive
    CHECK(s.str() == "1/2");
    CHECK(p.monic().str() == "x^2 - 2/3");
    auto ratio = (p * Scalar(7, 3)).scalar_ratio(p);
    REQUIRE(ratio);
    CHECK(ratio->str() == "7/3");
    CHECK(!p.scalar_ratio(UniPoly::from_ints({1, 1})));
}

TEST_CASE("gcd examples") {
    UniPoly a = UniPoly::from_ints({-1, 0, 1}), b = UniPoly::from_ints({-1, 1});
    CHECK(gcd(a, b).str() == "x - 1");
    CHECK(gcd(UniPoly::from_ints({0, -1, 0, 1}), UniPoly::from_ints({-1, 0, 3})).degree() == 0);
    CHECK(gcd(UniPoly::from_ints({-4, 0, 6}), UniPoly(rationals())).str() == "x^2 - 2/3");
}

TEST_CASE("biform construction and evaluation") {
    BiForm f = BiForm::from_ints({1, 0, -1});  // X^2 - Y^2
    CHECK(f.degree() == 2);
    CHECK(f.a(2).str() == "1");
    CHECK(f.a(0).str() == "-1");
    CHECK(f.eval(Scalar(3), Scalar(2)).str() == "5");
    CHECK(f.dehomogenize().str() == "x^2 - 1");
    CHECK(BiForm::homogenize(f.dehomogenize(), 2) == f);
    CHECK(f.vanishes_at(ProjPoint::affine(Scalar(1))));
    CHECK(!f.vanishes_at(ProjPoint::infinity(rationals())));
}

TEST_CASE("partials: monomial rule and Euler identity") {
    auto [fx, fy] = BiForm::from_ints({1, 0, -1}).partials();
    CHECK(fx == BiForm::from_ints({2, 0}));
    CHECK(fy == BiForm::from_ints({0, -2}));

    // alpha = 2 family form
    BiForm f = BiForm::from_ints({0, 1, -3, 2, 0});
    auto [gx, gy] = f.partials();
    CHECK(gx == BiForm::from_ints({0, 3, -6, 2}));
    CHECK(gy == BiForm::from_ints({1, -6, 6, 0}));

    Field f2 = prime_field(2);
    BiForm h({Scalar(1, f2), Scalar(1, f2), Scalar(1, f2)}, f2);
    auto [hx, hy] = h.partials();
    CHECK(hx == BiForm({Scalar(0, f2), Scalar(1, f2)}, f2));  // 2X + Y = Y
    CHECK(hy == BiForm({Scalar(1, f2), Scalar(0, f2)}, f2));
}

TEST_CASE("Euler identity on random forms") {
    std::mt19937_64 rng(42);
    for (Field k : {rationals(), prime_field(5), prime_field(11)}) {
        for (int trial = 0; trial < 10; ++trial) {
            int d = 2 + int(rng() % 5);
            BiForm f = random_squarefree_form(rng, d, 9, k);
            auto [fx, fy] = f.partials();
            UniPoly lhs = UniPoly::x(k) * fx.dehomogenize() + fy.dehomogenize();
            CHECK(lhs == f.dehomogenize() * Scalar(d, k));
        }
    }
}

TEST_CASE("resultant examples") {
    CHECK(resultant(BiForm::from_ints({1, 0}), BiForm::from_ints({0, 1})).str() == "1");
    CHECK(resultant(BiForm::from_ints({0, -2}), BiForm::from_ints({-2, 0})).str() == "-4");
    // phi coordinates of F = X^3 - X*Y^2
    BiForm f = BiForm::from_ints({1, 0, -1, 0});
    auto [fx, fy] = f.partials();
    CHECK(resultant(fy, -fx).str() == "-12");
}

TEST_CASE("resultant multiplicativity and vanishing") {
    BiForm p = BiForm::from_ints({1, 2, -1}), q = BiForm::from_ints({2, 0, 3});
    BiForm r = BiForm::from_ints({1, -5, 1});
    CHECK(resultant(p * r, q) == resultant(p, q) * resultant(r, q));
    // shared root (1,1)
    BiForm a = BiForm::from_ints({1, -1}), b = BiForm::from_ints({2, -2, 0});
    CHECK(resultant(a, b).is_zero());
}

TEST_CASE("discriminant examples") {
    CHECK(discriminant(BiForm::from_ints({1, 0, -1})).value.str() == "4");
    CHECK(discriminant(BiForm::from_ints({1, 0, -1, 0})).value.str() == "4");
    // a_d = 0 forces the swap fallback
    DiscResult s = discriminant(BiForm::from_ints({0, 1, 0, -1}));
    CHECK(s.value.str() == "4");
    CHECK_FALSE(s.reduced_by_monomial);
    CHECK_THROWS_WITH((void)discriminant(BiForm::from_ints({0, 1, 0, -1}), false),
                      "leading coefficient zero");
    // both end coefficients zero: F = XY(-3X + 7Y) needs the shear fallback
    DiscResult sh = discriminant(BiForm::from_ints({0, -3, 7, 0}));
    CHECK(sh.value.str() == "441");
    CHECK(sh.reduced_by_monomial);
    // repeated factor X^2 still reports a vanishing discriminant
    CHECK(discriminant(BiForm::from_ints({0, 1, 0, 0})).value.is_zero());
}

TEST_CASE("discriminant agrees with the root-product formula") {
    // F = 2(X - Y)(X - 2Y)(X + Y) = 2X^3 - 4X^2Y - 2XY^2 + 4Y^3
    BiForm f = BiForm::from_ints({2, -4, -2, 4});
    // a_d^(2d-2) prod (r_i - r_j)^2 = 2^4 * (1-2)^2 (1+1)^2 (2+1)^2 = 16*1*4*9
    CHECK(discriminant(f).value.str() == "576");
}

TEST_CASE("squarefree") {
    CHECK(squarefree(BiForm::from_ints({1, 0, -1})));
    CHECK_FALSE(squarefree(BiForm::from_ints({1, 2, 1})));
    CHECK(squarefree(BiForm::from_ints({0, 1, -3, 2, 0})));
}

TEST_CASE("rational roots") {
    auto roots = rational_roots(BiForm::from_ints({0, 1, -3, 2, 0}));
    REQUIRE(roots.size() == 4);
    CHECK(roots[0].point == ProjPoint::affine(Scalar(0)));
    CHECK(roots[1].point == ProjPoint::affine(Scalar(1)));
    CHECK(roots[2].point == ProjPoint::affine(Scalar(2)));
    CHECK(roots[3].point.at_infinity());
    for (const auto& r : roots) CHECK(r.multiplicity == 1);

    CHECK(rational_roots(BiForm::from_ints({1, 0, 1})).empty());

    Field f2 = prime_field(2);
    BiForm h({Scalar(1, f2), Scalar(1, f2), Scalar(1, f2)}, f2);
    CHECK(rational_roots(h).empty());

    // multiplicity is reported
    auto mroots = rational_roots(BiForm::from_ints({1, 2, 1}));
    REQUIRE(mroots.size() == 1);
    CHECK(mroots[0].multiplicity == 2);
}

TEST_CASE("fractional coefficients do not defeat root search") {
    // 1/6 (x - 2)(x + 3) has rational roots despite non-integer coefficients
    UniPoly p = UniPoly({Scalar(-1), Scalar(1, 6), Scalar(1, 6)}, rationals());
    auto roots = rational_roots(p);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].first.str() == "-3");
    CHECK(roots[1].first.str() == "2");
}

TEST_CASE("projective point canonicalization and order") {
    ProjPoint p(Scalar(6), Scalar(3));
    CHECK(p.x().str() == "2");
    CHECK(p.y().str() == "1");
    ProjPoint inf(Scalar(5), Scalar(0));
    CHECK(inf.at_infinity());
    CHECK(inf.x().str() == "1");
    CHECK(p < inf);
    CHECK(ProjPoint::affine(Scalar(-7)) < p);
}

TEST_CASE("from_roots builds the split form") {
    std::vector<ProjPoint> pts = {ProjPoint::affine(Scalar(0)), ProjPoint::affine(Scalar(1)),
                                  ProjPoint::affine(Scalar(2)), ProjPoint::infinity(rationals())};
    BiForm f = BiForm::from_roots(pts);
    CHECK(f.normalized().first == BiForm::from_ints({0, 1, -3, 2, 0}).normalized().first);
}

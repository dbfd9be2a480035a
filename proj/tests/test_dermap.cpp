#include <doctest.h>

#include "adyn/dermap.hpp"
#include "adyn/randgen.hpp"

using namespace adyn;

namespace {
BiForm alpha2_form() { return BiForm::from_ints({0, 1, -3, 2, 0}); }
}  // namespace

TEST_CASE("build_phi examples") {
    ProjMap m = build_phi(BiForm::from_ints({1, 0, -1}));
    CHECK(m.p() == BiForm::from_ints({0, 1}));
    CHECK(m.q() == BiForm::from_ints({1, 0}));
    CHECK(m.is_morphism());

    ProjMap a2 = build_phi(alpha2_form());
    CHECK(a2.p() == BiForm::from_ints({1, -6, 6, 0}));
    CHECK(a2.q() == BiForm::from_ints({0, -3, 6, -2}));
    CHECK(a2.degree() == 3);

    CHECK_THROWS_WITH((void)build_phi(BiForm::from_ints({1, 2, 1})), "multiple roots");
    CHECK_THROWS((void)build_phi(BiForm::from_ints({1, -1})));  // degree 1
}

TEST_CASE("char p dividing d collapses to the identity") {
    Field f2 = prime_field(2);
    BiForm f({Scalar(1, f2), Scalar(1, f2), Scalar(1, f2)}, f2);
    PhiBuild pb = build_phi_checked(f);
    CHECK(pb.degenerate_identity);
    CHECK(pb.map.is_identity());
    CHECK(pb.map.degree() == 1);
}

TEST_CASE("affine form") {
    AffineMap m = affine_form(BiForm::from_ints({0, 1, 0}));  // F = XY, f = x
    CHECK(m.num().str() == "-x");
    CHECK(m.den().str() == "1");

    AffineMap inv = affine_form(BiForm::from_ints({1, 0, -1}));
    CHECK(inv.num().str() == "1");
    CHECK(inv.den().str() == "x");

    AffineMap a2 = affine_form(alpha2_form());
    // x - 4 f / f' with f = x(x-1)(x-2)
    CHECK(a2.num().str() == "-x^3 + 6*x^2 - 6*x");
    CHECK(a2.den().str() == "3*x^2 - 6*x + 2");
    CHECK(AffineMap::from_proj(build_phi(alpha2_form())) == a2);
    CHECK(a2.to_proj() == build_phi(alpha2_form()));
}

TEST_CASE("affine map evaluation handles infinity") {
    AffineMap inv = affine_form(BiForm::from_ints({1, 0, -1}));
    Field k = rationals();
    CHECK(inv.apply(ProjPoint::affine(Scalar(2))) == ProjPoint::affine(Scalar(1, 2)));
    CHECK(inv.apply(ProjPoint::affine(Scalar(0))).at_infinity());
    CHECK(inv.apply(ProjPoint::infinity(k)) == ProjPoint::affine(Scalar(0)));
}

TEST_CASE("fixed point form") {
    ProjMap mxy = build_phi(BiForm::from_ints({0, 1, 0}));  // (X, -Y)
    BiForm fp = fixed_point_form(mxy);
    CHECK(fp.scalar_ratio(BiForm::from_ints({0, 1, 0})));

    ProjMap swap = ProjMap::make(BiForm::from_ints({0, 1}), BiForm::from_ints({1, 0}));
    CHECK(fixed_point_form(swap).scalar_ratio(BiForm::from_ints({1, 0, -1})));

    CHECK(fixed_point_form(build_phi(alpha2_form())).scalar_ratio(alpha2_form()));
}

TEST_CASE("fixed point form is proportional to F on random input") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
        BiForm f = random_squarefree_form(rng, 3 + int(rng() % 5), 9, rationals());
        CHECK(fixed_point_form(build_phi(f)).scalar_ratio(f));
    }
}

TEST_CASE("res disc identity") {
    ResDiscReport r1 = res_disc_check(BiForm::from_ints({1, 0, -1}));
    CHECK(r1.res.str() == "-4");
    CHECK(r1.disc.str() == "4");
    CHECK(r1.identity_holds);

    ResDiscReport r2 = res_disc_check(BiForm::from_ints({1, 0, -1, 0}));
    CHECK(r2.res.str() == "-12");
    CHECK(r2.disc.str() == "4");
    CHECK(r2.identity_holds);
}

TEST_CASE("iterate") {
    ProjMap swap = ProjMap::make(BiForm::from_ints({0, 1}), BiForm::from_ints({1, 0}));
    CHECK(iterate(swap, 2).is_identity());
    ProjMap a2 = build_phi(alpha2_form());
    CHECK(iterate(a2, 1) == a2);
    ProjMap sq = iterate(a2, 2);
    CHECK(sq.degree() == 9);
    CHECK(sq.is_morphism());
    CHECK_THROWS_WITH((void)iterate(a2, 9, 100),
                      "size cap exceeded: degree 101 at iterate 5");
}

TEST_CASE("orbits by repeated application") {
    ProjMap a2 = build_phi(alpha2_form());
    for (long v : {0L, 1L, 2L}) {
        ProjPoint p = ProjPoint::affine(Scalar(v));
        CHECK(a2.apply(p) == p);
    }
    CHECK(a2.apply(ProjPoint::infinity(rationals())).at_infinity());
    CHECK(a2.apply_n(ProjPoint::affine(Scalar(3)), 1) == a2.apply(ProjPoint::affine(Scalar(3))));
}

TEST_CASE("psi sequence for the alpha=2 family") {
    auto steps = psi_sequence(alpha2_form(), 2);
    REQUIRE(steps.size() == 2);
    CHECK(steps[0].psi.str() == "x^3 - 3*x^2 + 2*x");
    CHECK(steps[0].infinity_periodic);
    CHECK(steps[0].psi.degree() == 3);  // (d-1)^1 + 1 - 1

    UniPoly expected = (UniPoly::from_ints({0, 1}) * UniPoly::from_ints({-1, 1}) *
                        UniPoly::from_ints({-2, 1}) * UniPoly::from_ints({-2, 0, 1}) *
                        UniPoly::from_ints({2, -2, 1}) * UniPoly::from_ints({2, -4, 1}))
                           .monic();
    CHECK(steps[1].psi == expected);
    CHECK(steps[1].psi.degree() == 9);  // (d-1)^2 + 1 - 1
}

TEST_CASE("psi reduced-fraction identity") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 6; ++t) {
        int d = 3 + int(rng() % 2);
        BiForm f = random_squarefree_form(rng, d, 9, rationals());
        auto steps = psi_sequence(f, 3);
        UniPoly xp = UniPoly::x(rationals());
        for (const auto& s : steps) {
            // phi~^k(x) - x = d * psi_scale * psi / B_k, already reduced
            CHECK(s.numer - xp * s.denom == s.psi * (s.psi_scale * Scalar(d)));
            CHECK(gcd(s.numer, s.denom).degree() == 0);
            long want = 1;
            for (int i = 0; i < s.period; ++i) want *= d - 1;
            CHECK(s.psi.degree() == int(want) + 1 - (s.infinity_periodic ? 1 : 0));
        }
    }
}

TEST_CASE("psi edge cases") {
    CHECK_THROWS_WITH((void)psi_sequence(BiForm::from_ints({1, 0, -1}), 2),
                      "dynamically trivial degree-1 map");
    Field f2 = prime_field(2);
    BiForm f({Scalar(1, f2), Scalar(1, f2), Scalar(1, f2)}, f2);
    CHECK_THROWS_WITH((void)psi_sequence(f, 1), "degenerate: identity");
}

TEST_CASE("periodic report at n = 1") {
    PeriodicReport pr = periodic_report(alpha2_form(), 1);
    REQUIRE(pr.rational_points.size() == 4);
    for (const auto& [pt, lam] : pr.rational_points) CHECK(lam.str() == "-3");
    CHECK(pr.rational_points.back().first.at_infinity());
    CHECK(pr.infinity_periodic);
    // (t + 3)^3 for the affine part
    CHECK(pr.multiplier_charpoly == UniPoly::from_ints({27, 27, 9, 1}));
}

TEST_CASE("multiplier relation sum") {
    PeriodicReport pr = periodic_report(BiForm::from_ints({1, 0, -1}), 1);
    REQUIRE(pr.rational_points.size() == 2);
    Scalar sum = zero(rationals());
    for (const auto& [pt, lam] : pr.rational_points) {
        CHECK(lam.str() == "-1");
        sum += (one(rationals()) - lam).inv();
    }
    CHECK(sum.is_one());
}

TEST_CASE("period-2 multipliers match the charpoly") {
    PeriodicReport pr = periodic_report(alpha2_form(), 2);
    // the rational 2-periodic points are the fixed points plus the pm sqrt(2)
    // pairs, which are irrational; every rational multiplier is a charpoly root
    CHECK(pr.psi.degree() == 9);
    for (const auto& [pt, lam] : pr.rational_points) {
        if (pt.at_infinity()) continue;
        CHECK(pr.multiplier_charpoly.eval(lam).is_zero());
    }
}

TEST_CASE("chain rule multiplier at a genuine 2-cycle") {
    // alpha = 9/25 family has the rational 2-cycle 3/5 <-> -3/5
    Scalar al(9, 25);
    Field k = rationals();
    Scalar o = one(k);
    BiForm f({zero(k), o, -(al + o), al, zero(k)}, k);
    ProjMap phi = build_phi(f);
    ProjPoint p = ProjPoint::affine(Scalar(3, 5));
    CHECK(phi.apply(p) == ProjPoint::affine(Scalar(-3, 5)));
    CHECK(phi.apply_n(p, 2) == p);
    Scalar lam = multiplier(phi, p, 2);
    CHECK(lam == multiplier(phi, ProjPoint::affine(Scalar(-3, 5)), 2));
    PeriodicReport pr = periodic_report(f, 2);
    CHECK(pr.multiplier_charpoly.eval(lam).is_zero());
}

TEST_CASE("multiplier through an orbit containing infinity") {
    // for phi = build_phi(F), infinity is fixed iff a_d = 0; multiplier 1 - d
    Scalar lam = multiplier(build_phi(alpha2_form()), ProjPoint::infinity(rationals()), 1);
    CHECK(lam.str() == "-3");
    CHECK_THROWS_WITH((void)multiplier(build_phi(alpha2_form()), ProjPoint::affine(Scalar(5)), 1),
                      "point is not periodic");
}

TEST_CASE("modified newton") {
    NewtonMap nm = modified_newton(UniPoly::from_ints({-1, 0, 1}), one(rationals()));
    // x - (x^2-1)/(2x) = (x^2+1)/(2x)
    CHECK(nm.map.num() * Scalar(2) == UniPoly::from_ints({1, 0, 1}));
    CHECK(nm.map.den() * Scalar(2) == UniPoly::from_ints({0, 2}));
    REQUIRE(nm.lambda_infinity);
    CHECK(nm.lambda_infinity->str() == "2");
    // Newton fixed points are critical: multiplier 0 at each root
    ProjMap proj = nm.map.to_proj();
    CHECK(multiplier(proj, ProjPoint::affine(Scalar(1)), 1).is_zero());
    CHECK(multiplier(proj, ProjPoint::affine(Scalar(-1)), 1).is_zero());

    NewtonMap deg = modified_newton(UniPoly::from_ints({0, 2, -3, 1}), Scalar(3));
    CHECK(deg.r_equals_degree);
    CHECK(!deg.lambda_infinity);
    CHECK(deg.map == affine_form(BiForm::from_ints({1, -3, 2, 0})));

    NewtonMap lam = modified_newton(UniPoly::from_ints({1, 2, 0, 1}), one(rationals()));
    CHECK(lam.lambda_infinity->str() == "3/2");

    CHECK(modified_newton(UniPoly::from_ints({0, 2, -3, 1}), Scalar(4)).map ==
          AffineMap(UniPoly::from_ints({0, -6, 6, -1}), UniPoly::from_ints({2, -6, 3})));
    CHECK_THROWS_WITH((void)modified_newton(UniPoly::from_ints({1, 2, 1}), one(rationals())),
                      "multiple roots");
    CHECK_THROWS((void)modified_newton(UniPoly::from_ints({-1, 0, 1}), zero(rationals())));
}

TEST_CASE("reconstruct") {
    Field k = rationals();
    std::vector<ProjPoint> pts = {ProjPoint::affine(zero(k)), ProjPoint::affine(one(k)),
                                  ProjPoint::affine(Scalar(2)), ProjPoint::infinity(k)};
    Reconstruction rec = reconstruct(pts, Scalar(4));
    CHECK(rec.map == build_phi(alpha2_form()));
    REQUIRE(rec.poly);
    CHECK(*rec.poly == UniPoly::from_ints({0, 2, -3, 1}));

    std::vector<ProjPoint> pm = {ProjPoint::affine(one(k)), ProjPoint::affine(Scalar(-1))};
    Reconstruction inv = reconstruct(pm, Scalar(2));
    CHECK(inv.map == build_phi(BiForm::from_ints({1, 0, -1})));

    std::vector<ProjPoint> bad = {ProjPoint::affine(zero(k)), ProjPoint::affine(one(k)),
                                  ProjPoint::infinity(k)};
    CHECK_THROWS_WITH((void)reconstruct(bad, Scalar(2)),
                      "infinity cannot be fixed when r equals the degree");
    std::vector<ProjPoint> dup = {ProjPoint::affine(one(k)), ProjPoint::affine(one(k))};
    CHECK_THROWS_WITH((void)reconstruct(dup, Scalar(2)), "duplicate points");
    CHECK_THROWS_WITH((void)reconstruct(pm, Scalar(3)),
                      "r must equal the point count when infinity is not fixed");
}

TEST_CASE("reconstruct round-trips fixed point data") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 10; ++t) {
        Field k = rationals();
        // distinct small rational points
        std::vector<ProjPoint> pts;
        int d = 3 + int(rng() % 3);
        for (long v = 0; int(pts.size()) < d; ++v) {
            if (rng() % 3 == 0) continue;
            pts.push_back(ProjPoint::affine(Scalar(v - 4)));
        }
        Reconstruction rec = reconstruct(pts, Scalar(d));
        PeriodicReport pr = periodic_report(rec.form.normalized().first, 1);
        REQUIRE(pr.rational_points.size() == size_t(d));
        for (int i = 0; i < d; ++i) {
            CHECK(pr.rational_points[i].first == pts[size_t(i)]);
            CHECK(pr.rational_points[i].second == Scalar(1 - d));
        }
    }
}

TEST_CASE("conjugate_linear moves fixed points") {
    ProjMap a2 = build_phi(alpha2_form());
    Field k = rationals();
    // z -> z + 1 is (1 1; 0 1); fixed points move to {-1, 0, 1, inf}
    ProjMap shifted = conjugate_linear(a2, one(k), one(k), zero(k), one(k));
    BiForm fp = fixed_point_form(shifted);
    CHECK(fp.vanishes_at(ProjPoint::affine(Scalar(-1))));
    CHECK(fp.vanishes_at(ProjPoint::affine(Scalar(0))));
    CHECK(fp.vanishes_at(ProjPoint::affine(Scalar(1))));
    CHECK(fp.vanishes_at(ProjPoint::infinity(k)));
}

TEST_CASE("multiplier charpoly of a map given directly") {
    ProjMap swap = ProjMap::make(BiForm::from_ints({0, 1}), BiForm::from_ints({1, 0}));
    // 1/x fixes +-1 with multiplier -1: (t+1)^2
    CHECK(periodic_multiplier_charpoly(swap, 1) == UniPoly::from_ints({1, 2, 1}));
}

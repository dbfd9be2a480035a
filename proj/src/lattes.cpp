#include "adyn/lattes.hpp"

#include "adyn/factor.hpp"

namespace adyn {

EllCurve::EllCurve(const Scalar& a, const Scalar& b, const Scalar& c) : a_(a), b_(b), c_(c) {
    require_same_field(a, b);
    require_same_field(a, c);
    Field k = a.field();
    if (k.prime() && (k.modulus == 2 || k.modulus == 3))
        throw error("characteristic 2 and 3 not supported");
    if (!squarefree(BiForm::homogenize(g(), 3))) throw error("singular curve: Disc(g) = 0");
}

UniPoly EllCurve::g() const {
    Field k = field();
    return UniPoly({c_, b_, a_, one(k)}, k);
}

Scalar EllCurve::j_invariant() const {
    Field k = field();
    Scalar b2 = Scalar(4, k) * a_, b4 = Scalar(2, k) * b_, b6 = Scalar(4, k) * c_;
    Scalar b8 = Scalar(4, k) * a_ * c_ - b_ * b_;
    Scalar c4 = b2 * b2 - Scalar(24, k) * b4;
    Scalar delta = -(b2 * b2 * b8) - Scalar(8, k) * b4.pow(3) - Scalar(27, k) * b6 * b6 +
                   Scalar(9, k) * b2 * b4 * b6;
    return c4.pow(3) / delta;
}

CurvePoly curve_mul(const CurvePoly& p, const CurvePoly& q, const UniPoly& g) {
    return {p.even * q.even + (p.odd * q.odd) * g, p.even * q.odd + p.odd * q.even};
}

namespace {

CurvePoly curve_sub(const CurvePoly& p, const CurvePoly& q) {
    return {p.even - q.even, p.odd - q.odd};
}

CurvePoly curve_pow(const CurvePoly& p, int e, const UniPoly& g) {
    Field k = g.field();
    CurvePoly r{UniPoly::constant(one(k)), UniPoly(k)};
    for (int i = 0; i < e; ++i) r = curve_mul(r, p, g);
    return r;
}

}  // namespace

CurvePoly division_polynomial(const EllCurve& e, int m) {
    if (m < 1) throw error("division polynomial index must be positive");
    Field k = e.field();
    UniPoly g = e.g();
    const Scalar &a = e.a(), &b = e.b(), &c = e.c();
    Scalar b2 = Scalar(4, k) * a, b4 = Scalar(2, k) * b, b6 = Scalar(4, k) * c;
    Scalar b8 = Scalar(4, k) * a * c - b * b;

    std::vector<CurvePoly> psi;
    auto ev = [&](UniPoly p) { return CurvePoly{std::move(p), UniPoly(k)}; };
    auto od = [&](UniPoly p) { return CurvePoly{UniPoly(k), std::move(p)}; };
    psi.push_back(ev(UniPoly(k)));                          // Psi_0 = 0
    psi.push_back(ev(UniPoly::constant(one(k))));           // Psi_1 = 1
    psi.push_back(od(UniPoly::constant(Scalar(2, k))));     // Psi_2 = 2y
    // Psi_3 = 2 g g'' - g'^2 = 3x^4 + 4a x^3 + 6b x^2 + 12c x + (4ac - b^2)
    psi.push_back(ev(UniPoly({b8, Scalar(3, k) * b6, Scalar(3, k) * b4, b2, Scalar(3, k)}, k)));
    // Psi_4 = 2y (2x^6 + b2 x^5 + 5 b4 x^4 + 10 b6 x^3 + 10 b8 x^2
    //             + (b2 b8 - b4 b6) x + (b4 b8 - b6^2))
    psi.push_back(od(UniPoly({b4 * b8 - b6 * b6, b2 * b8 - b4 * b6, Scalar(10, k) * b8,
                              Scalar(10, k) * b6, Scalar(5, k) * b4, b2, Scalar(2, k)}, k) *
                     Scalar(2, k)));

    for (int i = 5; i <= m; ++i) {
        if (i % 2 == 1) {
            int j = (i - 1) / 2;  // j >= 2
            psi.push_back(curve_sub(curve_mul(psi[j + 2], curve_pow(psi[j], 3, g), g),
                                    curve_mul(psi[j - 1], curve_pow(psi[j + 1], 3, g), g)));
        } else {
            int j = i / 2;  // j >= 3
            CurvePoly inner = curve_sub(curve_mul(psi[j + 2], curve_pow(psi[j - 1], 2, g), g),
                                        curve_mul(psi[j - 2], curve_pow(psi[j + 1], 2, g), g));
            // Psi_j * inner is pure even regardless of the parity of j, and
            // dividing by 2y turns it into y * (even part) / (2g)
            CurvePoly t = curve_mul(psi[j], inner, g);
            if (!t.pure_even()) throw error("y-factor did not cancel");
            psi.push_back(od(t.even.exact_div(g) / Scalar(2, k)));
        }
    }
    return psi[size_t(m)];
}

ProjMap lattes_map(const EllCurve& e, int m) {
    if (m < 2) throw error("multiplier must be at least 2");
    Field k = e.field();
    UniPoly g = e.g();
    CurvePoly num = curve_mul(division_polynomial(e, m - 1), division_polynomial(e, m + 1), g);
    CurvePoly den = curve_pow(division_polynomial(e, m), 2, g);
    if (!num.pure_even() || !den.pure_even()) throw error("y-factor did not cancel");
    UniPoly map_num = UniPoly::x(k) * den.even - num.even;
    ProjMap phi = AffineMap(map_num, den.even).to_proj();
    if (phi.degree() != m * m) throw error("unexpected Lattes degree");
    return phi;
}

DoublingCheck doubling_from_torsion(const EllCurve& e) {
    UniPoly f = division_polynomial(e, 3).even.monic();
    NewtonMap nm = modified_newton(f, Scalar(3, e.field()));
    bool flag = AffineMap::from_proj(lattes_map(e, 2)) == nm.map;
    return {std::move(nm), flag};
}

UniPoly three_torsion_by_integration(const EllCurve& e) {
    Field k = e.field();
    if (k.prime()) throw error("characteristic 0 required");
    Scalar C = -(e.b() * e.b() - Scalar(4, k) * e.a() * e.c()) / Scalar(12, k);
    return UniPoly({C, e.c(), e.b() / Scalar(2, k), e.a() / Scalar(3, k), Scalar(1, 4)}, k);
}

ResDiscExperiment res_disc_experiment(const EllCurve& e, int m) {
    if (m < 2) throw error("multiplier must be at least 2");
    Field k = e.field();
    if (k.prime()) throw error("experiment runs over the rationals");
    UniPoly g = e.g();
    CurvePoly prod = curve_mul(division_polynomial(e, m - 1), division_polynomial(e, m + 1), g);
    if (!prod.pure_even()) throw error("y-factor did not cancel");
    UniPoly p = prod.even;
    Scalar disc = discriminant(BiForm::homogenize(p, p.degree())).value;
    ProjMap phi = lattes_map(e, m);
    Scalar res = phi.map_resultant();
    if (disc.is_zero() || res.is_zero()) throw error("ratio not well-defined");
    Scalar ratio = disc / res;

    ResDiscExperiment out;
    out.m = m;
    out.disc = disc;
    out.res = res;
    out.ratio = ratio;
    out.sign = ratio.value() < 0 ? -1 : 1;
    out.num_factors = (abs(ratio.num()) == 1) ? decltype(out.num_factors){} : factorize(ratio.num());
    out.den_factors = (ratio.den() == 1) ? decltype(out.den_factors){} : factorize(ratio.den());
    mpz_class base = 2 * mpz_class(m - 1) * mpz_class(m + 1);
    out.factors_divide_2mm = true;
    for (const auto* fac : {&out.num_factors, &out.den_factors})
        for (const auto& [prime, exp] : *fac) {
            (void)exp;
            if (base % prime != 0) out.factors_divide_2mm = false;
        }
    return out;
}

CmReport cm_automorphism_suite(const EllCurve& e) {
    Field k = e.field();
    bool j1728 = e.a().is_zero() && e.c().is_zero() && !e.b().is_zero();
    bool j0 = e.a().is_zero() && e.b().is_zero() && !e.c().is_zero();
    if (!j1728 && !j0) throw error("not a recognized CM family");

    CmReport report;
    report.j_family = j1728 ? 1728 : 0;

    BiForm two_torsion = BiForm::homogenize(e.g(), 3);
    BiForm three_torsion = BiForm::homogenize(division_polynomial(e, 3).even, 4);

    std::optional<Moebius> action;
    std::string action_desc, skip_reason;
    if (j1728) {
        action = Moebius::diag(Scalar(-1, k), one(k));
        action_desc = "x -> -x";
    } else {
        action_desc = "x -> zeta_3 * x";
        if (!k.prime()) {
            skip_reason = "skipped: no cube root of unity in field";
        } else {
            for (long t = 2; t < k.modulus; ++t) {
                Scalar z(t, k);
                if ((z * z + z + one(k)).is_zero()) {
                    action = Moebius::diag(z, one(k));
                    break;
                }
            }
            if (!action) skip_reason = "skipped: no cube root of unity in field";
        }
    }

    auto run = [&](const std::string& name, const BiForm& form) {
        CmCheck chk{name, form, action_desc};
        if (!action) {
            chk.skipped = true;
            chk.skip_reason = skip_reason;
        } else {
            chk.chi = invariance_check(form, *action);
            chk.automorphism = is_automorphism(build_phi(form), *action);
        }
        report.checks.push_back(std::move(chk));
    };
    run("2-torsion", two_torsion);
    run("3-torsion", three_torsion);
    return report;
}

}  // namespace adyn

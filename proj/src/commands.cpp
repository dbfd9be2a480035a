#include "adyn/commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "adyn/lattes.hpp"
#include "adyn/parse.hpp"
#include "adyn/randgen.hpp"

namespace adyn::cli {

namespace {

using ojson = nlohmann::ordered_json;

struct Config {
    Field field = rationals();
    bool json_out = false;
    long cap = kDefaultSizeCap;
};

Field field_from_string(const std::string& s) {
    if (s == "q") return rationals();
    if (s.rfind("fp:", 0) == 0) {
        try {
            return prime_field(std::stol(s.substr(3)));
        } catch (const std::logic_error&) {
            throw error("bad modulus in field spec '" + s + "'");
        }
    }
    throw error("unknown field '" + s + "' (use q or fp:<p>)");
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t pos = s.find(',', start);
        out.push_back(s.substr(start, pos == std::string::npos ? pos : pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

ojson coeff_array(const std::vector<Scalar>& cs) {
    ojson arr = ojson::array();
    for (const auto& c : cs) arr.push_back(c.str());
    return arr;
}

ojson map_json(const ProjMap& m) {
    return ojson{{"P", m.p().str()},
                 {"Q", m.q().str()},
                 {"P_coeffs", coeff_array(m.p().coeffs())},
                 {"Q_coeffs", coeff_array(m.q().coeffs())},
                 {"degree", m.degree()}};
}

ojson affine_json(const AffineMap& m) {
    return ojson{{"num", m.num().str()}, {"den", m.den().str()}, {"degree", m.degree()}};
}

std::string curvepoly_str(const CurvePoly& p) {
    if (p.pure_even()) return p.even.str();
    if (p.pure_odd()) return "y*(" + p.odd.str() + ")";
    return "(" + p.even.str() + ") + y*(" + p.odd.str() + ")";
}

void render_text(const ojson& v, std::ostream& out, int indent) {
    std::string ind(size_t(indent), ' ');
    for (const auto& [key, val] : v.items()) {
        if (val.is_object()) {
            out << ind << key << ":\n";
            render_text(val, out, indent + 2);
        } else if (val.is_array()) {
            out << ind << key << ":";
            if (val.empty()) out << " []";
            out << "\n";
            for (const auto& item : val) {
                if (item.is_string())
                    out << ind << "  - " << item.get<std::string>() << "\n";
                else
                    out << ind << "  - " << item.dump() << "\n";
            }
        } else if (val.is_string()) {
            out << ind << key << ": " << val.get<std::string>() << "\n";
        } else {
            out << ind << key << ": " << val.dump() << "\n";
        }
    }
}

void emit(const ojson& doc, const Config& cfg, std::ostream& out) {
    if (cfg.json_out)
        out << doc.dump(2) << "\n";
    else
        render_text(doc, out, 0);
}

// ---------- command handlers ----------

ojson cmd_build(const std::string& src, const Config& cfg) {
    BiForm f = parse_biform(src, cfg.field);
    PhiBuild pb = build_phi_checked(f);
    ojson doc{{"command", "build"}, {"F", f.str()}, {"degree_F", f.degree()}};
    doc["map"] = map_json(pb.map);
    doc["resultant"] = pb.map.map_resultant().str();
    doc["morphism"] = pb.map.is_morphism();
    doc["degenerate_identity"] = pb.degenerate_identity;
    return doc;
}

ojson cmd_affine(const std::string& src, const Config& cfg) {
    BiForm f = parse_biform(src, cfg.field);
    AffineMap m = affine_form(f);
    return ojson{{"command", "affine"}, {"F", f.str()}, {"map", affine_json(m)}};
}

ojson cmd_fixed(const std::string& src, const Config& cfg) {
    BiForm f = parse_biform(src, cfg.field);
    PeriodicReport pr = periodic_report(f, 1, cfg.cap);
    int d = f.degree();
    ojson pts = ojson::array();
    for (const auto& [pt, lam] : pr.rational_points)
        pts.push_back(ojson{{"point", pt.str()}, {"multiplier", lam.str()}});
    ojson doc{{"command", "fixed"}, {"F", f.str()}, {"fixed_points", pts}};
    doc["multiplier_charpoly"] = pr.multiplier_charpoly.str("t");
    doc["infinity_fixed"] = pr.infinity_periodic;
    bool all_rational = pr.rational_points.size() == size_t(d);
    doc["all_rational"] = all_rational;
    if (all_rational) {
        Scalar sum = zero(f.field());
        for (const auto& [pt, lam] : pr.rational_points) sum += (one(f.field()) - lam).inv();
        doc["relation_sum"] = sum.str();
        doc["relation_holds"] = sum.is_one();
    }
    return doc;
}

ojson cmd_iterate(const std::string& src, int n, const Config& cfg) {
    BiForm f = parse_biform(src, cfg.field);
    ProjMap it = iterate(build_phi(f), n, cfg.cap);
    return ojson{{"command", "iterate"}, {"F", f.str()}, {"n", n}, {"map", map_json(it)}};
}

ojson cmd_orbit(const std::string& src, const std::string& pt_s, int n, const Config& cfg) {
    BiForm f = parse_biform(src, cfg.field);
    ProjMap phi = build_phi(f);
    ProjPoint p = parse_point(pt_s, cfg.field);
    ojson orbit = ojson::array();
    for (int i = 0; i <= n; ++i) {
        orbit.push_back(p.str());
        if (i < n) p = phi.apply(p);
    }
    return ojson{{"command", "orbit"}, {"F", f.str()}, {"n", n}, {"orbit", orbit}};
}

ojson cmd_psi(const std::string& src, int n, const Config& cfg) {
    BiForm f = parse_biform(src, cfg.field);
    auto steps = psi_sequence(f, n, cfg.cap);
    ojson arr = ojson::array();
    for (const auto& s : steps)
        arr.push_back(ojson{{"n", s.period},
                            {"psi", s.psi.str()},
                            {"degree", s.psi.degree()},
                            {"c_prev", s.c_prev.str()},
                            {"psi_scale", s.psi_scale.str()},
                            {"B", s.denom.str()},
                            {"infinity_periodic", s.infinity_periodic}});
    return ojson{{"command", "psi"}, {"F", f.str()}, {"steps", arr}};
}

ojson cmd_periodic(const std::string& src, int n, const Config& cfg) {
    BiForm f = parse_biform(src, cfg.field);
    PeriodicReport pr = periodic_report(f, n, cfg.cap);
    ojson pts = ojson::array();
    for (const auto& [pt, lam] : pr.rational_points)
        pts.push_back(ojson{{"point", pt.str()}, {"multiplier", lam.str()}});
    return ojson{{"command", "periodic"},
                 {"F", f.str()},
                 {"n", n},
                 {"psi", pr.psi.str()},
                 {"psi_degree", pr.psi.degree()},
                 {"rational_points", pts},
                 {"multiplier_charpoly", pr.multiplier_charpoly.str("t")},
                 {"infinity_periodic", pr.infinity_periodic}};
}

ojson cmd_newton(const std::string& src, const std::string& r_s, const Config& cfg) {
    UniPoly f = parse_unipoly(src, cfg.field);
    Scalar r = parse_scalar(r_s, cfg.field);
    NewtonMap nm = modified_newton(f, r);
    ojson doc{{"command", "newton"}, {"f", f.str()}, {"r", r.str()}, {"map", affine_json(nm.map)}};
    if (nm.lambda_infinity)
        doc["lambda_infinity"] = nm.lambda_infinity->str();
    else
        doc["note"] = "r equals degree: the map is a phi_F and infinity is not fixed";
    return doc;
}

ojson cmd_reconstruct(const std::string& pts_s, const std::string& r_s, const Config& cfg) {
    std::vector<ProjPoint> pts;
    for (const auto& tok : split_commas(pts_s)) pts.push_back(parse_point(tok, cfg.field));
    Scalar r = parse_scalar(r_s, cfg.field);
    Reconstruction rec = reconstruct(pts, r);
    ojson doc{{"command", "reconstruct"}, {"r", r.str()}, {"form", rec.form.str()}};
    if (rec.poly) doc["poly"] = rec.poly->str();
    doc["map"] = map_json(rec.map);
    return doc;
}

ojson cmd_conjugate(const std::string& src, const std::string& gamma_s, const Config& cfg) {
    BiForm f = parse_biform(src, cfg.field);
    auto parts = split_commas(gamma_s);
    if (parts.size() != 4) throw error("--gamma expects a,b,c,d");
    Moebius g(parse_scalar(parts[0], cfg.field), parse_scalar(parts[1], cfg.field),
              parse_scalar(parts[2], cfg.field), parse_scalar(parts[3], cfg.field));
    BiForm conj_f = conjugate_form(f, g);
    ProjMap conj_m = conjugate_map(build_phi(f), g);
    return ojson{{"command", "conjugate"},
                 {"F", f.str()},
                 {"gamma", g.str()},
                 {"conjugated_form", conj_f.str()},
                 {"conjugated_map", map_json(conj_m)},
                 {"closure_holds", build_phi(conj_f) == conj_m}};
}

ojson cmd_normal_form(const std::string& src, const Config& cfg) {
    BiForm f = parse_biform(src, cfg.field);
    NormalForm nf = normal_form(f);
    ojson alphas = ojson::array(), orbits = ojson::array();
    for (const auto& a : nf.alphas) {
        alphas.push_back(a.str());
        ojson orbit = ojson::array();
        for (const auto& v : cross_ratio_orbit(a)) orbit.push_back(v.str());
        orbits.push_back(orbit);
    }
    return ojson{{"command", "normal-form"},
                 {"F", f.str()},
                 {"alphas", alphas},
                 {"cross_ratio_orbits", orbits},
                 {"moebius", nf.change.str()}};
}

ojson cmd_alpha(const std::string& value_s, const Config& cfg) {
    AlphaFamily fam(parse_scalar(value_s, cfg.field));
    auto [f, phi] = alpha_family_form(fam);
    TwoPeriodic tp = two_periodic_points(fam);
    ojson quads = ojson::array(), pts = ojson::array();
    for (const auto& q : tp.quadratics) quads.push_back(q.str());
    for (const auto& p : tp.rational_points) pts.push_back(p.str());
    return ojson{{"command", "alpha"},
                 {"alpha", fam.alpha.str()},
                 {"F", f.str()},
                 {"map", map_json(phi)},
                 {"two_periodic_quadratics", quads},
                 {"rational_two_periodic", pts},
                 {"psi2", tp.psi2.str()}};
}

ojson cmd_pythagorean(long bound, const Config&) {
    ojson arr = ojson::array();
    for (const auto& a : pythagorean_alphas(bound)) arr.push_back(a.str());
    return ojson{{"command", "pythagorean"}, {"bound", bound}, {"alphas", arr}};
}

ojson cmd_aut(const std::string& src, const std::string& gamma_s, const Config& cfg) {
    BiForm f = parse_biform(src, cfg.field);
    auto parts = split_commas(gamma_s);
    if (parts.size() != 4) throw error("--gamma expects a,b,c,d");
    Moebius g(parse_scalar(parts[0], cfg.field), parse_scalar(parts[1], cfg.field),
              parse_scalar(parts[2], cfg.field), parse_scalar(parts[3], cfg.field));
    auto chi = invariance_check(f, g);
    ojson doc{{"command", "aut"}, {"F", f.str()}, {"gamma", g.str()}};
    doc["chi"] = chi ? ojson(chi->str()) : ojson(nullptr);
    doc["automorphism"] = is_automorphism(build_phi(f), g);
    return doc;
}

EllCurve parse_curve(const std::string& s, Field f) {
    auto parts = split_commas(s);
    if (parts.size() != 3) throw error("--curve expects a,b,c");
    return EllCurve(parse_scalar(parts[0], f), parse_scalar(parts[1], f),
                    parse_scalar(parts[2], f));
}

ojson cmd_lattes(const std::string& curve_s, int m, const Config& cfg) {
    EllCurve e = parse_curve(curve_s, cfg.field);
    ProjMap phi = lattes_map(e, m);
    ojson psis = ojson::object();
    for (int i = std::max(1, m - 1); i <= m + 1; ++i)
        psis["psi_" + std::to_string(i)] = curvepoly_str(division_polynomial(e, i));
    ojson doc{{"command", "lattes"},
              {"curve", ojson{{"a", e.a().str()},
                              {"b", e.b().str()},
                              {"c", e.c().str()},
                              {"g", e.g().str()},
                              {"j", e.j_invariant().str()}}},
              {"m", m},
              {"division_polynomials", psis},
              {"map", map_json(phi)},
              {"affine_map", affine_json(AffineMap::from_proj(phi))}};
    doc["multiplier_charpoly"] = periodic_multiplier_charpoly(phi, 1, cfg.cap).str("t");
    doc["lambda_infinity"] = multiplier(phi, ProjPoint::infinity(cfg.field), 1).str();
    if (m == 2) {
        DoublingCheck dc = doubling_from_torsion(e);
        doc["newton_r3_map"] = affine_json(dc.newton.map);
        doc["newton_equivalence"] = dc.matches_lattes;
        if (!cfg.field.prime()) {
            UniPoly g_int = three_torsion_by_integration(e);
            UniPoly psi3 = division_polynomial(e, 3).even;
            doc["integral_G"] = g_int.str();
            doc["twelve_G_equals_psi3"] = (g_int * Scalar(12, cfg.field)) == psi3;
        }
    }
    if (e.a().is_zero() && (e.b().is_zero() != e.c().is_zero())) {
        CmReport rep = cm_automorphism_suite(e);
        ojson checks = ojson::array();
        for (const auto& c : rep.checks) {
            ojson entry{{"form_name", c.form_name}, {"form", c.form.str()}, {"action", c.action}};
            if (c.skipped) {
                entry["skipped"] = c.skip_reason;
            } else {
                entry["chi"] = c.chi ? ojson(c.chi->str()) : ojson(nullptr);
                entry["automorphism"] = c.automorphism;
            }
            checks.push_back(entry);
        }
        doc["cm_automorphisms"] = ojson{{"j_family", rep.j_family}, {"checks", checks}};
    }
    return doc;
}

ojson cmd_experiment(const std::string& curve_s, int m, const Config& cfg) {
    EllCurve e = parse_curve(curve_s, cfg.field);
    ResDiscExperiment ex = res_disc_experiment(e, m);
    auto fac_json = [](const std::vector<std::pair<mpz_class, int>>& fs) {
        ojson arr = ojson::array();
        for (const auto& [p, k] : fs) arr.push_back(ojson::array({p.get_str(), k}));
        return arr;
    };
    return ojson{{"command", "experiment"},
                 {"kind", "resdisc"},
                 {"m", m},
                 {"disc", ex.disc.str()},
                 {"res", ex.res.str()},
                 {"ratio", ex.ratio.str()},
                 {"sign", ex.sign},
                 {"ratio_num_factors", fac_json(ex.num_factors)},
                 {"ratio_den_factors", fac_json(ex.den_factors)},
                 {"factors_divide_2mm", ex.factors_divide_2mm}};
}

// ---------- randomized property suites ----------

int check_euler(std::mt19937_64& rng, int trials) {
    int failures = 0;
    long primes[] = {2, 3, 5, 7, 11};
    for (int t = 0; t < trials; ++t) {
        Field f = (t % 2 == 0) ? rationals() : prime_field(primes[(t / 2) % 5]);
        std::uniform_int_distribution<int> dd(2, 8);
        int d = dd(rng);
        try {
            BiForm form = random_squarefree_form(rng, d, 9, f);
            auto [fx, fy] = form.partials();
            UniPoly lhs = UniPoly::x(f) * fx.dehomogenize() + fy.dehomogenize();
            if (lhs != form.dehomogenize() * Scalar(d, f)) ++failures;
        } catch (const error&) {
            // vanishing partial in small characteristic: resample
            --t;
        }
    }
    return failures;
}

int check_resdisc(std::mt19937_64& rng, int trials) {
    int failures = 0;
    std::uniform_int_distribution<int> dd(3, 8);
    for (int t = 0; t < trials; ++t) {
        BiForm f = random_squarefree_form(rng, dd(rng), 9, rationals());
        if (!res_disc_check(f).identity_holds) ++failures;
    }
    return failures;
}

int check_family(std::mt19937_64& rng, int trials) {
    int failures = 0;
    std::uniform_int_distribution<int> dd(3, 6);
    for (int t = 0; t < trials; ++t) {
        BiForm f = random_squarefree_form(rng, dd(rng), 9, rationals());
        Moebius g = random_moebius(rng, 5, rationals());
        if (build_phi(conjugate_form(f, g)) != conjugate_map(build_phi(f), g)) ++failures;
    }
    return failures;
}

int check_psi(std::mt19937_64& rng, int trials) {
    int failures = 0;
    std::uniform_int_distribution<int> dd(3, 4);
    for (int t = 0; t < trials; ++t) {
        int d = dd(rng);
        BiForm f = random_squarefree_form(rng, d, 9, rationals());
        try {
            auto steps = psi_sequence(f, 3);
            UniPoly xp = UniPoly::x(rationals());
            for (const auto& s : steps) {
                UniPoly lhs = s.numer - xp * s.denom;
                if (lhs != s.psi * (s.psi_scale * Scalar(d))) ++failures;
            }
        } catch (const error&) {
            ++failures;
        }
    }
    return failures;
}

int check_multipliers(std::mt19937_64& rng, int trials) {
    int failures = 0;
    std::uniform_int_distribution<int> dd(3, 6);
    for (int t = 0; t < trials; ++t) {
        int d = dd(rng);
        BiForm f = random_squarefree_form(rng, d, 9, rationals());
        PeriodicReport pr = periodic_report(f, 1);
        Scalar expect = one(rationals()) - Scalar(d);
        UniPoly want = UniPoly({-expect, one(rationals())}, rationals()).pow(pr.psi.degree());
        if (pr.multiplier_charpoly != want) ++failures;
        for (const auto& [pt, lam] : pr.rational_points) {
            (void)pt;
            if (lam != expect) ++failures;
        }
        if (pr.rational_points.size() == size_t(d)) {
            Scalar sum = zero(rationals());
            for (const auto& [pt, lam] : pr.rational_points) sum += (one(rationals()) - lam).inv();
            if (!sum.is_one()) ++failures;
        }
    }
    return failures;
}

ojson cmd_check(const std::string& suite, unsigned long seed, int trials, int& exit_code) {
    std::mt19937_64 rng(seed);
    int failures;
    if (suite == "euler")
        failures = check_euler(rng, trials);
    else if (suite == "resdisc")
        failures = check_resdisc(rng, trials);
    else if (suite == "family")
        failures = check_family(rng, trials);
    else if (suite == "psi")
        failures = check_psi(rng, trials);
    else if (suite == "multipliers")
        failures = check_multipliers(rng, trials);
    else
        throw error("unknown suite '" + suite +
                    "' (euler, resdisc, family, psi, multipliers)");
    if (failures > 0) exit_code = 1;
    return ojson{{"command", "check"},
                 {"suite", suite},
                 {"seed", seed},
                 {"trials", trials},
                 {"failures", failures},
                 {"pass", failures == 0}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact arithmetic dynamics of partial-derivative maps on P^1"};
    app.require_subcommand(1);

    std::string field_s = "q";
    Config cfg;
    std::string poly, point, gamma, points, r_s, value, curve, suite = "euler", kind;
    int n = 1, m = 2, trials = 50;
    long bound = 5;
    unsigned long seed = 1;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--field", field_s, "coefficient field: q or fp:<p>");
        sub->add_flag("--json", cfg.json_out, "machine-readable output");
        sub->add_option("--size-cap", cfg.cap, "max coefficient count per iterate");
        return sub;
    };

    ojson doc;
    int exit_code = 0;

    auto* c_build = add_common(app.add_subcommand("build", "phi_F from a form F"));
    c_build->add_option("F", poly)->required();
    c_build->callback([&] { cfg.field = field_from_string(field_s); doc = cmd_build(poly, cfg); });

    auto* c_affine = add_common(app.add_subcommand("affine", "x - d f/f' for F"));
    c_affine->add_option("F", poly)->required();
    c_affine->callback([&] { cfg.field = field_from_string(field_s); doc = cmd_affine(poly, cfg); });

    auto* c_fixed = add_common(app.add_subcommand("fixed", "fixed points and multipliers"));
    c_fixed->add_option("F", poly)->required();
    c_fixed->callback([&] { cfg.field = field_from_string(field_s); doc = cmd_fixed(poly, cfg); });

    auto* c_iter = add_common(app.add_subcommand("iterate", "exact k-th iterate"));
    c_iter->add_option("F", poly)->required();
    c_iter->add_option("--n", n)->required();
    c_iter->callback([&] { cfg.field = field_from_string(field_s); doc = cmd_iterate(poly, n, cfg); });

    auto* c_orbit = add_common(app.add_subcommand("orbit", "orbit listing"));
    c_orbit->add_option("F", poly)->required();
    c_orbit->add_option("--point", point)->required();
    c_orbit->add_option("--n", n)->required();
    c_orbit->callback([&] { cfg.field = field_from_string(field_s); doc = cmd_orbit(poly, point, n, cfg); });

    auto* c_psi = add_common(app.add_subcommand("psi", "periodic-point polynomials"));
    c_psi->add_option("F", poly)->required();
    c_psi->add_option("--n", n)->required();
    c_psi->callback([&] { cfg.field = field_from_string(field_s); doc = cmd_psi(poly, n, cfg); });

    auto* c_per = add_common(app.add_subcommand("periodic", "periodic-point report"));
    c_per->add_option("F", poly)->required();
    c_per->add_option("--n", n)->required();
    c_per->callback([&] { cfg.field = field_from_string(field_s); doc = cmd_periodic(poly, n, cfg); });

    auto* c_newton = add_common(app.add_subcommand("newton", "modified Newton map"));
    c_newton->add_option("f", poly)->required();
    c_newton->add_option("--r", r_s)->required();
    c_newton->callback([&] { cfg.field = field_from_string(field_s); doc = cmd_newton(poly, r_s, cfg); });

    auto* c_rec = add_common(app.add_subcommand("reconstruct", "map from fixed points"));
    c_rec->add_option("--points", points)->required();
    c_rec->add_option("--r", r_s)->required();
    c_rec->callback([&] { cfg.field = field_from_string(field_s); doc = cmd_reconstruct(points, r_s, cfg); });

    auto* c_conj = add_common(app.add_subcommand("conjugate", "PGL2 conjugation"));
    c_conj->add_option("F", poly)->required();
    c_conj->add_option("--gamma", gamma)->required();
    c_conj->callback([&] { cfg.field = field_from_string(field_s); doc = cmd_conjugate(poly, gamma, cfg); });

    auto* c_nf = add_common(app.add_subcommand("normal-form", "move fixed points to 0,1,inf"));
    c_nf->add_option("F", poly)->required();
    c_nf->callback([&] { cfg.field = field_from_string(field_s); doc = cmd_normal_form(poly, cfg); });

    auto* c_alpha = add_common(app.add_subcommand("alpha", "the degree-4 alpha family"));
    c_alpha->add_option("--value", value)->required();
    c_alpha->callback([&] { cfg.field = field_from_string(field_s); doc = cmd_alpha(value, cfg); });

    auto* c_pyth = add_common(app.add_subcommand("pythagorean", "alphas with rational 2-cycles"));
    c_pyth->add_option("--bound", bound)->required();
    c_pyth->callback([&] { cfg.field = field_from_string(field_s); doc = cmd_pythagorean(bound, cfg); });

    auto* c_aut = add_common(app.add_subcommand("aut", "invariance and automorphism check"));
    c_aut->add_option("F", poly)->required();
    c_aut->add_option("--gamma", gamma)->required();
    c_aut->callback([&] { cfg.field = field_from_string(field_s); doc = cmd_aut(poly, gamma, cfg); });

    auto* c_lat = add_common(app.add_subcommand("lattes", "division polynomials and Lattes map"));
    c_lat->add_option("--curve", curve)->required();
    c_lat->add_option("--m", m)->required();
    c_lat->callback([&] { cfg.field = field_from_string(field_s); doc = cmd_lattes(curve, m, cfg); });

    auto* c_exp = add_common(app.add_subcommand("experiment", "Res/Disc constant experiment"));
    c_exp->add_option("kind", kind)->required();
    c_exp->add_option("--curve", curve)->required();
    c_exp->add_option("--m", m)->required();
    c_exp->callback([&] {
        cfg.field = field_from_string(field_s);
        if (kind != "resdisc") throw error("unknown experiment '" + kind + "'");
        doc = cmd_experiment(curve, m, cfg);
    });

    auto* c_check = add_common(app.add_subcommand("check", "randomized property suites"));
    c_check->add_option("suite", suite)->required();
    c_check->add_option("--seed", seed);
    c_check->add_option("--trials", trials);
    c_check->callback([&] { cfg.field = field_from_string(field_s); doc = cmd_check(suite, seed, trials, exit_code); });

    std::vector<const char*> argv;
    argv.push_back("adyn");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    emit(doc, cfg, out);
    return exit_code;
}

}  // namespace adyn::cli

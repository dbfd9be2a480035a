#include "adyn/dermap.hpp"

#include <algorithm>

namespace adyn {

namespace {

// Joint content/sign normalization of a pair of forms (shared scale).
Scalar joint_scale(const std::vector<Scalar>& all, Field f) {
    if (f.prime()) {
        for (const auto& c : all)
            if (!c.is_zero()) return c.inv();
        throw error("zero map");
    }
    mpz_class den_lcm(1), num_gcd(0);
    for (const auto& c : all) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    for (const auto& c : all) {
        mpz_class n = c.num() * (den_lcm / c.den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    mpq_class s(den_lcm, num_gcd);
    s.canonicalize();
    Scalar sc(s, f);
    for (const auto& c : all) {
        if (c.is_zero()) continue;
        if ((c.value() * s) < 0) sc = -sc;
        break;
    }
    return sc;
}

long checked_pow(long base, int e, long cap) {
    long r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > cap / base) return cap + 1;
        r *= base;
    }
    return r;
}

}  // namespace

ProjMap ProjMap::make(const BiForm& p, const BiForm& q) {
    if (p.degree() != q.degree()) throw error("coordinate degrees differ");
    Field f = p.field();
    UniPoly pd = p.dehomogenize(), qd = q.dehomogenize();
    UniPoly g = gcd(pd, qd);
    int yp = p.degree() - pd.degree(), yq = q.degree() - qd.degree();
    int ymin = std::min(yp, yq);
    bool was_reduced = g.degree() > 0 || ymin > 0;
    int nd = p.degree() - g.degree() - ymin;
    BiForm pr = BiForm::homogenize(pd.exact_div(g), nd);
    BiForm qr = BiForm::homogenize(qd.exact_div(g), nd);

    std::vector<Scalar> all = pr.coeffs();
    all.insert(all.end(), qr.coeffs().begin(), qr.coeffs().end());
    Scalar s = joint_scale(all, f);
    return ProjMap(pr * s, qr * s, was_reduced);
}

bool ProjMap::is_identity() const {
    if (degree() != 1) return false;
    Field f = field();
    return p_ == BiForm({one(f), zero(f)}, f) && q_ == BiForm({zero(f), one(f)}, f);
}

ProjPoint ProjMap::apply(const ProjPoint& pt) const {
    return ProjPoint(p_.eval(pt.x(), pt.y()), q_.eval(pt.x(), pt.y()));
}

ProjPoint ProjMap::apply_n(const ProjPoint& pt, int n) const {
    ProjPoint r = pt;
    for (int i = 0; i < n; ++i) r = apply(r);
    return r;
}

std::string ProjMap::str() const { return "(" + p_.str() + ", " + q_.str() + ")"; }

AffineMap::AffineMap(const UniPoly& num, const UniPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw error("zero denominator");
    UniPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
    }
    auto [dn, s] = den_.normalized();
    den_ = dn;
    num_ = num_ * s;
}

AffineMap AffineMap::from_proj(const ProjMap& m) {
    return AffineMap(m.p().dehomogenize(), m.q().dehomogenize());
}

ProjMap AffineMap::to_proj() const {
    int d = degree();
    return ProjMap::make(BiForm::homogenize(num_, d), BiForm::homogenize(den_, d));
}

ProjPoint AffineMap::apply(const ProjPoint& pt) const {
    if (pt.at_infinity()) {
        int d = degree();
        return ProjPoint(num_.coeff(d), den_.coeff(d));
    }
    return ProjPoint(num_.eval(pt.x()), den_.eval(pt.x()));
}

std::pair<UniPoly, UniPoly> AffineMap::derivative() const {
    UniPoly w = num_.derivative() * den_ - num_ * den_.derivative();
    UniPoly v = den_ * den_;
    if (w.is_zero()) return {w, UniPoly::constant(one(num_.field()))};
    UniPoly g = gcd(w, v);
    w = w.exact_div(g);
    v = v.exact_div(g);
    auto [vn, s] = v.normalized();
    return {w * s, vn};
}

std::string AffineMap::str() const {
    if (den_.degree() == 0 && den_.lead().is_one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

PhiBuild build_phi_checked(const BiForm& f) {
    if (f.degree() < 2) throw error("degree must be at least 2");
    if (!squarefree(f)) throw error("multiple roots");
    auto [fx, fy] = f.partials();
    ProjMap map = ProjMap::make(fy, -fx);
    bool degen = f.field().prime() && f.degree() % f.field().modulus == 0;
    if (!degen && !map.is_morphism()) throw error("not a morphism");
    return {map, degen};
}

ProjMap build_phi(const BiForm& f) { return build_phi_checked(f).map; }

AffineMap affine_form(const BiForm& f) {
    if (f.degree() < 2) throw error("degree must be at least 2");
    if (!squarefree(f)) throw error("multiple roots");
    UniPoly fd = f.dehomogenize();
    UniPoly fp = fd.derivative();
    if (fp.is_zero()) throw error("vanishing derivative");
    Scalar d(f.degree(), f.field());
    UniPoly num = UniPoly::x(f.field()) * fp - fd * d;
    return AffineMap(num, fp);
}

BiForm fixed_point_form(const ProjMap& phi) {
    // (Y*P - X*Q) dehomogenized is p(x) - x*q(x)
    UniPoly r = phi.p().dehomogenize() - UniPoly::x(phi.field()) * phi.q().dehomogenize();
    if (r.is_zero()) throw error("identity map: every point is fixed");
    return BiForm::homogenize(r, phi.degree() + 1);
}

ResDiscReport res_disc_check(const BiForm& f) {
    int d = f.degree();
    if (!squarefree(f)) throw error("multiple roots");
    auto [fx, fy] = f.partials();
    Scalar res = resultant(fy, -fx);
    Scalar disc = discriminant(f).value;
    Scalar sign = ((long(d) * (d - 1) / 2) % 2 == 0) ? one(f.field()) : Scalar(-1, f.field());
    Scalar expected = sign * Scalar(d, f.field()).pow(d - 2) * disc;
    return {res, disc, res == expected};
}

namespace {

ProjMap compose(const ProjMap& outer, const ProjMap& inner) {
    int target = outer.degree() * inner.degree();
    UniPoly a = inner.p().dehomogenize(), b = inner.q().dehomogenize();
    UniPoly pd = outer.p().eval_pair(a, b);
    UniPoly qd = outer.q().eval_pair(a, b);
    return ProjMap::make(BiForm::homogenize(pd, target), BiForm::homogenize(qd, target));
}

}  // namespace

ProjMap iterate(const ProjMap& phi, int n, long size_cap) {
    if (n < 1) throw error("iteration count must be positive");
    long e = phi.degree();
    ProjMap r = phi;
    for (int k = 2; k <= n; ++k) {
        long deg = e <= 1 ? e : checked_pow(e, k, size_cap);
        if (deg + 1 > size_cap)
            throw error("size cap exceeded: degree " + std::to_string(deg) + " at iterate " +
                        std::to_string(k));
        r = compose(phi, r);
    }
    return r;
}

std::vector<PsiStep> psi_sequence(const BiForm& f, int n, long size_cap) {
    if (n < 1) throw error("period must be positive");
    auto built = build_phi_checked(f);
    if (built.degenerate_identity) throw error("degenerate: identity");
    int d = f.degree();
    if (d == 2 && n >= 2) throw error("dynamically trivial degree-1 map");
    Field k = f.field();
    Scalar dscalar(d, k);

    auto [FX, FY] = f.partials();
    (void)FY;
    AffineMap af = affine_form(f);
    BiForm nh = BiForm::homogenize(af.num(), d - 1);
    BiForm dh = BiForm::homogenize(af.den(), d - 1);

    UniPoly xp = UniPoly::x(k);
    UniPoly a_prev = xp, b_prev = UniPoly::constant(one(k));
    UniPoly psi_hat_prev(k);
    std::vector<PsiStep> out;

    for (int step = 1; step <= n; ++step) {
        long deg_bound = checked_pow(d - 1, step, size_cap);
        if (deg_bound + 1 > size_cap)
            throw error("size cap exceeded: degree " + std::to_string(deg_bound) + " at period " +
                        std::to_string(step));

        UniPoly a_raw = nh.eval_pair(a_prev, b_prev);
        UniPoly b_raw = dh.eval_pair(a_prev, b_prev);
        auto [b_cur, s] = b_raw.normalized();
        UniPoly a_cur = a_raw * s;

        UniPoly fx_prev = FX.eval_pair(a_prev, b_prev);
        auto c = (-b_cur).scalar_ratio(fx_prev);
        if (!c) throw error("nonscalar c_n");

        UniPoly psi_hat(k);
        if (step == 1) {
            psi_hat = (a_cur - xp * b_cur) / dscalar;
        } else {
            UniPoly fab = f.eval_pair(a_prev, b_prev);
            psi_hat = (fab - psi_hat_prev * fx_prev).exact_div(b_prev) * *c;
        }

        bool inf_per = b_cur.degree() < deg_bound;  // formal top of B vanishes
        int expected = int(deg_bound) + 1 - (inf_per ? 1 : 0);
        if (psi_hat.degree() != expected)
            throw error("psi degree mismatch: got " + std::to_string(psi_hat.degree()) +
                        ", expected " + std::to_string(expected));

        out.push_back({step, psi_hat.monic(), psi_hat.lead(), *c, a_cur, b_cur, inf_per});
        a_prev = a_cur;
        b_prev = b_cur;
        psi_hat_prev = psi_hat;
    }
    return out;
}

Scalar multiplier(const ProjMap& phi, const ProjPoint& p, int n) {
    if (n < 1) throw error("period must be positive");
    if (phi.apply_n(p, n) != p) throw error("point is not periodic");
    Field k = phi.field();

    std::vector<ProjPoint> orbit;
    ProjPoint cur = p;
    bool hits_infinity = false;
    for (int i = 0; i < n; ++i) {
        orbit.push_back(cur);
        hits_infinity = hits_infinity || cur.at_infinity();
        cur = phi.apply(cur);
    }

    ProjMap work = phi;
    if (hits_infinity) {
        // conjugate by z -> 1/(z - c) for c outside the orbit
        long c = 0;
        auto in_orbit = [&](long t) {
            ProjPoint pt = ProjPoint::affine(Scalar(t, k));
            return std::any_of(orbit.begin(), orbit.end(), [&](const ProjPoint& o) { return o == pt; });
        };
        while (in_orbit(c)) ++c;
        Scalar cs(c, k);
        work = conjugate_linear(phi, cs, one(k), one(k), zero(k));
        for (auto& o : orbit)
            o = o.at_infinity() ? ProjPoint::affine(zero(k))
                                : ProjPoint::affine((o.x() - cs).inv());
    }

    AffineMap am = AffineMap::from_proj(work);
    auto [dn, dd] = am.derivative();
    Scalar m = one(k);
    for (const auto& o : orbit) m *= dn.eval(o.x()) / dd.eval(o.x());
    return m;
}

UniPoly poly_determinant(std::vector<std::vector<UniPoly>> m) {
    size_t n = m.size();
    if (n == 0) throw error("empty matrix");
    Field f = m[0][0].field();
    int sign = 1;
    UniPoly prev = UniPoly::constant(one(f));
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t piv = k;
        while (piv < n && m[piv][k].is_zero()) ++piv;
        if (piv == n) return UniPoly(f);
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).exact_div(prev);
            m[i][k] = UniPoly(f);
        }
        prev = m[k][k];
    }
    UniPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

namespace {

/// Res_x(psi(x), t*den(x) - num(x)), monic in t; the roots in t are the
/// values num/den at the roots of psi.
UniPoly value_charpoly(const UniPoly& psi, const UniPoly& num, const UniPoly& den) {
    Field f = psi.field();
    int dp = psi.degree();
    int dq = std::max(num.degree(), den.degree());
    if (dp < 1) return UniPoly::constant(one(f));
    size_t sz = size_t(dp + dq);
    std::vector<std::vector<UniPoly>> m(sz, std::vector<UniPoly>(sz, UniPoly(f)));
    for (int row = 0; row < dq; ++row)
        for (int j = 0; j <= dp; ++j)
            m[size_t(row)][size_t(row + j)] = UniPoly::constant(psi.coeff(dp - j));
    for (int row = 0; row < dp; ++row)
        for (int j = 0; j <= dq; ++j) {
            int i = dq - j;  // x-degree
            m[size_t(dq + row)][size_t(row + j)] = UniPoly({-num.coeff(i), den.coeff(i)}, f);
        }
    UniPoly det = poly_determinant(std::move(m));
    if (det.is_zero()) throw error("degenerate multiplier charpoly");
    return det.monic();
}

}  // namespace

PeriodicReport periodic_report(const BiForm& f, int n, long size_cap) {
    auto steps = psi_sequence(f, n, size_cap);
    const PsiStep& last = steps.back();
    ProjMap phi = build_phi(f);

    std::vector<std::pair<ProjPoint, Scalar>> pts;
    for (const auto& [r, mult] : rational_roots(last.psi)) {
        (void)mult;  // psi of a squarefree form has simple roots
        ProjPoint pt = ProjPoint::affine(r);
        pts.emplace_back(pt, multiplier(phi, pt, n));
    }
    if (last.infinity_periodic) {
        ProjPoint inf = ProjPoint::infinity(f.field());
        pts.emplace_back(inf, multiplier(phi, inf, n));
    }

    // reduced derivative of the n-th iterate, from A_n/B_n
    AffineMap iter_map(last.numer, last.denom);
    auto [dn, dd] = iter_map.derivative();
    UniPoly charpoly = value_charpoly(last.psi, dn, dd);

    return {n, last.psi, std::move(pts), std::move(charpoly), last.infinity_periodic};
}

UniPoly periodic_multiplier_charpoly(const ProjMap& phi, int n, long size_cap) {
    AffineMap am = AffineMap::from_proj(iterate(phi, n, size_cap));
    UniPoly fpf = am.num() - UniPoly::x(phi.field()) * am.den();
    if (fpf.is_zero()) throw error("identity map: every point is fixed");
    auto [dn, dd] = am.derivative();
    return value_charpoly(fpf.monic(), dn, dd);
}

NewtonMap modified_newton(const UniPoly& f, const Scalar& r) {
    if (r.is_zero()) throw error("r must be nonzero");
    if (f.degree() < 2) throw error("degree must be at least 2");
    if (gcd(f, f.derivative()).degree() != 0) throw error("multiple roots");
    Field k = f.field();
    UniPoly fp = f.derivative();
    AffineMap map(UniPoly::x(k) * fp - f * r, fp);
    Scalar degf(f.degree(), k);
    bool req = degf == r;
    std::optional<Scalar> lam;
    if (!req) lam = degf / (degf - r);
    return {std::move(map), r, lam, req};
}

Reconstruction reconstruct(const std::vector<ProjPoint>& points, const Scalar& r) {
    if (points.empty()) throw error("no points given");
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j]) throw error("duplicate points");
    Field k = points[0].field();
    if (r.is_zero()) throw error("r must be nonzero");

    BiForm form = BiForm::from_roots(points);
    bool has_inf =
        std::any_of(points.begin(), points.end(), [](const ProjPoint& p) { return p.at_infinity(); });

    if (!has_inf) {
        if (Scalar(long(points.size()), k) != r)
            throw error("r must equal the point count when infinity is not fixed");
        return {form, std::nullopt, build_phi(form)};
    }

    UniPoly f = UniPoly::constant(one(k));
    for (const auto& p : points)
        if (!p.at_infinity()) f = f * UniPoly({-p.x(), one(k)}, k);
    if (Scalar(f.degree(), k) == r)
        throw error("infinity cannot be fixed when r equals the degree");
    NewtonMap nm = modified_newton(f, r);
    return {form, f, nm.map.to_proj()};
}

ProjMap conjugate_linear(const ProjMap& phi, const Scalar& a, const Scalar& b, const Scalar& c,
                         const Scalar& d) {
    if ((a * d - b * c).is_zero()) throw error("singular matrix");
    BiForm ps = phi.p().substitute(a, b, c, d);
    BiForm qs = phi.q().substitute(a, b, c, d);
    // g^-1 (up to scale) applied to the pair
    UniPoly pd = ps.dehomogenize() * d - qs.dehomogenize() * b;
    UniPoly qd = qs.dehomogenize() * a - ps.dehomogenize() * c;
    if (pd.is_zero() || qd.is_zero()) throw error("degenerate conjugate");
    int deg = phi.degree();
    return ProjMap::make(BiForm::homogenize(pd, deg), BiForm::homogenize(qd, deg));
}

}  // namespace adyn

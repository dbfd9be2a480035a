#include "adyn/moduli.hpp"

#include <algorithm>
#include <numeric>

namespace adyn {

Moebius::Moebius(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d)
    : a_(a), b_(b), c_(c), d_(d) {
    require_same_field(a, b);
    require_same_field(a, c);
    require_same_field(a, d);
    if (det().is_zero()) throw error("singular matrix");
}

// Scaled so the first nonzero entry is 1; used for scale-free comparison
// and printing, while the stored representative keeps the caller's scaling
// (the invariance character chi depends on the representative).
std::array<Scalar, 4> Moebius::canonical() const {
    std::array<Scalar, 4> e = {a_, b_, c_, d_};
    for (const Scalar& v : e) {
        if (v.is_zero()) continue;
        Scalar s = v.inv();
        for (Scalar& w : e) w *= s;
        break;
    }
    return e;
}

Moebius Moebius::identity(Field f) { return Moebius(one(f), zero(f), zero(f), one(f)); }

Moebius Moebius::swap(Field f) { return Moebius(zero(f), one(f), one(f), zero(f)); }

Moebius Moebius::diag(const Scalar& u, const Scalar& v) {
    return Moebius(u, zero(u.field()), zero(u.field()), v);
}

namespace {

// z -> (0, 1, inf) for three distinct points
Moebius to_standard(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
    Field f = p.field();
    if (p == q || q == r || p == r) throw error("points must be distinct");
    if (p.at_infinity()) return Moebius(zero(f), q.x() - r.x(), one(f), -r.x());
    if (q.at_infinity()) return Moebius(one(f), -p.x(), one(f), -r.x());
    if (r.at_infinity()) return Moebius(one(f), -p.x(), zero(f), q.x() - p.x());
    return Moebius(q.x() - r.x(), -p.x() * (q.x() - r.x()), q.x() - p.x(), -r.x() * (q.x() - p.x()));
}

}  // namespace

Moebius Moebius::three_points(const ProjPoint& z1, const ProjPoint& z2, const ProjPoint& z3,
                              const ProjPoint& w1, const ProjPoint& w2, const ProjPoint& w3) {
    return to_standard(w1, w2, w3).inverse() * to_standard(z1, z2, z3);
}

Moebius Moebius::inverse() const { return Moebius(d_, -b_, -c_, a_); }

Moebius Moebius::operator*(const Moebius& h) const {
    return Moebius(a_ * h.a_ + b_ * h.c_, a_ * h.b_ + b_ * h.d_, c_ * h.a_ + d_ * h.c_,
                   c_ * h.b_ + d_ * h.d_);
}

ProjPoint Moebius::apply(const ProjPoint& p) const {
    return ProjPoint(a_ * p.x() + b_ * p.y(), c_ * p.x() + d_ * p.y());
}

bool Moebius::operator==(const Moebius& h) const { return canonical() == h.canonical(); }

std::string Moebius::str() const {
    auto e = canonical();
    return "[" + e[0].str() + ", " + e[1].str() + "; " + e[2].str() + ", " + e[3].str() + "]";
}

ProjMap conjugate_map(const ProjMap& phi, const Moebius& g) {
    return conjugate_linear(phi, g.a(), g.b(), g.c(), g.d());
}

BiForm conjugate_form(const BiForm& f, const Moebius& g) {
    return f.substitute(g.a(), g.b(), g.c(), g.d()).normalized().first;
}

NormalForm normal_form(const BiForm& f) {
    int d = f.degree();
    if (d < 3) throw error("degree must be at least 3");
    if (!squarefree(f)) throw error("multiple roots");
    auto roots = rational_roots(f);
    int found = 0;
    for (const auto& r : roots) found += r.multiplicity;
    if (found < d) {
        UniPoly rem = f.dehomogenize();
        Field k = f.field();
        for (const auto& r : roots)
            if (!r.point.at_infinity())
                rem = rem.exact_div(UniPoly({-r.point.x(), one(k)}, k));
        throw error("irrational fixed points: unsplit factor " + rem.monic().str());
    }
    // canonical order: affine ascending, infinity last (rational_roots sorts so)
    std::vector<ProjPoint> pts;
    for (const auto& r : roots) pts.push_back(r.point);
    Field k = f.field();
    Moebius g = Moebius::three_points(pts[0], pts[1], pts[2], ProjPoint::affine(zero(k)),
                                      ProjPoint::affine(one(k)), ProjPoint::infinity(k));
    std::vector<Scalar> alphas;
    for (size_t i = 3; i < pts.size(); ++i) alphas.push_back(g.apply(pts[i]).x());
    // the change of coordinates acting on the form is g^-1
    return {std::move(alphas), g};
}

std::vector<Scalar> cross_ratio_orbit(const Scalar& alpha) {
    Field k = alpha.field();
    Scalar u = one(k);
    std::vector<Scalar> all = {alpha, u - alpha, alpha.inv(), (u - alpha).inv(),
                               (alpha - u) / alpha, alpha / (alpha - u)};
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

AlphaFamily::AlphaFamily(const Scalar& a) : alpha(a) {
    if (a.is_zero() || a.is_one()) throw error("alpha must avoid 0 and 1");
}

std::pair<BiForm, ProjMap> alpha_family_form(const AlphaFamily& fam) {
    const Scalar& al = fam.alpha;
    Field k = al.field();
    Scalar z = zero(k), o = one(k), ap1 = al + o;
    BiForm f({z, o, -ap1, al, z}, k);
    BiForm p({o, -(ap1 + ap1), al * Scalar(3, k), z}, k);
    BiForm q({z, Scalar(-3, k), ap1 + ap1, -al}, k);
    return {f, ProjMap::make(p, q)};
}

TwoPeriodic two_periodic_points(const AlphaFamily& fam) {
    const Scalar& al = fam.alpha;
    Field k = al.field();
    Scalar o = one(k), two(2, k);
    std::vector<UniPoly> quads = {
        UniPoly({-al, zero(k), o}, k),                 // x^2 - a
        UniPoly({al, -two, o}, k),                     // (x-1)^2 - (1-a)
        UniPoly({al, -two * al, o}, k),                // (x-a)^2 - (a^2-a)
    };
    std::vector<ProjPoint> pts;
    std::vector<std::pair<Scalar, Scalar>> centers = {
        {zero(k), al}, {o, o - al}, {al, al * al - al}};
    for (const auto& [center, rad] : centers) {
        auto s = rad.sqrt_exact();
        if (!s || s->is_zero()) continue;
        pts.push_back(ProjPoint::affine(center + *s));
        pts.push_back(ProjPoint::affine(center - *s));
    }
    std::sort(pts.begin(), pts.end());
    UniPoly fixed = UniPoly({zero(k), o}, k) * UniPoly({-o, o}, k) * UniPoly({-al, o}, k);
    UniPoly psi2 = (quads[0] * quads[1] * quads[2] * fixed).monic();
    return {std::move(quads), std::move(pts), std::move(psi2)};
}

std::vector<Scalar> pythagorean_alphas(long max_hypotenuse) {
    if (max_hypotenuse < 5) throw error("bound must be at least 5");
    std::vector<Scalar> out;
    for (long q = 2; q <= max_hypotenuse; ++q) {
        for (long p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            mpz_class rem = mpz_class(q) * q - mpz_class(p) * p;
            if (!mpz_perfect_square_p(rem.get_mpz_t())) continue;
            out.emplace_back(mpq_class(mpz_class(p) * p, mpz_class(q) * q));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_automorphism(const ProjMap& phi, const Moebius& g) {
    return conjugate_map(phi, g) == phi;
}

std::optional<Scalar> invariance_check(const BiForm& f, const Moebius& g) {
    BiForm fg = f.substitute(g.a(), g.b(), g.c(), g.d());
    return fg.scalar_ratio(f);
}

}  // namespace adyn

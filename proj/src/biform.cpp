#include "adyn/biform.hpp"

#include <algorithm>

#include "adyn/factor.hpp"

namespace adyn {

ProjPoint::ProjPoint(const Scalar& x, const Scalar& y) : x_(x), y_(y) {
    require_same_field(x, y);
    if (x_.is_zero() && y_.is_zero()) throw error("(0,0) is not a projective point");
    if (!y_.is_zero()) {
        x_ = x_ / y_;
        y_ = one(x_.field());
    } else {
        x_ = one(x_.field());
    }
}

bool ProjPoint::operator<(const ProjPoint& b) const {
    if (at_infinity()) return false;
    if (b.at_infinity()) return true;
    return x_ < b.x_;
}

std::string ProjPoint::str() const {
    if (at_infinity()) return "inf";
    return x_.str();
}

BiForm::BiForm(std::vector<Scalar> coeffs, Field f) : coeffs_(std::move(coeffs)), field_(f) {
    if (coeffs_.empty()) throw error("binary form needs at least one coefficient");
    bool nonzero = false;
    for (const auto& c : coeffs_) {
        if (!(c.field() == field_)) throw error("mixed-field coefficients");
        nonzero = nonzero || !c.is_zero();
    }
    if (!nonzero) throw error("zero binary form");
}

BiForm BiForm::from_ints(std::initializer_list<long> coeffs, Field f) {
    std::vector<Scalar> v;
    for (long c : coeffs) v.emplace_back(c, f);
    return BiForm(std::move(v), f);
}

BiForm BiForm::homogenize(const UniPoly& f, int d) {
    if (f.is_zero()) throw error("cannot homogenize the zero polynomial");
    if (f.degree() > d) throw error("degree exceeds homogenization target");
    std::vector<Scalar> v;
    v.reserve(size_t(d) + 1);
    for (int j = d; j >= 0; --j) v.push_back(f.coeff(j));
    return BiForm(std::move(v), f.field());
}

BiForm BiForm::from_roots(const std::vector<ProjPoint>& pts) {
    if (pts.empty()) throw error("no points given");
    Field f = pts[0].field();
    BiForm r({pts[0].y(), -pts[0].x()}, f);
    for (size_t i = 1; i < pts.size(); ++i) r = r * BiForm({pts[i].y(), -pts[i].x()}, f);
    return r;
}

Scalar BiForm::a(int j) const {
    int d = degree();
    if (j < 0 || j > d) return zero(field_);
    return coeffs_[size_t(d - j)];
}

UniPoly BiForm::dehomogenize() const {
    std::vector<Scalar> v(coeffs_.rbegin(), coeffs_.rend());
    return UniPoly(std::move(v), field_);
}

Scalar BiForm::eval(const Scalar& x, const Scalar& y) const {
    Scalar r = zero(field_);
    int d = degree();
    for (int j = d; j >= 0; --j) r += a(j) * x.pow(j) * y.pow(d - j);
    return r;
}

UniPoly BiForm::eval_pair(const UniPoly& A, const UniPoly& B) const {
    int d = degree();
    UniPoly r = UniPoly::constant(a(d));
    for (int j = d - 1; j >= 0; --j) r = r * A + UniPoly::constant(a(j)) * B.pow(d - j);
    return r;
}

BiForm BiForm::substitute(const Scalar& sa, const Scalar& sb, const Scalar& sc,
                          const Scalar& sd) const {
    int d = degree();
    UniPoly u({sb, sa}, field_);  // a x + b  (X -> a X + b Y, dehomogenized)
    UniPoly v({sd, sc}, field_);  // c x + d
    UniPoly r(field_);
    for (int j = d; j >= 0; --j) r = r + UniPoly::constant(a(j)) * u.pow(j) * v.pow(d - j);
    if (r.is_zero()) throw error("degenerate substitution");
    return homogenize(r, d);
}

BiForm BiForm::swap_xy() const {
    std::vector<Scalar> v(coeffs_.rbegin(), coeffs_.rend());
    return BiForm(std::move(v), field_);
}

std::pair<BiForm, BiForm> BiForm::partials() const {
    int d = degree();
    if (d < 1) throw error("degree must be at least 1");
    std::vector<Scalar> fx, fy;
    fx.reserve(size_t(d));
    fy.reserve(size_t(d));
    for (int j = d; j >= 1; --j) fx.push_back(a(j) * Scalar(j, field_));
    for (int j = d - 1; j >= 0; --j) fy.push_back(a(j) * Scalar(d - j, field_));
    auto make_partial = [&](std::vector<Scalar> v) {
        bool nz = false;
        for (const auto& c : v) nz = nz || !c.is_zero();
        if (!nz) throw error("vanishing partial derivative");
        return BiForm(std::move(v), field_);
    };
    return {make_partial(std::move(fx)), make_partial(std::move(fy))};
}

BiForm operator*(const BiForm& a, const BiForm& b) {
    UniPoly p = a.dehomogenize() * b.dehomogenize();
    return BiForm::homogenize(p, a.degree() + b.degree());
}

BiForm BiForm::operator*(const Scalar& c) const {
    if (c.is_zero()) throw error("scaling a form by zero");
    std::vector<Scalar> v;
    v.reserve(coeffs_.size());
    for (const auto& x : coeffs_) v.push_back(x * c);
    return BiForm(std::move(v), field_);
}

BiForm BiForm::exact_div(const BiForm& d) const {
    UniPoly q = dehomogenize().exact_div(d.dehomogenize());
    int target = degree() - d.degree();
    if (q.degree() > target) throw error("inexact division");
    return homogenize(q, target);
}

bool BiForm::operator==(const BiForm& b) const {
    if (!(field_ == b.field_) || coeffs_.size() != b.coeffs_.size()) return false;
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != b.coeffs_[i]) return false;
    return true;
}

std::pair<BiForm, Scalar> BiForm::normalized() const {
    auto [p, s] = dehomogenize().normalized();
    if (!field_.prime()) {
        // positive first coefficient scanning a_d..a_0
        for (const auto& c : coeffs_) {
            if (c.is_zero()) continue;
            if ((c * s).value() < 0) s = -s;
            break;
        }
    } else {
        // first nonzero coefficient becomes 1
        for (const auto& c : coeffs_) {
            if (c.is_zero()) continue;
            s = c.inv();
            break;
        }
    }
    return {*this * s, s};
}

std::optional<Scalar> BiForm::scalar_ratio(const BiForm& b) const {
    if (degree() != b.degree()) return std::nullopt;
    return dehomogenize().scalar_ratio(b.dehomogenize());
}

BiForm::MonomialSplit BiForm::monomial_split() const {
    UniPoly f = dehomogenize();
    int d = degree();
    int ym = d - f.degree();
    int xm = 0;
    while (f.coeff(xm).is_zero()) ++xm;
    UniPoly g = f;
    for (int i = 0; i < xm; ++i) g = g.exact_div(UniPoly::x(field_));
    return {xm, ym, homogenize(g, d - xm - ym)};
}

std::string BiForm::str() const {
    int d = degree();
    std::string out;
    for (int j = d; j >= 0; --j) {
        Scalar c = a(j);
        if (c.is_zero()) continue;
        bool neg = !field_.prime() && c.value() < 0;
        Scalar mag = neg ? -c : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        bool unit = mag.is_one() && d > 0;
        if (!unit) out += mag.str();
        auto var = [&](const char* name, int e) {
            if (e == 0) return std::string();
            std::string s = name;
            if (e > 1) s += "^" + std::to_string(e);
            return s;
        };
        std::string xs = var("X", j), ys = var("Y", d - j);
        if (!xs.empty()) {
            if (!unit) out += "*";
            out += xs;
        }
        if (!ys.empty()) {
            if (!xs.empty() || !unit) out += "*";
            out += ys;
        }
    }
    return out;
}

Scalar resultant(const BiForm& p, const BiForm& q) {
    return resultant(p.dehomogenize(), q.dehomogenize(), p.degree(), q.degree());
}

namespace {

Scalar disc_leading(const BiForm& f) {
    int d = f.degree();
    // F_X dehomogenized is f'(x); this stays valid when F_X vanishes in char p
    Scalar res = resultant(f.dehomogenize(), f.dehomogenize().derivative(), d, d - 1);
    Scalar sign = ((long(d) * (d - 1) / 2) % 2 == 0) ? one(f.field()) : Scalar(-1, f.field());
    return sign * res / f.a(d);
}

}  // namespace

DiscResult discriminant(const BiForm& f, bool fallback) {
    int d = f.degree();
    if (d < 1) throw error("degree must be at least 1");
    if (d == 1) return {one(f.field()), false};
    if (!f.a(d).is_zero()) return {disc_leading(f), false};
    if (!fallback) throw error("leading coefficient zero");
    BiForm s = f.swap_xy();
    if (!s.a(d).is_zero()) return {disc_leading(s), false};
    // both ends vanish: X and Y both divide F
    auto split = f.monomial_split();
    if (split.x_mult > 1 || split.y_mult > 1) return {zero(f.field()), true};
    // the discriminant is invariant under determinant-1 substitutions, so a
    // shear (X, Y) -> (X, tX + Y) with F(1, t) != 0 restores a usable leading
    // coefficient without changing the value
    Field k = f.field();
    long t_max = k.prime() ? k.modulus : long(d) + 2;
    for (long t = 1; t < t_max; ++t) {
        BiForm sheared = f.substitute(one(k), zero(k), Scalar(t, k), one(k));
        if (!sheared.a(d).is_zero()) return {disc_leading(sheared), true};
    }
    // only reachable over F_p with p <= d, where every shear direction
    // vanishes; report the reduced discriminant as a last resort
    if (split.reduced.degree() < 1) return {zero(k), true};
    return {discriminant(split.reduced, true).value, true};
}

bool squarefree(const BiForm& f) {
    auto split = f.monomial_split();
    if (split.x_mult > 1 || split.y_mult > 1) return false;
    if (split.reduced.degree() == 0) return true;
    return !discriminant(f).value.is_zero();
}

std::vector<std::pair<Scalar, int>> rational_roots(const UniPoly& f) {
    if (f.is_zero()) throw error("roots of the zero polynomial");
    Field k = f.field();
    std::vector<std::pair<Scalar, int>> out;
    auto record = [&](const Scalar& r, UniPoly& g) {
        int mult = 0;
        UniPoly lin({-r, one(k)}, k);
        while (!g.is_zero() && g.eval(r).is_zero()) {
            g = g.exact_div(lin);
            ++mult;
        }
        if (mult > 0) out.emplace_back(r, mult);
    };
    UniPoly g = f;
    if (k.prime()) {
        for (long t = 0; t < k.modulus; ++t) record(Scalar(t, k), g);
    } else {
        record(zero(k), g);
        if (g.degree() >= 1) {
            auto [prim, s] = g.normalized();
            (void)s;
            mpz_class c0 = prim.coeff(0).num();
            mpz_class cl = prim.lead().num();
            for (const auto& p : divisors(c0)) {
                for (const auto& q : divisors(cl)) {
                    mpz_class gg;
                    mpz_gcd(gg.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
                    if (gg != 1) continue;
                    for (int sign : {1, -1}) {
                        Scalar cand(mpq_class(sign * p, q), k);
                        if (!g.is_zero() && g.eval(cand).is_zero()) record(cand, g);
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::vector<RootWithMult> rational_roots(const BiForm& f) {
    std::vector<RootWithMult> out;
    UniPoly g = f.dehomogenize();
    for (const auto& [r, m] : rational_roots(g)) out.push_back({ProjPoint::affine(r), m});
    int inf_mult = f.degree() - g.degree();
    if (inf_mult > 0) out.push_back({ProjPoint::infinity(f.field()), inf_mult});
    return out;
}

}  // namespace adyn

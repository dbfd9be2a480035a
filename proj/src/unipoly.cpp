#include "adyn/unipoly.hpp"

#include <algorithm>

namespace adyn {

UniPoly::UniPoly(std::vector<Scalar> coeffs, Field f) : coeffs_(std::move(coeffs)), field_(f) {
    for (const auto& c : coeffs_)
        if (!(c.field() == field_)) throw error("mixed-field coefficients");
    trim();
}

UniPoly UniPoly::from_ints(std::initializer_list<long> coeffs, Field f) {
    std::vector<Scalar> v;
    for (long c : coeffs) v.emplace_back(c, f);
    return UniPoly(std::move(v), f);
}

UniPoly UniPoly::constant(const Scalar& c) { return UniPoly({c}, c.field()); }

UniPoly UniPoly::x(Field f) { return from_ints({0, 1}, f); }

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar UniPoly::coeff(int i) const {
    if (i < 0 || i >= int(coeffs_.size())) return zero(field_);
    return coeffs_[i];
}

Scalar UniPoly::lead() const {
    if (is_zero()) throw error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

UniPoly UniPoly::operator-() const {
    std::vector<Scalar> r;
    r.reserve(coeffs_.size());
    for (const auto& c : coeffs_) r.push_back(-c);
    return UniPoly(std::move(r), field_);
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    if (!(a.field_ == b.field_)) throw error("mixed-field arithmetic");
    std::vector<Scalar> r(std::max(a.coeffs_.size(), b.coeffs_.size()), zero(a.field_));
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(int(i)) + b.coeff(int(i));
    return UniPoly(std::move(r), a.field_);
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (!(a.field_ == b.field_)) throw error("mixed-field arithmetic");
    if (a.is_zero() || b.is_zero()) return UniPoly(a.field_);
    std::vector<Scalar> r(a.coeffs_.size() + b.coeffs_.size() - 1, zero(a.field_));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(r), a.field_);
}

UniPoly UniPoly::operator*(const Scalar& c) const {
    std::vector<Scalar> r;
    r.reserve(coeffs_.size());
    for (const auto& a : coeffs_) r.push_back(a * c);
    return UniPoly(std::move(r), field_);
}

bool UniPoly::operator==(const UniPoly& b) const {
    if (!(field_ == b.field_) || coeffs_.size() != b.coeffs_.size()) return false;
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != b.coeffs_[i]) return false;
    return true;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    if (d.is_zero()) throw error("division by zero polynomial");
    UniPoly q(field_), r = *this;
    Scalar dl = d.lead();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int k = r.degree() - d.degree();
        Scalar c = r.lead() / dl;
        q = q + UniPoly::constant(c).times_x(k);
        r = r - (d * c).times_x(k);
    }
    return {q, r};
}

UniPoly UniPoly::exact_div(const UniPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw error("inexact division");
    return q;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly(field_);
    std::vector<Scalar> r;
    r.reserve(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) r.push_back(coeffs_[i] * Scalar(long(i), field_));
    return UniPoly(std::move(r), field_);
}

Scalar UniPoly::eval(const Scalar& x) const {
    Scalar r = zero(field_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

UniPoly UniPoly::shift_scale(const Scalar& a, const Scalar& b) const {
    UniPoly arg({b, a}, field_);
    UniPoly r(field_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        r = r * arg + UniPoly::constant(*it);
    return r;
}

UniPoly UniPoly::times_x(int k) const {
    if (is_zero()) return *this;
    std::vector<Scalar> r(coeffs_.size() + size_t(k), zero(field_));
    for (size_t i = 0; i < coeffs_.size(); ++i) r[i + size_t(k)] = coeffs_[i];
    return UniPoly(std::move(r), field_);
}

UniPoly UniPoly::pow(int e) const {
    if (e < 0) throw error("negative polynomial power");
    UniPoly r = UniPoly::constant(one(field_)), b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        if (e >>= 1) b = b * b;
    }
    return r;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return *this * lead().inv();
}

std::pair<UniPoly, Scalar> UniPoly::normalized() const {
    if (is_zero()) return {*this, one(field_)};
    if (field_.prime()) {
        Scalar s = lead().inv();
        return {*this * s, s};
    }
    // scale to integer coefficients with content 1 and positive lead
    mpz_class den_lcm(1), num_gcd(0);
    for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    for (const auto& c : coeffs_) {
        mpz_class n = c.num() * (den_lcm / c.den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    mpq_class s(den_lcm, num_gcd);
    s.canonicalize();
    Scalar sc(s, field_);
    if (lead().value() * s < 0) sc = -sc;
    return {*this * sc, sc};
}

std::optional<Scalar> UniPoly::scalar_ratio(const UniPoly& b) const {
    if (is_zero() || b.is_zero()) return std::nullopt;
    if (degree() != b.degree()) return std::nullopt;
    Scalar r = lead() / b.lead();
    if (*this == b * r) return r;
    return std::nullopt;
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        Scalar c = coeff(i);
        if (c.is_zero()) continue;
        bool neg = !field_.prime() && c.value() < 0;
        Scalar mag = neg ? -c : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        bool unit = mag.is_one() && i > 0;
        if (!unit) out += mag.str();
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

UniPoly gcd(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() && q.is_zero()) throw error("gcd of two zero polynomials");
    UniPoly a = p, b = q;
    while (!b.is_zero()) {
        auto [quot, rem] = a.divmod(b);
        (void)quot;
        a = b;
        b = rem;
    }
    return a.monic();
}

Scalar determinant(std::vector<std::vector<Scalar>> m) {
    size_t n = m.size();
    if (n == 0) throw error("empty matrix");
    Field f = m[0][0].field();
    Scalar det = one(f);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) return zero(f);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Scalar inv = m[col][col].inv();
        for (size_t row = col + 1; row < n; ++row) {
            if (m[row][col].is_zero()) continue;
            Scalar factor = m[row][col] * inv;
            for (size_t j = col; j < n; ++j) m[row][j] -= factor * m[col][j];
        }
    }
    return det;
}

Scalar resultant(const UniPoly& p, const UniPoly& q, int dp, int dq) {
    Field f = p.field();
    if (dp < 0 || dq < 0) throw error("resultant needs nonnegative formal degrees");
    if (dp == 0 && dq == 0) return one(f);
    size_t n = size_t(dp + dq);
    std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n, zero(f)));
    for (int row = 0; row < dq; ++row)
        for (int j = 0; j <= dp; ++j) m[size_t(row)][size_t(row + j)] = p.coeff(dp - j);
    for (int row = 0; row < dp; ++row)
        for (int j = 0; j <= dq; ++j) m[size_t(dq + row)][size_t(row + j)] = q.coeff(dq - j);
    return determinant(std::move(m));
}

}  // namespace adyn

#ifndef ADYN_BIFORM_HPP
#define ADYN_BIFORM_HPP

#include <utility>
#include <vector>

#include "adyn/unipoly.hpp"

namespace adyn {

/// Point of P^1 in canonical form: (x, 1) or (1, 0) for infinity.
class ProjPoint {
public:
    ProjPoint(const Scalar& x, const Scalar& y);
    static ProjPoint affine(const Scalar& x) { return ProjPoint(x, one(x.field())); }
    static ProjPoint infinity(Field f) { return ProjPoint(one(f), zero(f)); }

    const Scalar& x() const { return x_; }
    const Scalar& y() const { return y_; }
    bool at_infinity() const { return y_.is_zero(); }
    const Field& field() const { return x_.field(); }

    bool operator==(const ProjPoint& b) const { return x_ == b.x_ && y_ == b.y_; }
    bool operator!=(const ProjPoint& b) const { return !(*this == b); }
    /// Affine points by value ascending, infinity last.
    bool operator<(const ProjPoint& b) const;

    std::string str() const;

private:
    Scalar x_, y_;
};

/// Homogeneous binary form a_d X^d + a_{d-1} X^{d-1} Y + ... + a_0 Y^d.
/// Stored highest X-power first; exactly d+1 coefficients, not all zero.
class BiForm {
public:
    /// coeffs = a_d, a_{d-1}, ..., a_0.
    BiForm(std::vector<Scalar> coeffs, Field f);
    static BiForm from_ints(std::initializer_list<long> coeffs, Field f = rationals());
    /// Homogenize a univariate polynomial to total degree d (f.degree() <= d).
    static BiForm homogenize(const UniPoly& f, int d);
    /// prod over points of (y_i X - x_i Y).
    static BiForm from_roots(const std::vector<ProjPoint>& pts);

    int degree() const { return int(coeffs_.size()) - 1; }
    const Field& field() const { return field_; }
    /// Coefficient of X^j Y^(d-j).
    Scalar a(int j) const;
    const std::vector<Scalar>& coeffs() const { return coeffs_; }

    UniPoly dehomogenize() const;  // F(x, 1)
    Scalar eval(const Scalar& x, const Scalar& y) const;
    bool vanishes_at(const ProjPoint& p) const { return eval(p.x(), p.y()).is_zero(); }
    /// F(A(x), B(x)) as a univariate polynomial.
    UniPoly eval_pair(const UniPoly& A, const UniPoly& B) const;
    /// F(aX + bY, cX + dY).
    BiForm substitute(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) const;
    BiForm swap_xy() const;

    std::pair<BiForm, BiForm> partials() const;  // (F_X, F_Y)

    friend BiForm operator*(const BiForm& a, const BiForm& b);
    BiForm operator*(const Scalar& c) const;
    BiForm operator-() const { return *this * Scalar(-1, field_); }
    BiForm exact_div(const BiForm& d) const;
    bool operator==(const BiForm& b) const;
    bool operator!=(const BiForm& b) const { return !(*this == b); }

    /// Content-1 / positive-first-coefficient normalization (monic-like over
    /// F_p); returns normalized form and the scalar applied.
    std::pair<BiForm, Scalar> normalized() const;
    std::optional<Scalar> scalar_ratio(const BiForm& b) const;

    /// F = X^xm * Y^ym * H with H divisible by neither variable.
    struct MonomialSplit;
    MonomialSplit monomial_split() const;

    std::string str() const;

private:
    std::vector<Scalar> coeffs_;  // coeffs_[i] = a_{d-i}
    Field field_;
};

struct BiForm::MonomialSplit {
    int x_mult, y_mult;
    BiForm reduced;
};

/// Sylvester resultant at the forms' own degrees.
Scalar resultant(const BiForm& p, const BiForm& q);

struct DiscResult {
    Scalar value;
    bool reduced_by_monomial = false;  // both end coefficients vanished; a
                                       // determinant-1 shear restored them
};

/// Disc(F) = (-1)^(d(d-1)/2) Res(F, F_X) / a_d, with a swap / shear fallback
/// when a_d = 0 (enabled by default).
DiscResult discriminant(const BiForm& f, bool fallback = true);

bool squarefree(const BiForm& f);

struct RootWithMult {
    ProjPoint point;
    int multiplicity;
};

/// All K-rational projective roots with multiplicities, sorted.
std::vector<RootWithMult> rational_roots(const BiForm& f);
std::vector<std::pair<Scalar, int>> rational_roots(const UniPoly& f);

}  // namespace adyn

#endif

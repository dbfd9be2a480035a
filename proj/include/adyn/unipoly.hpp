#ifndef ADYN_UNIPOLY_HPP
#define ADYN_UNIPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "adyn/scalar.hpp"

namespace adyn {

/// Univariate polynomial over an exact field.  coeff(i) is the coefficient
/// of x^i; the highest stored coefficient is nonzero unless the polynomial
/// is zero.  The zero polynomial has degree kZeroDeg, which never enters
/// degree arithmetic silently.
class UniPoly {
public:
    static constexpr int kZeroDeg = -0x40000000;  // -infinity sentinel

    explicit UniPoly(Field f = rationals()) : field_(f) {}
    UniPoly(std::vector<Scalar> coeffs, Field f);
    /// Convenience: integer coefficients, index = power of x.
    static UniPoly from_ints(std::initializer_list<long> coeffs, Field f = rationals());
    static UniPoly constant(const Scalar& c);
    static UniPoly x(Field f = rationals());

    const Field& field() const { return field_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return coeffs_.empty() ? kZeroDeg : int(coeffs_.size()) - 1; }
    Scalar coeff(int i) const;
    Scalar lead() const;
    const std::vector<Scalar>& coeffs() const { return coeffs_; }

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly operator*(const Scalar& c) const;
    UniPoly operator/(const Scalar& c) const { return *this * c.inv(); }
    bool operator==(const UniPoly& b) const;
    bool operator!=(const UniPoly& b) const { return !(*this == b); }

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
    /// Exact quotient; throws "inexact division" if the remainder is nonzero.
    UniPoly exact_div(const UniPoly& d) const;

    UniPoly derivative() const;
    Scalar eval(const Scalar& x) const;
    /// Substitute x -> a*x + b.
    UniPoly shift_scale(const Scalar& a, const Scalar& b) const;
    UniPoly times_x(int k) const;  // multiply by x^k
    UniPoly pow(int e) const;

    UniPoly monic() const;
    /// Content-1 / positive-leading normalization over Q; monic over F_p.
    /// Returns the normalized polynomial and the scalar s with result = s * this.
    std::pair<UniPoly, Scalar> normalized() const;

    /// True iff the value is a nonzero constant times `b`; returns the ratio.
    std::optional<Scalar> scalar_ratio(const UniPoly& b) const;

    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Scalar> coeffs_;  // coeffs_[i] = coefficient of x^i
    Field field_;
};

UniPoly gcd(const UniPoly& p, const UniPoly& q);

/// Determinant of a square Scalar matrix (row-major), by fraction-exact
/// Gaussian elimination.
Scalar determinant(std::vector<std::vector<Scalar>> m);

/// Sylvester resultant of p and q at the given formal degrees (leading
/// coefficients may be zero).  Formal degrees default to the true degrees.
Scalar resultant(const UniPoly& p, const UniPoly& q, int dp, int dq);

}  // namespace adyn

#endif

#ifndef ADYN_SCALAR_HPP
#define ADYN_SCALAR_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace adyn {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Coefficient field: the rationals (modulus == 0) or F_p for prime p.
struct Field {
    long modulus = 0;

    bool prime() const { return modulus != 0; }
    bool operator==(const Field&) const = default;
};

inline Field rationals() { return Field{0}; }
Field prime_field(long p);

/// Exact field element.  Rational values are kept in lowest terms with
/// positive denominator; prime-field values are reduced to [0, p).
class Scalar {
public:
    Scalar() : v_(0), field_{} {}
    explicit Scalar(long n, Field f = rationals()) : v_(n), field_(f) { reduce(); }
    Scalar(mpq_class v, Field f = rationals()) : v_(std::move(v)), field_(f) { reduce(); }
    Scalar(long num, long den);

    const mpq_class& value() const { return v_; }
    const Field& field() const { return field_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }

    Scalar operator-() const;
    Scalar inv() const;
    Scalar pow(long e) const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

    bool operator==(const Scalar& b) const;
    bool operator!=(const Scalar& b) const { return !(*this == b); }
    /// Ordering of the underlying representatives; total over Q, and over
    /// the residues [0,p) in a prime field.
    bool operator<(const Scalar& b) const;

    /// Exact square root when the value is a perfect square in the field.
    std::optional<Scalar> sqrt_exact() const;

    std::string str() const;

private:
    void reduce();
    mpq_class v_;
    Field field_;
};

Scalar zero(Field f);
Scalar one(Field f);
void require_same_field(const Scalar& a, const Scalar& b);

}  // namespace adyn

#endif

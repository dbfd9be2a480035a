#include "adyn/scalar.hpp"

namespace adyn {

Field prime_field(long p) {
    if (p < 2) throw error("modulus must be a prime >= 2");
    mpz_class m(p);
    if (mpz_probab_prime_p(m.get_mpz_t(), 30) == 0)
        throw error("modulus " + std::to_string(p) + " is not prime");
    return Field{p};
}

Scalar::Scalar(long num, long den) : v_(num, den), field_{} {
    if (den == 0) throw error("zero denominator");
    v_.canonicalize();
}

void Scalar::reduce() {
    v_.canonicalize();
    if (field_.prime()) {
        if (v_.get_den() != 1) {
            // a/b mod p: multiply by the inverse of b
            mpz_class inv, p(field_.modulus);
            mpz_class d = v_.get_den() % p;
            if (d == 0 || mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t()) == 0)
                throw error("characteristic collision: division by zero mod " +
                            std::to_string(field_.modulus));
            v_ = mpq_class(v_.get_num() * inv);
        }
        mpz_class r = v_.get_num() % field_.modulus;
        if (r < 0) r += field_.modulus;
        v_ = mpq_class(r);
    }
}

Scalar Scalar::operator-() const { return Scalar(mpq_class(-v_), field_); }

Scalar Scalar::inv() const {
    if (is_zero()) throw error(field_.prime()
                                   ? "characteristic collision: division by zero mod " +
                                         std::to_string(field_.modulus)
                                   : "division by zero");
    return Scalar(mpq_class(1) / v_, field_);
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Scalar r = one(field_), b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

void require_same_field(const Scalar& a, const Scalar& b) {
    if (!(a.field() == b.field()))
        throw error("mixed-field arithmetic");
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    return Scalar(a.v_ + b.v_, a.field_);
}
Scalar operator-(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    return Scalar(a.v_ - b.v_, a.field_);
}
Scalar operator*(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    return Scalar(a.v_ * b.v_, a.field_);
}
Scalar operator/(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    return a * b.inv();
}

bool Scalar::operator==(const Scalar& b) const {
    require_same_field(*this, b);
    return v_ == b.v_;
}

bool Scalar::operator<(const Scalar& b) const {
    require_same_field(*this, b);
    return v_ < b.v_;
}

std::optional<Scalar> Scalar::sqrt_exact() const {
    if (field_.prime()) {
        for (long t = 0; t < field_.modulus; ++t) {
            Scalar s(t, field_);
            if (s * s == *this) return s;
        }
        return std::nullopt;
    }
    if (v_ < 0) return std::nullopt;
    mpz_class n = v_.get_num(), d = v_.get_den(), rn, rd;
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Scalar(mpq_class(rn, rd), field_);
}

std::string Scalar::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Scalar zero(Field f) { return Scalar(0, f); }
Scalar one(Field f) { return Scalar(1, f); }

}  // namespace adyn

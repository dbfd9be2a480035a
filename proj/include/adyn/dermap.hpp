#ifndef ADYN_DERMAP_HPP
#define ADYN_DERMAP_HPP

#include <optional>
#include <vector>

#include "adyn/biform.hpp"

namespace adyn {

constexpr long kDefaultSizeCap = 10000;  // max coefficient count per iterate

/// Self-map of P^1 given by a coprime pair of equal-degree forms,
/// normalized so that scalar multiples compare equal.
class ProjMap {
public:
    /// Removes any common factor and the coefficient content.
    static ProjMap make(const BiForm& p, const BiForm& q);

    const BiForm& p() const { return p_; }
    const BiForm& q() const { return q_; }
    int degree() const { return p_.degree(); }
    const Field& field() const { return p_.field(); }
    /// Nonconstant common factor was divided out during construction.
    bool reduced() const { return reduced_; }

    Scalar map_resultant() const { return resultant(p_, q_); }
    bool is_morphism() const { return !map_resultant().is_zero(); }
    bool is_identity() const;

    ProjPoint apply(const ProjPoint& pt) const;
    ProjPoint apply_n(const ProjPoint& pt, int n) const;

    bool operator==(const ProjMap& b) const { return p_ == b.p_ && q_ == b.q_; }
    bool operator!=(const ProjMap& b) const { return !(*this == b); }

    std::string str() const;

private:
    ProjMap(BiForm p, BiForm q, bool reduced) : p_(std::move(p)), q_(std::move(q)), reduced_(reduced) {}
    BiForm p_, q_;
    bool reduced_;
};

/// x -> num(x)/den(x) with gcd(num, den) = 1 and normalized denominator.
class AffineMap {
public:
    AffineMap(const UniPoly& num, const UniPoly& den);
    static AffineMap from_proj(const ProjMap& m);
    ProjMap to_proj() const;

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    int degree() const { return std::max(num_.degree(), den_.degree()); }

    ProjPoint apply(const ProjPoint& pt) const;
    /// Derivative as a reduced fraction (num, den).
    std::pair<UniPoly, UniPoly> derivative() const;

    bool operator==(const AffineMap& b) const { return num_ == b.num_ && den_ == b.den_; }
    bool operator!=(const AffineMap& b) const { return !(*this == b); }

    std::string str() const;

private:
    UniPoly num_, den_;
};

struct PhiBuild {
    ProjMap map;
    bool degenerate_identity;  // char | d: the map collapsed to the identity
};

PhiBuild build_phi_checked(const BiForm& f);
ProjMap build_phi(const BiForm& f);

AffineMap affine_form(const BiForm& f);

/// Y*P - X*Q; roots are exactly the fixed points of the map.
BiForm fixed_point_form(const ProjMap& phi);

struct ResDiscReport {
    Scalar res;   // Res(phi_F), on the raw partial-derivative coordinates
    Scalar disc;  // Disc(F)
    bool identity_holds;
};

ResDiscReport res_disc_check(const BiForm& f);

ProjMap iterate(const ProjMap& phi, int n, long size_cap = kDefaultSizeCap);

/// One step of the periodic-point polynomial sequence.  psi is monic;
/// psi_scale * psi is the exact polynomial with
/// phi~^k(x) - x = d * (psi_scale * psi) / denom.
struct PsiStep {
    int period;
    UniPoly psi;       // monic
    Scalar psi_scale;
    Scalar c_prev;     // the scalar c_{k-1} of the recursion
    UniPoly numer;     // A_k
    UniPoly denom;     // B_k, content-1 / positive-lead normalized
    bool infinity_periodic;
};

std::vector<PsiStep> psi_sequence(const BiForm& f, int n, long size_cap = kDefaultSizeCap);

/// Multiplier of the n-th iterate at a rational periodic point; moves the
/// orbit into an affine chart first when it passes through infinity.
Scalar multiplier(const ProjMap& phi, const ProjPoint& p, int n);

struct PeriodicReport {
    int period;
    UniPoly psi;
    std::vector<std::pair<ProjPoint, Scalar>> rational_points;
    UniPoly multiplier_charpoly;  // monic in t, roots = multipliers at psi roots
    bool infinity_periodic;
};

PeriodicReport periodic_report(const BiForm& f, int n, long size_cap = kDefaultSizeCap);

/// Monic polynomial in t whose roots are the multipliers of phi^n at the
/// affine n-periodic points (periods dividing n, with multiplicity).
UniPoly periodic_multiplier_charpoly(const ProjMap& phi, int n, long size_cap = kDefaultSizeCap);

struct NewtonMap {
    AffineMap map;
    Scalar r;
    std::optional<Scalar> lambda_infinity;  // absent when r = deg f
    bool r_equals_degree;
};

NewtonMap modified_newton(const UniPoly& f, const Scalar& r);

struct Reconstruction {
    BiForm form;                // prod (b_i X - a_i Y)
    std::optional<UniPoly> poly;  // affine product when infinity is fixed
    ProjMap map;
};

Reconstruction reconstruct(const std::vector<ProjPoint>& points, const Scalar& r);

/// Conjugate by the matrix (a b; c d): g^-1 . phi . g.
ProjMap conjugate_linear(const ProjMap& phi, const Scalar& a, const Scalar& b, const Scalar& c,
                         const Scalar& d);

/// Determinant over the polynomial ring (fraction-free Bareiss).
UniPoly poly_determinant(std::vector<std::vector<UniPoly>> m);

}  // namespace adyn

#endif

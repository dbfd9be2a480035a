#ifndef ADYN_MODULI_HPP
#define ADYN_MODULI_HPP

#include <array>

#include "adyn/dermap.hpp"

namespace adyn {

/// Element of PGL_2: an invertible 2x2 matrix up to scale.  Equality and
/// printing use the canonical representative (first nonzero entry 1), but
/// the stored entries keep the caller's scaling, which the invariance
/// character chi is sensitive to.
class Moebius {
public:
    Moebius(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d);
    static Moebius identity(Field f);
    static Moebius swap(Field f);  // (X,Y) -> (Y,X), i.e. z -> 1/z
    static Moebius diag(const Scalar& u, const Scalar& v);
    /// The unique element sending (z1, z2, z3) to (w1, w2, w3).
    static Moebius three_points(const ProjPoint& z1, const ProjPoint& z2, const ProjPoint& z3,
                                const ProjPoint& w1, const ProjPoint& w2, const ProjPoint& w3);

    const Scalar& a() const { return a_; }
    const Scalar& b() const { return b_; }
    const Scalar& c() const { return c_; }
    const Scalar& d() const { return d_; }
    const Field& field() const { return a_.field(); }

    Scalar det() const { return a_ * d_ - b_ * c_; }
    std::array<Scalar, 4> canonical() const;
    Moebius inverse() const;
    Moebius operator*(const Moebius& h) const;  // composition g.h
    ProjPoint apply(const ProjPoint& p) const;

    bool operator==(const Moebius& h) const;
    bool operator!=(const Moebius& h) const { return !(*this == h); }

    std::string str() const;

private:
    Scalar a_, b_, c_, d_;
};

/// g^-1 . phi . g, normalized.
ProjMap conjugate_map(const ProjMap& phi, const Moebius& g);

/// The form G with build_phi(G) = conjugate_map(build_phi(F), g).
BiForm conjugate_form(const BiForm& f, const Moebius& g);

struct NormalForm {
    std::vector<Scalar> alphas;  // images of the d-3 remaining fixed points
    Moebius change;              // sends the first three fixed points to 0, 1, inf
};

NormalForm normal_form(const BiForm& f);

/// The six-element cross-ratio orbit of alpha (with repeats removed).
std::vector<Scalar> cross_ratio_orbit(const Scalar& alpha);

struct AlphaFamily {
    Scalar alpha;
    explicit AlphaFamily(const Scalar& a);
};

/// F = X^3 Y - (a+1) X^2 Y^2 + a X Y^3 and its partial-derivative map.
std::pair<BiForm, ProjMap> alpha_family_form(const AlphaFamily& fam);

struct TwoPeriodic {
    std::vector<UniPoly> quadratics;        // x^2-a, (x-1)^2-(1-a), (x-a)^2-(a^2-a)
    std::vector<ProjPoint> rational_points;  // rational strictly-2-periodic points
    UniPoly psi2;                            // monic product with the fixed points
};

TwoPeriodic two_periodic_points(const AlphaFamily& fam);

/// All alpha = p^2/q^2 from primitive pythagorean triples with q <= bound.
std::vector<Scalar> pythagorean_alphas(long max_hypotenuse);

bool is_automorphism(const ProjMap& phi, const Moebius& g);

/// chi(g) when F.g is a scalar multiple of F, else absent.
std::optional<Scalar> invariance_check(const BiForm& f, const Moebius& g);

}  // namespace adyn

#endif

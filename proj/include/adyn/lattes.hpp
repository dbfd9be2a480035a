#ifndef ADYN_LATTES_HPP
#define ADYN_LATTES_HPP

#include "adyn/moduli.hpp"

namespace adyn {

/// Elliptic curve y^2 = g(x) = x^3 + a x^2 + b x + c, smooth.
class EllCurve {
public:
    EllCurve(const Scalar& a, const Scalar& b, const Scalar& c);

    const Scalar& a() const { return a_; }
    const Scalar& b() const { return b_; }
    const Scalar& c() const { return c_; }
    const Field& field() const { return a_.field(); }

    UniPoly g() const;  // x^3 + a x^2 + b x + c
    Scalar j_invariant() const;

private:
    Scalar a_, b_, c_;
};

/// Element even(x) + y*odd(x) of the coordinate ring, y^2 reduced to g(x).
struct CurvePoly {
    UniPoly even, odd;

    bool pure_even() const { return odd.is_zero(); }
    bool pure_odd() const { return even.is_zero(); }
};

CurvePoly curve_mul(const CurvePoly& p, const CurvePoly& q, const UniPoly& g);

/// m-division polynomial Psi_{E,m}; plain in x for odd m, y times a
/// polynomial in x for even m.
CurvePoly division_polynomial(const EllCurve& e, int m);

/// Degree-m^2 Lattes map x - Psi_{m-1} Psi_{m+1} / Psi_m^2.
ProjMap lattes_map(const EllCurve& e, int m);

struct DoublingCheck {
    NewtonMap newton;  // modified Newton with r = 3 on monic Psi_3 / 3
    bool matches_lattes;
};

DoublingCheck doubling_from_torsion(const EllCurve& e);

/// G with G' = g and G(x) = 0 exactly at the 3-torsion x-coordinates;
/// 12 G = Psi_3.
UniPoly three_torsion_by_integration(const EllCurve& e);

struct ResDiscExperiment {
    int m;
    Scalar disc;   // Disc(Psi_{m-1} Psi_{m+1})
    Scalar res;    // Res(phi_{E,m}) on the normalized map
    Scalar ratio;  // disc / res
    int sign;      // sign of the ratio
    std::vector<std::pair<mpz_class, int>> num_factors, den_factors;
    bool factors_divide_2mm;  // every prime factor divides 2(m-1)(m+1)
};

ResDiscExperiment res_disc_experiment(const EllCurve& e, int m);

struct CmCheck {
    std::string form_name;
    BiForm form;
    std::string action;
    bool skipped = false;
    std::string skip_reason;
    std::optional<Scalar> chi;
    bool automorphism = false;
};

struct CmReport {
    long j_family;  // 1728 or 0
    std::vector<CmCheck> checks;
};

CmReport cm_automorphism_suite(const EllCurve& e);

}  // namespace adyn

#endif

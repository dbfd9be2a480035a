#ifndef ADYN_RANDGEN_HPP
#define ADYN_RANDGEN_HPP

#include <random>

#include "adyn/moduli.hpp"

namespace adyn {

/// Uniform coefficient in [-bound, bound] (residue in [0, p) over F_p).
Scalar random_scalar(std::mt19937_64& rng, long bound, Field f);

/// Squarefree degree-d form with coefficients in [-bound, bound], by
/// rejection sampling.
BiForm random_squarefree_form(std::mt19937_64& rng, int d, long bound, Field f);

/// Invertible matrix with small entries.
Moebius random_moebius(std::mt19937_64& rng, long bound, Field f);

}  // namespace adyn

#endif

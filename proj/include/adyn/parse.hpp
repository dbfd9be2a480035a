#ifndef ADYN_PARSE_HPP
#define ADYN_PARSE_HPP

#include <string>

#include "adyn/biform.hpp"

namespace adyn {

/// "p" or "p/q".
Scalar parse_scalar(const std::string& src, Field f);

/// Affine point: a scalar or "inf".
ProjPoint parse_point(const std::string& src, Field f);

/// Homogeneous expression in X, Y; every term must have the same total
/// degree.  Terms joined by + / -, '*' optional, exponents via '^'.
BiForm parse_biform(const std::string& src, Field f);

/// Affine expression in x.
UniPoly parse_unipoly(const std::string& src, Field f);

}  // namespace adyn

#endif

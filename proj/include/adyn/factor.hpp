#ifndef ADYN_FACTOR_HPP
#define ADYN_FACTOR_HPP

#include <gmpxx.h>

#include <vector>

namespace adyn {

/// Prime factorization of |n| for n != 0, primes ascending.
std::vector<std::pair<mpz_class, int>> factorize(mpz_class n);

/// All positive divisors of |n| (n != 0).
std::vector<mpz_class> divisors(const mpz_class& n);

}  // namespace adyn

#endif

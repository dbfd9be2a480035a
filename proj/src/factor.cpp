#include "adyn/factor.hpp"

#include <algorithm>
#include <map>

#include "adyn/scalar.hpp"

namespace adyn {

namespace {

mpz_class pollard_rho(const mpz_class& n) {
    // Brent variant; n must be odd composite, not a prime power handled upstream
    for (unsigned long c = 1;; ++c) {
        mpz_class x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            mpz_class diff = x - y;
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 0 && d != 1 && d != n) return d;
    }
}

void factor_into(mpz_class n, std::map<mpz_class, int>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        out[n]++;
        return;
    }
    mpz_class d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<mpz_class, int>> factorize(mpz_class n) {
    if (n == 0) throw error("factorization of zero");
    n = abs(n);
    std::map<mpz_class, int> acc;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        while (n % p == 0) {
            acc[mpz_class(p)]++;
            n /= p;
        }
    }
    factor_into(n, acc);
    return {acc.begin(), acc.end()};
}

std::vector<mpz_class> divisors(const mpz_class& n) {
    auto fac = factorize(n);
    std::vector<mpz_class> out{1};
    for (const auto& [p, e] : fac) {
        size_t base = out.size();
        mpz_class pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace adyn

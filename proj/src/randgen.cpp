#include "adyn/randgen.hpp"

namespace adyn {

Scalar random_scalar(std::mt19937_64& rng, long bound, Field f) {
    if (f.prime()) {
        std::uniform_int_distribution<long> dist(0, f.modulus - 1);
        return Scalar(dist(rng), f);
    }
    std::uniform_int_distribution<long> dist(-bound, bound);
    return Scalar(dist(rng), f);
}

BiForm random_squarefree_form(std::mt19937_64& rng, int d, long bound, Field f) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<Scalar> coeffs;
        for (int i = 0; i <= d; ++i) coeffs.push_back(random_scalar(rng, bound, f));
        bool nz = false;
        for (const auto& c : coeffs) nz = nz || !c.is_zero();
        if (!nz) continue;
        BiForm form(std::move(coeffs), f);
        if (squarefree(form)) return form;
    }
    throw error("could not sample a squarefree form");
}

Moebius random_moebius(std::mt19937_64& rng, long bound, Field f) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        Scalar a = random_scalar(rng, bound, f), b = random_scalar(rng, bound, f);
        Scalar c = random_scalar(rng, bound, f), d = random_scalar(rng, bound, f);
        if (!(a * d - b * c).is_zero()) return Moebius(a, b, c, d);
    }
    throw error("could not sample an invertible matrix");
}

}  // namespace adyn

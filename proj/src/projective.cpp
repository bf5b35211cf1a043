#include "qwps/projective.hpp"

#include <array>

namespace qwps {

std::pair<Int, Int> bezout_opposite_sign(const Int& a, const Int& b, const Int& k) {
    if (a < 1 || b < 1 || k < 1)
        throw precondition_error("bezout_opposite_sign: arguments must be positive");
    Int g, x, y;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    Int r = k * x, s = k * y;
    const Int bs = b / g, as = a / g;
    // Shift (r, s) -> (r + t*b/g, s - t*a/g) until r > 0 > s.
    Int t = 0;
    if (r <= 0) t = (-r) / bs + 1;
    Int r2 = r + t * bs, s2 = s - t * as;
    while (s2 >= 0) {
        r2 += bs;
        s2 -= as;
    }
    if (!(a * r2 + b * s2 == k * g) || r2 <= 0 || s2 >= 0)
        throw verification_error("bezout_opposite_sign: postcondition failed");
    return {r2, s2};
}

GenerationResult generation_test(const WeightVector& l) {
    GenerationResult res;
    if (auto p = factor_sharp(l)) {
        res.generated = true;
        res.p = std::move(*p);
        return res;
    }

    const int n1 = static_cast<int>(l.size());
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j)
            for (int k = 0; k < n1; ++k) {
                if (i == j || j == k || k == i) continue;
                if (divides(l.ratio(i, j), l[k])) continue;

                // l_i r + l_k s = l_j gcd(l_i, l_k), r s < 0.
                auto [r, s] = bezout_opposite_sign(l[i], l[k], l[j]);
                Int g = gcd(l[i], l[k]);
                NormalMonomial m = NormalMonomial::unit(n1 - 1);
                if (r > 0) {
                    m.spow[i] = static_cast<int>(r.get_si());
                    m.zpow[j] = static_cast<int>(g.get_si());
                    m.zpow[k] = static_cast<int>(Int(-s).get_si());
                } else {
                    m.zpow[i] = static_cast<int>(Int(-r).get_si());
                    m.zpow[j] = static_cast<int>(g.get_si());
                    m.spow[k] = static_cast<int>(s.get_si());
                }
                if (grade(m, l) != 0)
                    throw verification_error("generation_test: certificate has nonzero grade");
                if (m.length() != 3)
                    throw verification_error("generation_test: certificate length is not 3");
                res.certificate = std::move(m);
                res.violation = std::array<int, 3>{i, j, k};
                return res;
            }
    throw verification_error(
        "generation_test: factor_sharp failed but no divisibility violation found");
}

}  // namespace qwps

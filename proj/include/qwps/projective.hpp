#pragma once

#include <array>
#include <optional>
#include <utility>

#include "qwps/algebra.hpp"

namespace qwps {

/**
 * Nonzero integers (r, s) of opposite sign with a r + b s = k gcd(a, b),
 * from the extended Euclidean algorithm shifted along (b, -a)/gcd.
 */
std::pair<Int, Int> bezout_opposite_sign(const Int& a, const Int& b, const Int& k);

struct GenerationResult {
    bool generated = false;
    /// When generated: the pairwise coprime p with sharp(p) = l.
    std::optional<PairwiseCoprimeVector> p;
    /// When not generated: a grade-0 length-3 monomial not expressible
    /// through the length-2 generators xi_{i,j}.
    std::optional<NormalMonomial> certificate;
    /// Indices (i, j, k) with l_{i:j} not dividing l_k, witnessing failure.
    std::optional<std::array<int, 3>> violation;
};

/**
 * Decides whether the invariant subalgebra for l is generated by the
 * length-2 elements xi_{i,j}; on failure produces the concrete certificate
 * (z_i^*)^{|r|} z_j^{gcd(l_i,l_k)} z_k^{|s|} (or its conjugate pattern for
 * r < 0) built from the opposite-sign Bezout pair.  Requires l coprime.
 */
GenerationResult generation_test(const WeightVector& l);

}  // namespace qwps

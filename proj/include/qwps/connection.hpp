#pragma once

#include <vector>

#include "qwps/coeffs.hpp"

namespace qwps {

/// Element of A (x) A: a list of (left, right) factor pairs.
struct TensorElement {
    std::vector<std::pair<AlgebraElement, AlgebraElement>> pairs;

    size_t size() const { return pairs.size(); }

    /// sum_i left_i * right_i as an algebra element.
    AlgebraElement contract() const;
};

/// Square matrix of grade-0 algebra elements with E^2 = E.
struct Idempotent {
    size_t size = 0;
    std::vector<AlgebraElement> entries;  // row-major

    const AlgebraElement& at(size_t i, size_t j) const { return entries[i * size + j]; }
    AlgebraElement trace() const;
    bool is_idempotent() const;
};

/**
 * Strong connection values omega(u^k), built by the two recursions
 *   omega(u^k) = sum_i a_i zeta_i omega(u^{k-1}) zeta_i^*   (k >= 1)
 *   omega(u^k) = sum_i b_i zeta_i^* omega(u^{k+1}) zeta_i   (k <= -1)
 * from omega(1) = 1 (x) 1.  Terms with identical left factors are merged
 * after normal-forming.  The multiplication identity
 * sum_i omega^{[1]}_i omega^{[2]}_i = 1 is verified exactly at every depth;
 * failure throws verification_error.
 */
class StrongConnection {
public:
    explicit StrongConnection(PairwiseCoprimeVector p);

    const PairwiseCoprimeVector& p() const { return p_; }
    const std::vector<CommutingPoly>& coeffs_a() const { return a_; }
    const std::vector<CommutingPoly>& coeffs_b() const { return b_; }

    TensorElement omega(int k) const;

    /// (E_k)_{ij} = omega(u^k)^{[2]}_i omega(u^k)^{[1]}_j
    Idempotent idempotent(int k) const;

    /// Every left factor of omega(u^k) has ell-grade +k*p and every right
    /// factor -k*p, for ell = sharp(p).
    bool check_grading(int k) const;

private:
    const TensorElement& omega_cached(int k) const;

    PairwiseCoprimeVector p_;
    WeightVector ell_;
    std::vector<CommutingPoly> a_, b_;
    std::vector<AlgebraElement> zeta_, zeta_star_, a_alg_, b_alg_;
    mutable std::map<int, TensorElement> cache_;
};

}  // namespace qwps

#pragma once

#include <string>
#include <vector>

#include "qwps/algebra.hpp"
#include "qwps/repr.hpp"

namespace qwps {

struct RelationCheck {
    std::string name;
    bool ok = false;
};

/**
 * The full commutation-relation suite for the lens generators x_i, zeta_i
 * (relations (a)-(l)) plus the auxiliary identities
 * [z_i^*, z_i^k] = (1-q^{2k}) z_i^{k-1} X_i and the Y_i(k), Z_i(k) product
 * formulas for k <= aux_max, all reduced to exact symbolic zero in the
 * normal-form engine.
 */
std::vector<RelationCheck> relation_suite_symbolic(const PairwiseCoprimeVector& p,
                                                   int aux_max = 4);

/**
 * The same relations checked entrywise (tolerance tol, boundary columns
 * excluded) in a concrete representation.
 */
std::vector<RelationCheck> relation_suite_numeric(const PairwiseCoprimeVector& p,
                                                  const LensRep& rep, int cutoff, double tol);

/// Entrywise comparison of two elements in a representation, away from the
/// truncation boundary.
bool numeric_equal(const AlgebraElement& a, const AlgebraElement& b, const LensRep& rep,
                   int cutoff, double tol);

struct CommutatorDisplayReport {
    bool literal_matches = false;  // (-q sum_{j>=i} x_j)^k (sum_{j>i} x_j)^{p_i-k}
    bool swapped_matches = false;  // (-q sum_{j>i} x_j)^k (sum_{j>=i} x_j)^{p_i-k}
};

/**
 * Compares [zeta_i^*, zeta_i] computed from the product formulas against the
 * two readings of the displayed q-binomial expansion (with p_0 read as p_i
 * and [p_0 k]_q as the q-integer of the product p_i k).
 */
CommutatorDisplayReport zeta_commutator_display_check(const PairwiseCoprimeVector& p, int i);

}  // namespace qwps

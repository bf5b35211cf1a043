#pragma once

#include <utility>
#include <vector>

#include "qwps/cpoly.hpp"
#include "qwps/qseries.hpp"
#include "qwps/weights.hpp"

namespace qwps {

/// zeta_i zeta_i^* = prod_{k=0}^{p_i-1} { x_i + (1 - q^{-2k}) X_i } as a
/// polynomial in x_1..x_n (x_0 eliminated).
CommutingPoly zz_star_poly(const PairwiseCoprimeVector& p, int i);

/// zeta_i^* zeta_i = prod_{k=1}^{p_i} { x_i + (1 - q^{2k}) X_i }.
CommutingPoly zstar_z_poly(const PairwiseCoprimeVector& p, int i);

/**
 * Coefficients a_0, ..., a_n in C[x_1,...,x_n] with
 * sum_i a_i zeta_i zeta_i^* = 1, built by the inductive power-and-regroup
 * recursion: starting from sum_i z_i z_i^* = 1, the p_k-th power is expanded
 * by the multinomial formula and regrouped so that index k trades
 * (z_k z_k^*)^{p_k} for zeta_k zeta_k^* - A_k X_k.  The defining identity is
 * verified exactly (both in the polynomial ring and in the normal-form
 * engine) before returning; failure throws verification_error.
 */
std::vector<CommutingPoly> connection_coeffs_a(const PairwiseCoprimeVector& p);

/**
 * Coefficients b_0, ..., b_n with sum_i b_i zeta_i^* zeta_i = 1, mirroring
 * the recursion with z_i^* z_i = x_i + (1-q^2) X_i in place of x_i and
 * (z_k^* z_k)^{p_k} = zeta_k^* zeta_k + B_k X_k.  Base case b_{i,0} = q^{2i}.
 * Engine-verified before returning.
 */
std::vector<CommutingPoly> connection_coeffs_b(const PairwiseCoprimeVector& p);

/**
 * Closed-form pair for n = 1:
 *   a_0(x_1) = sum_{k=1}^{p_1} C(p_1,k) f(x_1)^{k-1} (1 - f(x_1))^{p_1-k},
 *   a_1(x_1) = ((1 - f(x_1)) / x_1)^{p_1},
 * with f the q-binomial polynomial of f_poly(p_0).
 */
std::pair<CommutingPoly, CommutingPoly> coeffs_n1_closed(int p0, int p1);

/// Symmetric closed-form family for p = (1,...,1,p_n):
/// a_n = 1, a_i = sum_{k<p_n} x_n^k for i < n.
std::vector<CommutingPoly> coeffs_last_weight(int n, int pn);

/// Symmetric closed-form family for p = (p_0,1,...,1):
/// a_0 = 1, a_i = (1 - f(x_1+...+x_n)) / (x_1+...+x_n) for i >= 1.
std::vector<CommutingPoly> coeffs_first_weight(int n, int p0);

/// Exact engine check of sum_i a_i zeta_i zeta_i^* = 1.
bool verify_solu_a(const PairwiseCoprimeVector& p, const std::vector<CommutingPoly>& a);
/// Exact engine check of sum_i b_i zeta_i^* zeta_i = 1.
bool verify_solu_b(const PairwiseCoprimeVector& p, const std::vector<CommutingPoly>& b);

}  // namespace qwps

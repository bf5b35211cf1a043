#pragma once

#include <vector>

#include "qwps/laurent.hpp"

namespace qwps {

/// Dense univariate polynomial in an auxiliary commuting variable t, with
/// Laurent coefficients.  coeffs[k] is the coefficient of t^k.
using UniPoly = std::vector<Laurent>;

UniPoly uni_mul(const UniPoly& a, const UniPoly& b);
UniPoly uni_add(const UniPoly& a, const UniPoly& b);
bool uni_equal(const UniPoly& a, const UniPoly& b);
/// Exact quotient a / t^1, requiring a[0] == 0.
UniPoly uni_div_t(const UniPoly& a);
Laurent uni_eval(const UniPoly& a, const Laurent& t0);

/// [k]_q = (q^k - q^{-k}) / (q - q^{-1}), expanded as sum_{j=0}^{k-1} q^{k-1-2j}.
Laurent q_int(int k);

/// [k]_q! with [0]_q! = 1.
Laurent q_factorial(int k);

/**
 * q-binomial, defined through the generating identity of polynomials in t
 *   prod_{l=0}^{m-1} (1 + q^{2l} t) = sum_k [m k] q^{k(m-1)} t^k,
 * computed by the recursion [m+1 k] = q^{-k}[m k] + q^{m-k+1}[m k-1].
 * Invariant under q -> q^{-1}; equals [m]_q! / ([k]_q! [m-k]_q!).
 */
Laurent q_binomial(int m, int k);

/**
 * The brace symbol {m k} = (1 - q^{2k+2})(1 - q^{2k+4}) ... (1 - q^{2m}),
 * i.e. the q-shifted factorial (q^{2k+2}; q^2)_{m-k}.  Requires 0 <= k < m.
 */
Laurent q_shifted(int m, int k);

/// Same brace with the boundary k == m allowed (empty product = 1).
Laurent q_shifted_or_one(int m, int k);

/// Double evaluation of {m k} at a given 0 < q < 1 (used by the shift amplitudes).
double q_shifted_value(int m, int k, double q);

/**
 * f(t) = sum_{k=0}^{p0} [p0 k] q^{-k(p0-1)} (-t)^k
 *      = prod_{k=0}^{p0-1} (1 - q^{-2k} t),  with f(0) = 1.
 */
UniPoly f_poly(int p0);

}  // namespace qwps

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qwps/connection.hpp"
#include "qwps/repr.hpp"

namespace qwps {

/**
 * Label of the Fredholm module F_{h,r}: pullback level 0 <= h <= n and
 * remainders r = (r_0,...,r_{h-1}) with 0 <= r_i < p_i (empty for h = 0,
 * the rank-one module of the scalars).
 */
struct FredholmLabel {
    int h = 0;
    std::vector<int> r;

    std::string str() const;
};

/// All labels for the given p; their number is 1 + sum_{k=1}^n p_0...p_{k-1}.
std::vector<FredholmLabel> all_fredholm_labels(const PairwiseCoprimeVector& p);
Int fredholm_label_count(const PairwiseCoprimeVector& p);

/// Label of the projection P_m(alpha) = prod_{i<=m} P(X_i, q^{2(alpha_1+...+alpha_i)}).
struct ProjectionLabel {
    int m = 1;
    std::vector<int> alpha;

    std::string str() const;
};

/// Image of a under the epimorphism z_j -> 0 for j > h, reindexed to level h.
AlgebraElement pullback(const AlgebraElement& a, int h);

struct TraceResult {
    double value = 0.0;
    double tail_bound = 0.0;
    int cutoff = 0;
};

/**
 * Truncated trace of (pi_+ - pi_-)(a) for the level-h module: the sum over
 * basis states of l^2(N^h) of the alternating diagonal entries of the
 * pi^{(h)}_k images.  Requires a projective-invariant (grade-0) element.
 * The tail bound combines the per-generator q^{m_k} coefficient bound with
 * the count binom(m_k+k-1,k-1) binom(m_k,h-k) of intersection states and a
 * conservative per-monomial envelope |coeff| * deg * q^{-deg}.
 */
TraceResult trace_difference(const AlgebraElement& a, const FredholmLabel& label,
                             const PairwiseCoprimeVector& p, double q, int cutoff);

/// Doubles the cutoff until tail_bound < 0.25 (the rounding contract) or
/// max_cutoff is reached.
TraceResult trace_difference_auto(const AlgebraElement& a, const FredholmLabel& label,
                                  const PairwiseCoprimeVector& p, double q, int cutoff,
                                  int max_cutoff);

/**
 * Closed-form pairing <F_{h,r}, P_m(alpha)>: when h >= m and
 * alpha_{i+1} - r_i is a nonnegative multiple of p_i for all 0 <= i < m,
 * equals (-1)^m binom(N, h-m) with N = sum (alpha_{i+1} - r_i)/p_i; zero in
 * all other cases (binomial vanishes when h-m > N).
 */
Int pairing_formula(const FredholmLabel& label, const ProjectionLabel& proj,
                    const PairwiseCoprimeVector& p);

/// The fixed labels m_1..m_m forced by the eigenvalue equations
/// r_i + p_i(m_{i+1} - m_i) = alpha_{i+1}, when they admit a solution in N.
std::optional<std::vector<int>> rap_solution(const FredholmLabel& label,
                                             const ProjectionLabel& proj,
                                             const PairwiseCoprimeVector& p);

struct OracleResult {
    long value = 0;
    bool cutoff_sufficient = true;
    int cutoff = 0;
};

/**
 * Brute-force pairing: sum over k of (-1)^k times the number of basis states
 * of V^h_k within the cutoff selected by the spectral projection predicate.
 * Eigenvalue selection compares integer q-exponents, never floats, so the
 * count is q-independent by construction.  cutoff_sufficient reports whether
 * the truncation provably saw every contributing state.
 */
OracleResult pairing_oracle(const FredholmLabel& label, const ProjectionLabel& proj,
                            const PairwiseCoprimeVector& p, double q, int cutoff);

/// Cutoff beyond which the oracle is exact for these labels.
int oracle_exact_cutoff(const FredholmLabel& label, const ProjectionLabel& proj,
                        const PairwiseCoprimeVector& p);

/// alpha(s, beta): alpha_{i+1} = s_i + p_i (beta_{i+1} - beta_i), beta_0 = 0.
ProjectionLabel dual_projection(const std::vector<int>& s, const std::vector<int>& beta,
                                const PairwiseCoprimeVector& p);

/// Record of one pairing: labels, closed form, oracle, certificate.
struct PairingReport {
    FredholmLabel label;
    ProjectionLabel proj;
    Int formula;
    double oracle = 0.0;
    double tail_bound = 0.0;
    bool agrees = false;

    std::string json_line() const;
    std::string csv_row() const;
    static std::string csv_header();
};

PairingReport make_pairing_report(const FredholmLabel& label, const ProjectionLabel& proj,
                                  const PairwiseCoprimeVector& p, double q, int cutoff);

/**
 * <F_{h,r}, [E]> = trace_difference(Tr E).  E must be an idempotent over the
 * invariant subalgebra; the check is symbolic and can be skipped by flag
 * (the strong-connection idempotents arrive pre-verified).
 */
TraceResult pairing_idempotent(const Idempotent& e, const FredholmLabel& label,
                               const PairwiseCoprimeVector& p, double q, int cutoff,
                               bool check_idempotent = true);

struct NontrivialityEntry {
    std::vector<int> r;
    TraceResult pairing;
};

struct NontrivialityReport {
    std::vector<NontrivialityEntry> entries;
    bool nontrivial = false;  // some pairing differs from the free-module value 0
};

/// <F_{1,r}, [E_1]> for every valid r; the paper's value is -1 throughout.
NontrivialityReport nontriviality_certificate(const PairwiseCoprimeVector& p, double q,
                                              int cutoff);

}  // namespace qwps

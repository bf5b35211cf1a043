#pragma once

#include <functional>
#include <vector>

#include "qwps/fredholm.hpp"
#include "qwps/repr.hpp"

namespace qwps {

/**
 * Dirac data |D^lambda| |m> = lambda(||m||_1) |m> on l^2(N^n), with the flip
 * operator off-diagonal coupling pi_+ and pi_-.  lambda is evaluated only on
 * the integer grid (the support of the spectrum).
 */
struct DiracSpec {
    enum class Kind { Identity, Power, Custom };

    int n = 1;
    Kind kind = Kind::Identity;
    double d = 1.0;  // metric dimension target for Kind::Power
    std::function<double(int)> custom;

    static DiracSpec identity(int n) { return {n, Kind::Identity, 0.0, {}}; }
    static DiracSpec power(int n, double d) { return {n, Kind::Power, d, {}}; }
    static DiracSpec custom_fn(int n, std::function<double(int)> f) {
        return {n, Kind::Custom, 0.0, std::move(f)};
    }

    double lambda(int t) const;
};

/// Multiplicity of the |D| eigenvalue lambda on l^2(N^n): binom(lambda+n-1, n-1).
Int multiplicity(int n, int lambda);

/// Max absolute slope of the sampled function over the integer grid [0, T].
double lipschitz_norm(const std::vector<double>& samples);

struct ZetaDiagnostic {
    std::vector<double> partial_sums;
    /// Ratio of the last two partial-sum increments (< 1 suggests convergence).
    double increment_ratio = 0.0;
};

/// Partial sums of Tr(|D^lambda|^{-s}) = sum_j mu_j lambda(j)^{-s}, j >= 1.
ZetaDiagnostic zeta_partial(const DiracSpec& spec, double s, int terms);

struct CommutatorProfile {
    std::vector<int> cutoffs;
    std::vector<double> column_norms;  // largest column norm per cutoff
    double envelope_max = 0.0;         // max_t n * t * q^t
};

/**
 * Largest column norm of the truncated commutator [D^lambda, pi(a)] per
 * cutoff (both off-diagonal blocks |D|pi_-(a) - pi_+(a)|D| and
 * |D|pi_+(a) - pi_-(a)|D|), for the level-n module with remainders r.
 * Columns within max-shift distance of the truncation boundary are excluded.
 * The paper's boundedness envelope max_t {n t q^t} is reported alongside.
 */
CommutatorProfile commutator_profile(const AlgebraElement& a, const DiracSpec& spec,
                                     const PairwiseCoprimeVector& p, const std::vector<int>& r,
                                     double q, const std::vector<int>& cutoffs);

/// Weighted shift S(k, c) : |m> -> c(m) |m+k> on the truncated lattice.
struct WeightedShift {
    State step;
    std::function<double(const State&)> weight;
};

/// Matrix of [|D^lambda|, S] minus ||step||_1 * lambda-difference scaling,
/// evaluated entrywise; exact zero for the identity lambda.
double shift_derivation_defect(const WeightedShift& s, const DiracSpec& spec, int cutoff);

}  // namespace qwps

#pragma once

#include <algorithm>
#include <complex>
#include <map>
#include <optional>
#include <vector>

#include "qwps/algebra.hpp"
#include "qwps/weights.hpp"

namespace qwps {

/// Lattice label of a basis vector of l^2(N^d).
using State = std::vector<int>;
using Amp = std::complex<double>;

inline int norm1(const State& s) {
    int t = 0;
    for (int v : s) t += v;
    return t;
}

struct Hit {
    State state;
    Amp amp;
};

/**
 * A representation presented through the lens generators: diagonal x_i and
 * weighted shifts zeta_i on a lattice basis.  in_domain marks the subspace
 * the representation lives on; everything acts as zero on its complement.
 */
class LensRep {
public:
    virtual ~LensRep() = default;
    virtual int dims() const = 0;       // number of lattice labels
    virtual int top_index() const = 0;  // generators carry indices 0..top_index
    virtual double qval() const = 0;
    virtual int p_at(int i) const = 0;
    /// By how much one zeta_i application can raise ||state||_1.
    virtual int zeta_span(int i) const = 0;
    virtual bool in_domain(const State& s) const = 0;
    virtual double x_value(int i, const State& s) const = 0;
    virtual std::optional<Hit> zeta(int i, const State& s) const = 0;
    virtual std::optional<Hit> zeta_star(int i, const State& s) const = 0;
};

/**
 * The faithful representation of O(S^{2n+1}_q) on l^2(N^n), twisted by the
 * automorphism z_n -> lambda z_n.  Exposes both the z-level actions and the
 * derived lens actions for the generators of O(L_q(p; l)) with l = sharp(p).
 */
class SphereRep : public LensRep {
public:
    SphereRep(PairwiseCoprimeVector p, double q, Amp lambda = 1.0);

    std::optional<Hit> z(int i, bool star, const State& s) const;

    int dims() const override { return n_; }
    int top_index() const override { return n_; }
    double qval() const override { return q_; }
    int p_at(int i) const override { return p_.at(i); }
    int zeta_span(int i) const override { return i < n_ ? p_.at(i) : 0; }
    bool in_domain(const State&) const override { return true; }
    double x_value(int i, const State& s) const override;
    std::optional<Hit> zeta(int i, const State& s) const override;
    std::optional<Hit> zeta_star(int i, const State& s) const override;

private:
    PairwiseCoprimeVector p_;
    int n_;
    double q_;
    Amp lambda_;
};

/**
 * The irreducible lens-algebra representation with remainder labels
 * r = (r_0,...,r_{n-1}), 0 <= r_i < p_i, on basis |m;r> with
 * 0 <= m_1 <= ... <= m_n.  Equals the relabeled restriction of the sphere
 * representation to the r-sublattice k_i = p_{i-1}(m_i - m_{i-1}) + r_{i-1};
 * in particular the shift amplitude carries the remainder offset inside the
 * brace: sqrt({p_i(m_{i+1}-m_i+1)+r_i}_{p_i(m_{i+1}-m_i)+r_i}).
 */
class LensIrrep : public LensRep {
public:
    LensIrrep(PairwiseCoprimeVector p, std::vector<int> r, double q);

    int dims() const override { return n_; }
    int top_index() const override { return n_; }
    double qval() const override { return q_; }
    int p_at(int i) const override { return p_.at(i); }
    int zeta_span(int i) const override { return n_ - i; }
    bool in_domain(const State& s) const override;
    double x_value(int i, const State& s) const override;
    std::optional<Hit> zeta(int i, const State& s) const override;
    std::optional<Hit> zeta_star(int i, const State& s) const override;

private:
    double diag_exponent_prefix(int i, const State& s) const;  // sum r_j + sum p Delta
    PairwiseCoprimeVector p_;
    std::vector<int> r_;
    int n_;
    double q_;
};

/**
 * The family pi^{(h)}_k of lens-algebra representations on l^2(N^h)
 * (0 <= k <= h): x_i, zeta_i act by the irreducible level-k formulas on the
 * subspace V^h_k (first k labels nondecreasing, remaining labels strictly
 * decreasing) and as zero on its complement; x_i = zeta_i = 0 for i > k.
 */
class PiKRep : public LensRep {
public:
    PiKRep(int h, int k, PairwiseCoprimeVector p, std::vector<int> r, double q);

    int level() const { return k_; }
    int dims() const override { return h_; }
    int top_index() const override { return h_; }
    double qval() const override { return q_; }
    int p_at(int i) const override { return p_.at(i); }
    int zeta_span(int i) const override { return std::max(0, k_ - i); }
    bool in_domain(const State& s) const override;  // V^h_k membership
    double x_value(int i, const State& s) const override;
    std::optional<Hit> zeta(int i, const State& s) const override;
    std::optional<Hit> zeta_star(int i, const State& s) const override;

    /// Integer exponent e with X_i-eigenvalue q^{2e} on |s>, for 1 <= i <= k.
    long x_big_exponent(int i, const State& s) const;

private:
    double diag_exponent_prefix(int i, const State& s) const;
    int h_, k_;
    PairwiseCoprimeVector p_;
    std::vector<int> r_;
    double q_;
};

struct ApplyResult {
    std::map<State, Amp> out;
    bool truncated = false;

    Amp at(const State& s) const {
        auto it = out.find(s);
        return it == out.end() ? Amp(0.0) : it->second;
    }
};

/**
 * Linear extension of the lens actions over normal monomials: each block
 * z_i^{j}(z_i^*)^{k} factors as zeta_i^{(j-k)/p_i} Y_i(k) (or
 * Y_i(j) (zeta_i^*)^{(k-j)/p_i}), with the diagonal Y-polynomials evaluated
 * exactly on basis states.  Requires every monomial to lie in the lens
 * subalgebra (p_i divides j_i - k_i).  Shifts beyond the cutoff are dropped
 * and flagged, never silently lost.
 */
ApplyResult apply(const AlgebraElement& a, const LensRep& rep, const State& s, int cutoff);

/// z-word application through the sphere representation (cross-check path).
ApplyResult apply_z(const AlgebraElement& a, const SphereRep& rep, const State& s, int cutoff);

/// Max possible increase of ||state||_1 under one application of a.
int max_up_shift(const AlgebraElement& a, const LensRep& rep);

struct SparseMatrix {
    std::vector<State> basis;                       // column order
    std::map<std::pair<int, int>, Amp> entries;     // (row, col) -> value
    bool truncated = false;

    std::string coordinate_text() const;  // "row col value" lines
};

/// All lattice points of N^dims with ||m||_1 <= cutoff, in lexicographic order.
std::vector<State> enumerate_lattice(int dims, int cutoff);

/// V^h_k basis states within the cutoff.
std::vector<State> subspace_basis(int h, int k, int cutoff);

/// V^h_{k-1} cap V^h_k basis states within the cutoff (1 <= k <= h).
std::vector<State> intersection_basis(int h, int k, int cutoff);

SparseMatrix matrix_of(const AlgebraElement& a, const LensRep& rep, int cutoff);

}  // namespace qwps

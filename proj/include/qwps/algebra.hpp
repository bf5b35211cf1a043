#pragma once

#include <map>
#include <string>
#include <vector>

#include "qwps/laurent.hpp"
#include "qwps/weights.hpp"

namespace qwps {

/// One generator symbol z_i (star = false) or z_i^* (star = true).
struct Gen {
    int index = 0;
    bool star = false;
};
using Word = std::vector<Gen>;

/**
 * Normal-ordered monomial in the quantum (2n+1)-sphere algebra:
 *
 *   z_0^{j_0} (z_0^*)^{k_0} z_1^{j_1} (z_1^*)^{k_1} ... z_n^{j_n} (z_n^*)^{k_n}
 *
 * with min(j_0, k_0) = 0 (mixed index-0 pairs are eliminated through the
 * sphere relation sum_i z_i z_i^* = 1).  These monomials form the linear
 * basis of O(S^{2n+1}_q).
 */
struct NormalMonomial {
    std::vector<int> zpow;  // exponents of z_i
    std::vector<int> spow;  // exponents of z_i^*

    int n() const { return static_cast<int>(zpow.size()) - 1; }
    int degree() const;
    /// Number of indices with a nonzero signed exponent contribution.
    int length() const;
    bool is_unit() const { return degree() == 0; }

    static NormalMonomial unit(int n) {
        return {std::vector<int>(n + 1, 0), std::vector<int>(n + 1, 0)};
    }

    Word word() const;
    std::string str() const;

    friend bool operator==(const NormalMonomial&, const NormalMonomial&) = default;
    friend bool operator<(const NormalMonomial& a, const NormalMonomial& b) {
        if (int da = a.degree(), db = b.degree(); da != db) return da < db;
        if (a.zpow != b.zpow) return a.zpow < b.zpow;
        return a.spow < b.spow;
    }
};

/**
 * Finite linear combination of normal monomials over the Laurent ring in q.
 * Immutable value semantics; every operation returns normal forms, so
 * equality of elements is literal map equality and "is this 1?" is trivial.
 */
class AlgebraElement {
public:
    AlgebraElement() = default;
    explicit AlgebraElement(int n) : n_(n) {}

    static AlgebraElement zero(int n) { return AlgebraElement(n); }
    static AlgebraElement one(int n);
    static AlgebraElement monomial(NormalMonomial m, Laurent c = Laurent(1));

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    size_t term_count() const { return terms_.size(); }
    const std::map<NormalMonomial, Laurent>& terms() const { return terms_; }

    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    /// *this += c * o without materializing the intermediate element.
    AlgebraElement& add_scaled(const Laurent& c, const AlgebraElement& o);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(const Laurent& c, AlgebraElement a);
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    /// Arbitrary total order (term-map comparison), for use as container keys.
    friend bool operator<(const AlgebraElement& a, const AlgebraElement& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return a.terms_ < b.terms_;
    }

    AlgebraElement adjoint() const;
    AlgebraElement pow(int e) const;

    /// Canonical text form (degree-sorted monomials, explicit q-exponents).
    std::string str() const;

    void add_term(const NormalMonomial& m, const Laurent& c);

private:
    int n_ = 0;
    std::map<NormalMonomial, Laurent> terms_;
};

/**
 * Left multiplication by one generator, the primitive every product reduces
 * to.  Rewrites with the sphere relations: ascending-index commutation picks
 * up scalar q-powers; z_i^* against z_i^j expands through
 * [z_i^*, z_i^j] = (1 - q^{2j}) z_i^{j-1} X_i with X_i = sum_{t>i} z_t z_t^*;
 * mixed z_0 z_0^* pairs are eliminated by sum_i z_i z_i^* = 1.  Termination:
 * every recursive call multiplies by a generator of strictly larger index
 * (the X_i and unit-sphere expansions only spawn indices > i), bounded by n.
 */
AlgebraElement gen_times(const Gen& g, const AlgebraElement& a);

/// Normal form of an arbitrary generator word (empty word = 1).
AlgebraElement normal_form(int n, const Word& w);

/// U(1)-grade of a monomial under the weighted action: sum_i (j_i - k_i) l_i.
Int grade(const NormalMonomial& m, const WeightVector& l);

/// All monomials have grade 0 (projective invariance).
bool is_invariant(const AlgebraElement& a, const WeightVector& l);

/// All grades divisible by p (lens invariance).
bool is_lens_invariant(const AlgebraElement& a, const WeightVector& l, const Int& p);

/// x_i = z_i z_i^*
AlgebraElement x_elem(int n, int i);
/// X_i = sum_{j>i} x_j
AlgebraElement big_x_elem(int n, int i);
/// zeta_i = z_i^{p_i}
AlgebraElement zeta_elem(int n, int i, int pi);
/// xi_{i,j} = (z_i^*)^{l_{j:i}} z_j^{l_{i:j}}
AlgebraElement xi_elem(const WeightVector& l, int i, int j);

/// normal_form(lhs - rhs) == 0, exactly.
bool verify_relation(const AlgebraElement& lhs, const AlgebraElement& rhs);

}  // namespace qwps

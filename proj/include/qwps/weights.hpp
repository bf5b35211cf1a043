#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qwps/integers.hpp"

namespace qwps {

/// A finite sequence of positive integer weights (l_0, ..., l_n), n >= 1.
class WeightVector {
public:
    WeightVector() = default;
    explicit WeightVector(std::vector<Int> entries);
    WeightVector(std::initializer_list<long> entries);

    int n() const { return static_cast<int>(entries_.size()) - 1; }
    size_t size() const { return entries_.size(); }
    const Int& operator[](size_t i) const { return entries_[i]; }
    const std::vector<Int>& entries() const { return entries_; }

    /// l_{i:j} = l_i / gcd(l_i, l_j)
    Int ratio(size_t i, size_t j) const;

    Int product() const;
    Int overall_gcd() const;

    friend bool operator==(const WeightVector&, const WeightVector&) = default;

    std::string str() const;

private:
    std::vector<Int> entries_;
};

/// Pairwise coprime weight vector p together with its product p = p_0 ... p_n.
struct PairwiseCoprimeVector {
    std::vector<Int> entries;
    Int product;

    int n() const { return static_cast<int>(entries.size()) - 1; }
    const Int& operator[](size_t i) const { return entries[i]; }
    WeightVector as_weights() const { return WeightVector(entries); }

    /// p_i as a plain int (all uses in representations keep p_i small).
    int at(size_t i) const { return static_cast<int>(entries[i].get_si()); }
};

/// Validates pairwise coprimality and fills in the product.
PairwiseCoprimeVector make_pairwise_coprime(std::vector<Int> entries);

/// All pairwise coprime vectors of length n+1 with entries in [1, max_entry].
std::vector<PairwiseCoprimeVector> all_pairwise_coprime(int n, int max_entry);

bool is_coprime(const WeightVector& l);
bool is_pairwise_coprime(const WeightVector& l);
/// Normalized: for every prime p dividing some weight, at least two weights
/// are not divisible by p.
bool is_normalized(const WeightVector& l);

/// Divide all entries by the overall gcd (O(P_q(l)) ~ O(P_q(m l))).
WeightVector coprime_normalize(const WeightVector& l);

/// The sharp map: entry i of the result is prod_{j != i} p_j.
WeightVector sharp(const WeightVector& p);

/**
 * Inverts the sharp map on pairwise coprime vectors: returns p with
 * sharp(p) = l and p pairwise coprime, if it exists.  Recovers candidate
 * p_j = l_{i:j} with i = (j+1) mod (n+1), then verifies sharp(p) = l, which
 * makes the choice of i immaterial.  Requires l coprime.
 */
std::optional<PairwiseCoprimeVector> factor_sharp(const WeightVector& l);

/// P(l) ~ CP^n, i.e. factor_sharp succeeds.  Requires l coprime.
bool is_cpn(const WeightVector& l);

/// Admissible multiplication M_k(p): p prime not dividing l_k; multiplies all
/// entries except the k-th by p.
std::optional<WeightVector> admissible_mul(const WeightVector& l, int k, const Int& p);

/// Admissible division D_k(p): p prime, divides every l_i with i != k, does
/// not divide l_k; divides those entries by p.  Left inverse of M_k(p).
std::optional<WeightVector> admissible_div(const WeightVector& l, int k, const Int& p);

struct AdmissibleMove {
    bool division = true;
    int k = 0;
    Int p;
    std::string str() const;
};

/**
 * A sequence of admissible moves carrying l (coprime) to (1,...,1), when one
 * exists; constructed from factor_sharp by dividing out prime factors of each
 * p_k (proof of the classification theorem).  Empty optional if l is not of
 * the form p-sharp.
 */
std::optional<std::vector<AdmissibleMove>> path_to_unit(const WeightVector& l);

}  // namespace qwps

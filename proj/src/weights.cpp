#include "qwps/weights.hpp"

#include <functional>
#include <set>
#include <sstream>

namespace qwps {

WeightVector::WeightVector(std::vector<Int> entries) : entries_(std::move(entries)) {
    if (entries_.size() < 2)
        throw precondition_error("WeightVector: need at least two weights");
    for (const Int& e : entries_)
        if (e < 1) throw precondition_error("WeightVector: weights must be positive");
}

WeightVector::WeightVector(std::initializer_list<long> entries) {
    std::vector<Int> v;
    for (long e : entries) v.emplace_back(e);
    *this = WeightVector(std::move(v));
}

Int WeightVector::ratio(size_t i, size_t j) const {
    return entries_[i] / gcd(entries_[i], entries_[j]);
}

Int WeightVector::product() const {
    Int p = 1;
    for (const Int& e : entries_) p *= e;
    return p;
}

Int WeightVector::overall_gcd() const {
    Int g = 0;
    for (const Int& e : entries_) g = gcd(g, e);
    return g;
}

std::string WeightVector::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < entries_.size(); ++i)
        os << (i ? "," : "") << entries_[i].get_str();
    os << ")";
    return os.str();
}

PairwiseCoprimeVector make_pairwise_coprime(std::vector<Int> entries) {
    WeightVector w(entries);
    if (!is_pairwise_coprime(w))
        throw precondition_error("make_pairwise_coprime: entries are not pairwise coprime");
    return PairwiseCoprimeVector{std::move(entries), w.product()};
}

std::vector<PairwiseCoprimeVector> all_pairwise_coprime(int n, int max_entry) {
    std::vector<PairwiseCoprimeVector> out;
    std::vector<Int> cur(n + 1, 1);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n + 1) {
            WeightVector w(cur);
            if (is_pairwise_coprime(w)) out.push_back(PairwiseCoprimeVector{cur, w.product()});
            return;
        }
        for (int v = 1; v <= max_entry; ++v) {
            cur[pos] = v;
            rec(pos + 1);
        }
    };
    rec(0);
    return out;
}

bool is_coprime(const WeightVector& l) { return l.overall_gcd() == 1; }

bool is_pairwise_coprime(const WeightVector& l) {
    for (size_t i = 0; i < l.size(); ++i)
        for (size_t j = i + 1; j < l.size(); ++j)
            if (gcd(l[i], l[j]) != 1) return false;
    return true;
}

bool is_normalized(const WeightVector& l) {
    std::set<Int> primes;
    for (const Int& e : l.entries())
        for (const Int& p : prime_factors(e)) primes.insert(p);
    for (const Int& p : primes) {
        int not_divisible = 0;
        for (const Int& e : l.entries())
            if (!divides(p, e)) ++not_divisible;
        if (not_divisible < 2) return false;
    }
    return true;
}

WeightVector coprime_normalize(const WeightVector& l) {
    Int g = l.overall_gcd();
    std::vector<Int> v;
    v.reserve(l.size());
    for (const Int& e : l.entries()) v.push_back(e / g);
    return WeightVector(std::move(v));
}

WeightVector sharp(const WeightVector& p) {
    std::vector<Int> v(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
        Int prod = 1;
        for (size_t j = 0; j < p.size(); ++j)
            if (j != i) prod *= p[j];
        v[i] = prod;
    }
    return WeightVector(std::move(v));
}

std::optional<PairwiseCoprimeVector> factor_sharp(const WeightVector& l) {
    if (!is_coprime(l))
        throw precondition_error("factor_sharp: weight vector must be coprime");
    size_t n1 = l.size();
    std::vector<Int> p(n1);
    for (size_t j = 0; j < n1; ++j) p[j] = l.ratio((j + 1) % n1, j);
    WeightVector cand(p);
    if (!is_pairwise_coprime(cand)) return std::nullopt;
    if (!(sharp(cand) == l)) return std::nullopt;
    return PairwiseCoprimeVector{cand.entries(), cand.product()};
}

bool is_cpn(const WeightVector& l) { return factor_sharp(l).has_value(); }

std::optional<WeightVector> admissible_mul(const WeightVector& l, int k, const Int& p) {
    if (k < 0 || static_cast<size_t>(k) >= l.size())
        throw precondition_error("admissible_mul: index out of range");
    if (!is_prime(p)) throw precondition_error("admissible_mul: p must be prime");
    if (divides(p, l[k])) return std::nullopt;
    std::vector<Int> v = l.entries();
    for (size_t i = 0; i < v.size(); ++i)
        if (i != static_cast<size_t>(k)) v[i] *= p;
    return WeightVector(std::move(v));
}

std::optional<WeightVector> admissible_div(const WeightVector& l, int k, const Int& p) {
    if (k < 0 || static_cast<size_t>(k) >= l.size())
        throw precondition_error("admissible_div: index out of range");
    if (!is_prime(p)) throw precondition_error("admissible_div: p must be prime");
    if (divides(p, l[k])) return std::nullopt;
    for (size_t i = 0; i < l.size(); ++i)
        if (i != static_cast<size_t>(k) && !divides(p, l[i])) return std::nullopt;
    std::vector<Int> v = l.entries();
    for (size_t i = 0; i < v.size(); ++i)
        if (i != static_cast<size_t>(k)) v[i] /= p;
    return WeightVector(std::move(v));
}

std::string AdmissibleMove::str() const {
    std::ostringstream os;
    os << (division ? "D_" : "M_") << k << "(" << p.get_str() << ")";
    return os.str();
}

std::optional<std::vector<AdmissibleMove>> path_to_unit(const WeightVector& l) {
    auto p = factor_sharp(l);
    if (!p) return std::nullopt;
    std::vector<AdmissibleMove> path;
    WeightVector cur = l;
    for (size_t k = 0; k < p->entries.size(); ++k) {
        for (const Int& f : prime_factors(p->entries[k])) {
            auto next = admissible_div(cur, static_cast<int>(k), f);
            if (!next)
                throw verification_error("path_to_unit: division expected admissible");
            path.push_back({true, static_cast<int>(k), f});
            cur = *next;
        }
    }
    for (const Int& e : cur.entries())
        if (e != 1) throw verification_error("path_to_unit: did not reach (1,...,1)");
    return path;
}

}  // namespace qwps

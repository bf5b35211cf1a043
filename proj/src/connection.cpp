#include "qwps/connection.hpp"

#include <map>

namespace qwps {

AlgebraElement TensorElement::contract() const {
    if (pairs.empty()) return AlgebraElement();
    AlgebraElement acc(pairs.front().first.n());
    for (const auto& [l, r] : pairs) acc += l * r;
    return acc;
}

AlgebraElement Idempotent::trace() const {
    AlgebraElement acc = entries.empty() ? AlgebraElement() : AlgebraElement(entries[0].n());
    for (size_t i = 0; i < size; ++i) acc += at(i, i);
    return acc;
}

bool Idempotent::is_idempotent() const {
    for (size_t i = 0; i < size; ++i)
        for (size_t j = 0; j < size; ++j) {
            AlgebraElement acc(entries[0].n());
            for (size_t l = 0; l < size; ++l) acc += at(i, l) * at(l, j);
            if (!(acc == at(i, j))) return false;
        }
    return true;
}

StrongConnection::StrongConnection(PairwiseCoprimeVector p)
    : p_(std::move(p)), ell_(sharp(p_.as_weights())) {
    const int n = p_.n();
    a_ = connection_coeffs_a(p_);
    b_ = connection_coeffs_b(p_);
    for (int i = 0; i <= n; ++i) {
        zeta_.push_back(zeta_elem(n, i, p_.at(i)));
        zeta_star_.push_back(zeta_[i].adjoint());
        a_alg_.push_back(a_[i].to_algebra(n));
        b_alg_.push_back(b_[i].to_algebra(n));
    }
}

const TensorElement& StrongConnection::omega_cached(int k) const {
    auto hit = cache_.find(k);
    if (hit != cache_.end()) return hit->second;

    const int n = p_.n();
    if (k == 0) {
        TensorElement w;
        w.pairs.emplace_back(AlgebraElement::one(n), AlgebraElement::one(n));
        return cache_.emplace(0, std::move(w)).first->second;
    }

    const TensorElement& prev = omega_cached(k > 0 ? k - 1 : k + 1);
    std::map<AlgebraElement, AlgebraElement> merged;  // left factor -> summed right
    for (const auto& [l, r] : prev.pairs) {
        for (int i = 0; i <= n; ++i) {
            AlgebraElement nl = (k > 0) ? a_alg_[i] * zeta_[i] * l : b_alg_[i] * zeta_star_[i] * l;
            AlgebraElement nr = (k > 0) ? r * zeta_star_[i] : r * zeta_[i];
            auto it = merged.find(nl);
            if (it == merged.end()) {
                merged.emplace(std::move(nl), std::move(nr));
            } else {
                it->second += nr;
            }
        }
    }
    TensorElement w;
    for (auto& [l, r] : merged)
        if (!l.is_zero() && !r.is_zero()) w.pairs.emplace_back(l, std::move(r));
    if (!w.contract().is_one())
        throw verification_error("strong connection: multiplication identity failed");
    return cache_.emplace(k, std::move(w)).first->second;
}

TensorElement StrongConnection::omega(int k) const { return omega_cached(k); }

Idempotent StrongConnection::idempotent(int k) const {
    const TensorElement& w = omega_cached(k);
    Idempotent e;
    e.size = w.pairs.size();
    e.entries.reserve(e.size * e.size);
    for (size_t i = 0; i < e.size; ++i)
        for (size_t j = 0; j < e.size; ++j)
            e.entries.push_back(w.pairs[i].second * w.pairs[j].first);
    return e;
}

bool StrongConnection::check_grading(int k) const {
    const TensorElement& w = omega_cached(k);
    Int target = Int(k) * p_.product;
    for (const auto& [l, r] : w.pairs) {
        for (const auto& [m, c] : l.terms())
            if (grade(m, ell_) != target) return false;
        for (const auto& [m, c] : r.terms())
            if (grade(m, ell_) != -target) return false;
    }
    return true;
}

}  // namespace qwps

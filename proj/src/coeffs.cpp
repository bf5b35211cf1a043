#include "qwps/coeffs.hpp"

#include <functional>

namespace qwps {

namespace {

CommutingPoly big_x_poly(int n, int i) {
    CommutingPoly s(n);
    for (int j = i + 1; j <= n; ++j) s += CommutingPoly::var(n, j);
    return s;
}

/// Elementary symmetric polynomials e_0..e_m of the given Laurent scalars.
std::vector<Laurent> elementary_symmetric(const std::vector<Laurent>& c) {
    std::vector<Laurent> e(c.size() + 1);
    e[0] = Laurent(1);
    size_t used = 0;
    for (const Laurent& ci : c) {
        ++used;
        for (size_t t = used; t >= 1; --t) e[t] += ci * e[t - 1];
    }
    return e;
}

/// All (s_0,...,s_n) with nonnegative entries summing to total.
void for_each_composition(int slots, int total,
                          const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> s(slots, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == slots - 1) {
            s[pos] = left;
            fn(s);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            s[pos] = v;
            rec(pos + 1, left - v);
        }
    };
    rec(0, total);
}

struct Slots {
    // slot polynomial per index at the current recursion stage
    std::vector<CommutingPoly> slot;
    // replacement data for the pure term: power_k = target_k + rem_k * X_k
    CommutingPoly target;   // zeta zeta^* (resp. zeta^* zeta) as polynomial
    CommutingPoly rem;      // A_k (resp. -B_k, sign folded by caller)
};

}  // namespace

CommutingPoly zz_star_poly(const PairwiseCoprimeVector& p, int i) {
    const int n = p.n();
    CommutingPoly out = CommutingPoly::one(n);
    CommutingPoly xi = CommutingPoly::var(n, i);
    CommutingPoly Xi = big_x_poly(n, i);
    for (int k = 0; k < p.at(i); ++k)
        out = out * (xi + (Laurent(1) - Laurent::q_power(-2L * k)) * Xi);
    return out;
}

CommutingPoly zstar_z_poly(const PairwiseCoprimeVector& p, int i) {
    const int n = p.n();
    CommutingPoly out = CommutingPoly::one(n);
    CommutingPoly xi = CommutingPoly::var(n, i);
    CommutingPoly Xi = big_x_poly(n, i);
    for (int k = 1; k <= p.at(i); ++k)
        out = out * (xi + (Laurent(1) - Laurent::q_power(2L * k)) * Xi);
    return out;
}

namespace {

/**
 * Shared power-and-regroup recursion.  Maintains coefficients c_i with
 *   sum_{i<k} c_i done_i + sum_{i>=k} c_i raw_i = 1
 * and at stage k replaces raw_k^{p_k} = done_k + rem_k * X_k, expressing
 * X_k = sum_{j>k} xk_mix_j * raw_j.  Mixed multinomial terms whose first
 * nonzero index sits at i<k peel one done_i; all others peel one raw_i at the
 * first nonzero index i != k and keep raw_k^{s_k} inside the coefficient.
 */
std::vector<CommutingPoly> regroup_recursion(
    const PairwiseCoprimeVector& p, std::vector<CommutingPoly> c,
    const std::vector<CommutingPoly>& raw, const std::vector<CommutingPoly>& done,
    const std::vector<CommutingPoly>& rem,
    const std::function<Laurent(int k, int j)>& xk_mix) {
    const int n = p.n();

    auto invariant_holds = [&](int stage) {
        CommutingPoly acc(n);
        for (int i = 0; i <= n; ++i) acc += c[i] * (i < stage ? done[i] : raw[i]);
        return acc == CommutingPoly::one(n);
    };
    if (!invariant_holds(0))
        throw verification_error("connection coefficients: base identity failed");

    for (int k = 0; k <= n; ++k) {
        const int pk = p.at(k);
        std::vector<CommutingPoly> next(n + 1, CommutingPoly(n));

        for_each_composition(n + 1, pk, [&](const std::vector<int>& s) {
            int first = -1;
            for (int j = 0; j <= n; ++j)
                if (s[j] > 0) { first = j; break; }
            if (first < 0) return;  // pk = 0 cannot happen (weights >= 1)

            CommutingPoly coef = CommutingPoly::constant(n, Laurent(multinomial(s)));
            for (int j = 0; j <= n; ++j)
                if (s[j] > 0) coef = coef * c[j].pow(s[j]);

            if (first < k) {
                // peel one done_first
                CommutingPoly t = coef * done[first].pow(s[first] - 1);
                for (int j = first + 1; j <= n; ++j)
                    if (s[j] > 0) t = t * (j < k ? done[j] : raw[j]).pow(s[j]);
                next[first] += t;
                return;
            }
            if (s[k] == pk) {
                // pure term: raw_k^{pk} = done_k + rem_k * X_k
                next[k] += coef;
                for (int j = k + 1; j <= n; ++j)
                    next[j] += (xk_mix(k, j) * coef) * rem[k];
                return;
            }
            // first nonzero index != k is > k here; peel one raw at it
            int i = (first == k) ? -1 : first;
            if (i < 0) {
                for (int j = k + 1; j <= n; ++j)
                    if (s[j] > 0) { i = j; break; }
            }
            if (i < 0) throw verification_error("regroup: no peelable slot");
            CommutingPoly t = coef * raw[k].pow(s[k]) * raw[i].pow(s[i] - 1);
            for (int j = i + 1; j <= n; ++j)
                if (j != k && s[j] > 0) t = t * raw[j].pow(s[j]);
            next[i] += t;
        });

        c = std::move(next);
        if (!invariant_holds(k + 1))
            throw verification_error("connection coefficients: stage identity failed");
    }
    return c;
}

}  // namespace

std::vector<CommutingPoly> connection_coeffs_a(const PairwiseCoprimeVector& p) {
    const int n = p.n();
    std::vector<CommutingPoly> raw, done, rem, c;
    for (int i = 0; i <= n; ++i) {
        raw.push_back(CommutingPoly::var(n, i));
        done.push_back(zz_star_poly(p, i));
        c.push_back(CommutingPoly::one(n));
        // A_i with h_i = sum_t e_t x_i^{p_i - t} X_i^t, e_t of (1 - q^{-2k})
        std::vector<Laurent> cs;
        for (int k = 0; k < p.at(i); ++k) cs.push_back(Laurent(1) - Laurent::q_power(-2L * k));
        auto e = elementary_symmetric(cs);
        CommutingPoly xi = CommutingPoly::var(n, i);
        CommutingPoly Xi = big_x_poly(n, i);
        CommutingPoly A(n);
        for (int t = 1; t <= p.at(i); ++t)
            A += e[t] * (xi.pow(p.at(i) - t) * Xi.pow(t - 1));
        // raw^p = done - A * X  =>  rem = -A with X = sum_{j>k} raw_j
        rem.push_back(CommutingPoly(n) - A);
    }
    auto a = regroup_recursion(p, std::move(c), raw, done, rem,
                               [](int, int) { return Laurent(1); });
    if (!verify_solu_a(p, a))
        throw verification_error("connection_coeffs_a: engine identity failed");
    return a;
}

std::vector<CommutingPoly> connection_coeffs_b(const PairwiseCoprimeVector& p) {
    const int n = p.n();
    std::vector<CommutingPoly> raw, done, rem, c;
    for (int i = 0; i <= n; ++i) {
        CommutingPoly xi = CommutingPoly::var(n, i);
        CommutingPoly Xi = big_x_poly(n, i);
        raw.push_back(xi + (Laurent(1) - Laurent::q_power(2)) * Xi);  // z_i^* z_i
        done.push_back(zstar_z_poly(p, i));
        c.push_back(CommutingPoly::constant(n, Laurent::q_power(2L * i)));
        // raw^p - done = B * X, with binomial minus elementary-symmetric data
        std::vector<Laurent> cs;
        for (int k = 1; k <= p.at(i); ++k) cs.push_back(Laurent(1) - Laurent::q_power(2L * k));
        auto e = elementary_symmetric(cs);
        Laurent omq2 = Laurent(1) - Laurent::q_power(2);
        CommutingPoly B(n);
        Laurent pw = Laurent(1);
        for (int t = 1; t <= p.at(i); ++t) {
            pw *= omq2;
            Laurent coef = Laurent(binomial(Int(p.at(i)), t)) * pw - e[t];
            B += coef * (xi.pow(p.at(i) - t) * Xi.pow(t - 1));
        }
        rem.push_back(B);
    }
    // X_k = sum_{j>k} q^{2(j-k-1)} (z_j^* z_j)
    auto b = regroup_recursion(p, std::move(c), raw, done, rem, [](int k, int j) {
        return Laurent::q_power(2L * (j - k - 1));
    });
    if (!verify_solu_b(p, b))
        throw verification_error("connection_coeffs_b: engine identity failed");
    return b;
}

std::pair<CommutingPoly, CommutingPoly> coeffs_n1_closed(int p0, int p1) {
    if (gcd(Int(p0), Int(p1)) != 1)
        throw precondition_error("coeffs_n1_closed: p0, p1 must be coprime");
    CommutingPoly x1 = CommutingPoly::var(1, 1);
    CommutingPoly fx = compose_uni(f_poly(p0), x1);
    CommutingPoly omf = CommutingPoly::one(1) - fx;

    // (1 - f(x_1)) / x_1 is a genuine polynomial (f(0) = 1).
    CommutingPoly quot(1);
    for (const auto& [e, c] : omf.terms()) {
        if (e[0] == 0) throw verification_error("coeffs_n1_closed: 1 - f has constant term");
        quot.add_term({e[0] - 1}, c);
    }

    CommutingPoly a0(1);
    for (int k = 1; k <= p1; ++k)
        a0 += Laurent(binomial(Int(p1), k)) * (fx.pow(k - 1) * omf.pow(p1 - k));
    return {a0, quot.pow(p1)};
}

std::vector<CommutingPoly> coeffs_last_weight(int n, int pn) {
    CommutingPoly xn = CommutingPoly::var(n, n);
    CommutingPoly geo(n);
    for (int k = 0; k < pn; ++k) geo += xn.pow(k);
    std::vector<CommutingPoly> a(n + 1, geo);
    a[n] = CommutingPoly::one(n);
    return a;
}

std::vector<CommutingPoly> coeffs_first_weight(int n, int p0) {
    UniPoly f = f_poly(p0);
    UniPoly omf(f.size());
    omf[0] = Laurent(1) - f[0];
    for (size_t k = 1; k < f.size(); ++k) omf[k] = -f[k];
    UniPoly quot = uni_div_t(omf);
    CommutingPoly t(n);
    for (int i = 1; i <= n; ++i) t += CommutingPoly::var(n, i);
    CommutingPoly shared = compose_uni(quot, t);
    std::vector<CommutingPoly> a(n + 1, shared);
    a[0] = CommutingPoly::one(n);
    return a;
}

bool verify_solu_a(const PairwiseCoprimeVector& p, const std::vector<CommutingPoly>& a) {
    const int n = p.n();
    AlgebraElement acc(n);
    for (int i = 0; i <= n; ++i) {
        AlgebraElement zi = zeta_elem(n, i, p.at(i));
        acc += a[i].to_algebra(n) * zi * zi.adjoint();
    }
    return acc.is_one();
}

bool verify_solu_b(const PairwiseCoprimeVector& p, const std::vector<CommutingPoly>& b) {
    const int n = p.n();
    AlgebraElement acc(n);
    for (int i = 0; i <= n; ++i) {
        AlgebraElement zi = zeta_elem(n, i, p.at(i));
        acc += b[i].to_algebra(n) * zi.adjoint() * zi;
    }
    return acc.is_one();
}

}  // namespace qwps

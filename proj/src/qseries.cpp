#include "qwps/qseries.hpp"

#include <cmath>

namespace qwps {

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
    if (a.empty() || b.empty()) return {};
    UniPoly out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

UniPoly uni_add(const UniPoly& a, const UniPoly& b) {
    UniPoly out(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

bool uni_equal(const UniPoly& a, const UniPoly& b) {
    size_t n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        Laurent ca = i < a.size() ? a[i] : Laurent();
        Laurent cb = i < b.size() ? b[i] : Laurent();
        if (!(ca == cb)) return false;
    }
    return true;
}

UniPoly uni_div_t(const UniPoly& a) {
    if (!a.empty() && !a[0].is_zero())
        throw precondition_error("uni_div_t: constant term is nonzero");
    if (a.size() <= 1) return {};
    return UniPoly(a.begin() + 1, a.end());
}

Laurent uni_eval(const UniPoly& a, const Laurent& t0) {
    Laurent acc;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * t0 + *it;
    return acc;
}

Laurent q_int(int k) {
    if (k < 0) throw precondition_error("q_int: negative argument");
    Laurent out;
    for (int j = 0; j < k; ++j) out += Laurent::q_power(k - 1 - 2 * j);
    return out;
}

Laurent q_factorial(int k) {
    if (k < 0) throw precondition_error("q_factorial: negative argument");
    Laurent out = 1;
    for (int j = 1; j <= k; ++j) out *= q_int(j);
    return out;
}

Laurent q_binomial(int m, int k) {
    if (k < 0 || k > m) throw precondition_error("q_binomial: need 0 <= k <= m");
    // Row-by-row recursion [m+1 k] = q^{-k}[m k] + q^{m-k+1}[m k-1].
    std::vector<Laurent> row{Laurent(1)};
    for (int mm = 0; mm < m; ++mm) {
        std::vector<Laurent> next(mm + 2);
        for (int kk = 0; kk <= mm + 1; ++kk) {
            Laurent v;
            if (kk <= mm) v += Laurent::q_power(-kk) * row[kk];
            if (kk >= 1) v += Laurent::q_power(mm - kk + 1) * row[kk - 1];
            next[kk] = v;
        }
        row = std::move(next);
    }
    return row[k];
}

Laurent q_shifted(int m, int k) {
    if (!(0 <= k && k < m)) throw precondition_error("q_shifted: need 0 <= k < m");
    return q_shifted_or_one(m, k);
}

Laurent q_shifted_or_one(int m, int k) {
    if (!(0 <= k && k <= m)) throw precondition_error("q_shifted_or_one: need 0 <= k <= m");
    Laurent out = 1;
    for (int j = k + 1; j <= m; ++j) out *= Laurent(1) - Laurent::q_power(2 * j);
    return out;
}

double q_shifted_value(int m, int k, double q) {
    double out = 1.0;
    for (int j = k + 1; j <= m; ++j) out *= 1.0 - std::pow(q, 2.0 * j);
    return out;
}

UniPoly f_poly(int p0) {
    if (p0 < 1) throw precondition_error("f_poly: need p0 >= 1");
    UniPoly out(static_cast<size_t>(p0) + 1);
    for (int k = 0; k <= p0; ++k) {
        Laurent c = q_binomial(p0, k) * Laurent::q_power(-static_cast<long>(k) * (p0 - 1));
        if (k % 2 == 1) c = -c;
        out[k] = c;
    }
    return out;
}

}  // namespace qwps

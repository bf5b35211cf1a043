#include "qwps/repr.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "qwps/qseries.hpp"

namespace qwps {

namespace {
int sum_prefix(const State& s, int count) {
    int t = 0;
    for (int i = 0; i < count; ++i) t += s[i];
    return t;
}
}  // namespace

// ---------------------------------------------------------------------------
// SphereRep

SphereRep::SphereRep(PairwiseCoprimeVector p, double q, Amp lambda)
    : p_(std::move(p)), n_(p_.n()), q_(q), lambda_(lambda) {
    if (!(q > 0.0 && q < 1.0)) throw precondition_error("SphereRep: need 0 < q < 1");
}

std::optional<Hit> SphereRep::z(int i, bool star, const State& s) const {
    const double qp = std::pow(q_, sum_prefix(s, i < n_ ? i : n_));
    if (i == n_) {
        Amp amp = (star ? std::conj(lambda_) : lambda_) * qp;
        return Hit{s, amp};
    }
    if (!star) {
        State t = s;
        t[i] += 1;
        return Hit{t, qp * std::sqrt(1.0 - std::pow(q_, 2.0 * (s[i] + 1)))};
    }
    if (s[i] == 0) return std::nullopt;
    State t = s;
    t[i] -= 1;
    return Hit{t, qp * std::sqrt(1.0 - std::pow(q_, 2.0 * s[i]))};
}

double SphereRep::x_value(int i, const State& s) const {
    if (i == n_) return std::pow(q_, 2.0 * sum_prefix(s, n_));
    return std::pow(q_, 2.0 * sum_prefix(s, i)) * (1.0 - std::pow(q_, 2.0 * s[i]));
}

std::optional<Hit> SphereRep::zeta(int i, const State& s) const {
    const int pi = p_.at(i);
    if (i == n_) {
        Amp amp = std::pow(lambda_, pi) * std::pow(q_, pi * sum_prefix(s, n_));
        return Hit{s, amp};
    }
    State t = s;
    t[i] += pi;
    double amp = std::pow(q_, static_cast<double>(pi) * sum_prefix(s, i)) *
                 std::sqrt(q_shifted_value(s[i] + pi, s[i], q_));
    return Hit{t, amp};
}

std::optional<Hit> SphereRep::zeta_star(int i, const State& s) const {
    const int pi = p_.at(i);
    if (i == n_) {
        Amp amp = std::pow(std::conj(lambda_), pi) * std::pow(q_, pi * sum_prefix(s, n_));
        return Hit{s, amp};
    }
    if (s[i] < pi) return std::nullopt;
    State t = s;
    t[i] -= pi;
    double amp = std::pow(q_, static_cast<double>(pi) * sum_prefix(s, i)) *
                 std::sqrt(q_shifted_value(s[i], s[i] - pi, q_));
    return Hit{t, amp};
}

// ---------------------------------------------------------------------------
// LensIrrep

LensIrrep::LensIrrep(PairwiseCoprimeVector p, std::vector<int> r, double q)
    : p_(std::move(p)), r_(std::move(r)), n_(p_.n()), q_(q) {
    if (static_cast<int>(r_.size()) != n_)
        throw precondition_error("LensIrrep: remainder vector must have n entries");
    for (int i = 0; i < n_; ++i)
        if (r_[i] < 0 || r_[i] >= p_.at(i))
            throw precondition_error("LensIrrep: need 0 <= r_i < p_i");
    if (!(q > 0.0 && q < 1.0)) throw precondition_error("LensIrrep: need 0 < q < 1");
}

bool LensIrrep::in_domain(const State& s) const {
    for (int i = 1; i < n_; ++i)
        if (s[i] < s[i - 1]) return false;
    return true;
}

double LensIrrep::diag_exponent_prefix(int i, const State& s) const {
    // sum_{j<i} r_j + sum_{j=1}^{i} p_{j-1} (m_j - m_{j-1}),  m_0 = 0
    long e = 0;
    for (int j = 0; j < i; ++j) e += r_[j];
    for (int j = 1; j <= i; ++j) e += p_.at(j - 1) * (s[j - 1] - (j >= 2 ? s[j - 2] : 0));
    return static_cast<double>(e);
}

double LensIrrep::x_value(int i, const State& s) const {
    if (!in_domain(s)) return 0.0;
    double pref = std::pow(q_, 2.0 * diag_exponent_prefix(i, s));
    if (i == n_) return pref;
    int delta = s[i] - (i >= 1 ? s[i - 1] : 0);
    return pref * (1.0 - std::pow(q_, 2.0 * (r_[i] + p_.at(i) * delta)));
}

std::optional<Hit> LensIrrep::zeta(int i, const State& s) const {
    if (!in_domain(s)) return std::nullopt;
    // zeta_i = z_i^{p_i} inherits p_i times the full diagonal exponent of the
    // sphere state, q^{p_i (sum r_j + sum p_{j-1} Delta_j)}.
    double pref = std::pow(q_, p_.at(i) * diag_exponent_prefix(i, s));
    if (i == n_) return Hit{s, pref};
    int delta = s[i] - (i >= 1 ? s[i - 1] : 0);
    int lo = p_.at(i) * delta + r_[i];
    double amp = pref * std::sqrt(q_shifted_value(lo + p_.at(i), lo, q_));
    State t = s;
    for (int u = i; u < n_; ++u) t[u] += 1;
    return Hit{t, amp};
}

std::optional<Hit> LensIrrep::zeta_star(int i, const State& s) const {
    if (!in_domain(s)) return std::nullopt;
    if (i == n_) return zeta(i, s);  // real diagonal
    State t = s;
    for (int u = i; u < n_; ++u) {
        if (t[u] == 0) return std::nullopt;
        t[u] -= 1;
    }
    if (!in_domain(t)) return std::nullopt;
    auto up = zeta(i, t);
    if (!up) return std::nullopt;
    return Hit{t, std::conj(up->amp)};
}

// ---------------------------------------------------------------------------
// PiKRep

PiKRep::PiKRep(int h, int k, PairwiseCoprimeVector p, std::vector<int> r, double q)
    : h_(h), k_(k), p_(std::move(p)), r_(std::move(r)), q_(q) {
    if (h_ < 1 || k_ < 0 || k_ > h_) throw precondition_error("PiKRep: need 0 <= k <= h");
    if (p_.n() < h_) throw precondition_error("PiKRep: weight data shorter than level");
    if (static_cast<int>(r_.size()) != h_)
        throw precondition_error("PiKRep: remainder vector must have h entries");
    for (int i = 0; i < h_; ++i)
        if (r_[i] < 0 || r_[i] >= p_.at(i))
            throw precondition_error("PiKRep: need 0 <= r_i < p_i");
    if (!(q > 0.0 && q < 1.0)) throw precondition_error("PiKRep: need 0 < q < 1");
}

bool PiKRep::in_domain(const State& s) const {
    for (int i = 1; i < k_; ++i)
        if (s[i] < s[i - 1]) return false;
    for (int i = k_ + 1; i < h_; ++i)
        if (s[i - 1] <= s[i]) return false;
    return true;
}

double PiKRep::diag_exponent_prefix(int i, const State& s) const {
    long e = 0;
    for (int j = 0; j < i; ++j) e += r_[j];
    for (int j = 1; j <= i; ++j) e += p_.at(j - 1) * (s[j - 1] - (j >= 2 ? s[j - 2] : 0));
    return static_cast<double>(e);
}

long PiKRep::x_big_exponent(int i, const State& s) const {
    long e = 0;
    for (int j = 0; j < i; ++j) e += r_[j];
    for (int j = 1; j <= i; ++j) e += p_.at(j - 1) * (s[j - 1] - (j >= 2 ? s[j - 2] : 0));
    return e;
}

double PiKRep::x_value(int i, const State& s) const {
    if (i > k_ || !in_domain(s)) return 0.0;
    double pref = std::pow(q_, 2.0 * diag_exponent_prefix(i, s));
    if (i == k_) return pref;
    int delta = s[i] - (i >= 1 ? s[i - 1] : 0);
    return pref * (1.0 - std::pow(q_, 2.0 * (r_[i] + p_.at(i) * delta)));
}

std::optional<Hit> PiKRep::zeta(int i, const State& s) const {
    if (i > k_ || !in_domain(s)) return std::nullopt;
    double pref = std::pow(q_, p_.at(i) * diag_exponent_prefix(i, s));
    if (i == k_) return Hit{s, pref};
    int delta = s[i] - (i >= 1 ? s[i - 1] : 0);
    int lo = p_.at(i) * delta + r_[i];
    double amp = pref * std::sqrt(q_shifted_value(lo + p_.at(i), lo, q_));
    State t = s;
    for (int u = i; u < k_; ++u) t[u] += 1;
    return Hit{t, amp};
}

std::optional<Hit> PiKRep::zeta_star(int i, const State& s) const {
    if (i > k_ || !in_domain(s)) return std::nullopt;
    if (i == k_) return zeta(i, s);
    State t = s;
    for (int u = i; u < k_; ++u) {
        if (t[u] == 0) return std::nullopt;
        t[u] -= 1;
    }
    if (!in_domain(t)) return std::nullopt;
    auto up = zeta(i, t);
    if (!up) return std::nullopt;
    return Hit{t, std::conj(up->amp)};
}

// ---------------------------------------------------------------------------
// Application machinery

int max_up_shift(const AlgebraElement& a, const LensRep& rep) {
    int worst = 0;
    for (const auto& [m, c] : a.terms()) {
        int total = 0;
        for (int i = 0; i <= m.n() && i <= rep.top_index(); ++i) {
            int d = m.zpow[i] - m.spow[i];
            if (d > 0) total += (d / std::max(1, rep.p_at(i))) * std::max(1, rep.zeta_span(i));
        }
        worst = std::max(worst, total);
    }
    return worst;
}

namespace {

struct Branch {
    State s;
    Amp amp;
};

// Y_i(count) = prod_{t=0}^{count-1} { x_i + (1 - q^{-2t}) X_i }, a diagonal
// operator in every representation here; its value on |s> equals the
// eigenvalue of z_i^{count} (z_i^*)^{count}.
double y_diag_value(const LensRep& rep, int i, int count, const State& s) {
    const double q = rep.qval();
    double xv = rep.x_value(i, s);
    double Xv = 0.0;
    for (int u = i + 1; u <= rep.top_index(); ++u) Xv += rep.x_value(u, s);
    double out = 1.0;
    for (int t = 0; t < count; ++t) out *= xv + (1.0 - std::pow(q, -2.0 * t)) * Xv;
    return out;
}

void add_amp(std::map<State, Amp>& acc, const State& s, Amp a) {
    if (a == Amp(0.0)) return;
    auto [it, fresh] = acc.emplace(s, a);
    if (!fresh) it->second += a;
}

}  // namespace

ApplyResult apply(const AlgebraElement& a, const LensRep& rep, const State& s0, int cutoff) {
    if (static_cast<int>(s0.size()) != rep.dims())
        throw precondition_error("apply: state has wrong arity");
    if (a.n() != rep.top_index())
        throw precondition_error("apply: element dimension does not match representation");
    const double q = rep.qval();
    ApplyResult res;

    for (const auto& [m, coeff] : a.terms()) {
        std::vector<Branch> cur;
        if (rep.in_domain(s0)) cur.push_back({s0, Amp(1.0)});
        for (int i = rep.top_index(); i >= 0 && !cur.empty(); --i) {
            const int zj = m.zpow[i], sk = m.spow[i];
            if (zj == 0 && sk == 0) continue;
            const int d = zj - sk;
            const int pi = rep.p_at(i);
            if (d % pi != 0)
                throw precondition_error(
                    "apply: monomial is not in the lens subalgebra for this p");
            const int steps = std::abs(d) / pi;
            std::vector<Branch> next;
            for (Branch& br : cur) {
                if (d >= 0) {
                    double y = y_diag_value(rep, i, sk, br.s);
                    Amp amp = br.amp * y;
                    State st = br.s;
                    bool dead = (amp == Amp(0.0));
                    for (int t = 0; t < steps && !dead; ++t) {
                        auto hit = rep.zeta(i, st);
                        if (!hit) { dead = true; break; }
                        st = hit->state;
                        amp *= hit->amp;
                        if (norm1(st) > cutoff) {
                            res.truncated = true;
                            dead = true;
                        }
                    }
                    if (!dead) next.push_back({st, amp});
                } else {
                    State st = br.s;
                    Amp amp = br.amp;
                    bool dead = false;
                    for (int t = 0; t < steps && !dead; ++t) {
                        auto hit = rep.zeta_star(i, st);
                        if (!hit) { dead = true; break; }
                        st = hit->state;
                        amp *= hit->amp;
                    }
                    if (!dead) {
                        amp *= y_diag_value(rep, i, zj, st);
                        if (amp != Amp(0.0)) next.push_back({st, amp});
                    }
                }
            }
            cur = std::move(next);
        }
        const double cval = coeff.eval(q);
        for (const Branch& br : cur) add_amp(res.out, br.s, cval * br.amp);
    }
    return res;
}

ApplyResult apply_z(const AlgebraElement& a, const SphereRep& rep, const State& s0, int cutoff) {
    if (static_cast<int>(s0.size()) != rep.dims())
        throw precondition_error("apply_z: state has wrong arity");
    ApplyResult res;
    const double q = rep.qval();
    for (const auto& [m, coeff] : a.terms()) {
        Word w = m.word();
        std::vector<Branch> cur{{s0, Amp(1.0)}};
        for (auto it = w.rbegin(); it != w.rend() && !cur.empty(); ++it) {
            std::vector<Branch> next;
            for (Branch& br : cur) {
                auto hit = rep.z(it->index, it->star, br.s);
                if (!hit) continue;
                if (norm1(hit->state) > cutoff) {
                    res.truncated = true;
                    continue;
                }
                next.push_back({hit->state, br.amp * hit->amp});
            }
            cur = std::move(next);
        }
        const double cval = coeff.eval(q);
        for (const Branch& br : cur) add_amp(res.out, br.s, cval * br.amp);
    }
    return res;
}

// ---------------------------------------------------------------------------
// Bases and matrices

std::vector<State> enumerate_lattice(int dims, int cutoff) {
    std::vector<State> out;
    State cur(dims, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == dims) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[pos] = v;
            rec(pos + 1, left - v);
        }
        cur[pos] = 0;
    };
    rec(0, cutoff);
    return out;
}

namespace {
bool in_vhk(const State& s, int h, int k) {
    for (int i = 1; i < k; ++i)
        if (s[i] < s[i - 1]) return false;
    for (int i = k + 1; i < h; ++i)
        if (s[i - 1] <= s[i]) return false;
    return true;
}
}  // namespace

std::vector<State> subspace_basis(int h, int k, int cutoff) {
    std::vector<State> out;
    for (State& s : enumerate_lattice(h, cutoff))
        if (in_vhk(s, h, k)) out.push_back(std::move(s));
    return out;
}

std::vector<State> intersection_basis(int h, int k, int cutoff) {
    if (k < 1 || k > h) throw precondition_error("intersection_basis: need 1 <= k <= h");
    std::vector<State> out;
    for (State& s : enumerate_lattice(h, cutoff)) {
        bool ok = true;
        for (int i = 1; i < k && ok; ++i)
            if (s[i] < s[i - 1]) ok = false;
        for (int i = k; i < h && ok; ++i)  // m_k > m_{k+1} > ... > m_h >= 0
            if (s[i - 1] <= s[i]) ok = false;
        if (ok) out.push_back(std::move(s));
    }
    return out;
}

SparseMatrix matrix_of(const AlgebraElement& a, const LensRep& rep, int cutoff) {
    SparseMatrix mat;
    mat.basis = enumerate_lattice(rep.dims(), cutoff);
    std::map<State, int> index;
    for (size_t i = 0; i < mat.basis.size(); ++i) index[mat.basis[i]] = static_cast<int>(i);
    for (size_t col = 0; col < mat.basis.size(); ++col) {
        ApplyResult r = apply(a, rep, mat.basis[col], cutoff);
        mat.truncated = mat.truncated || r.truncated;
        for (const auto& [s, amp] : r.out) {
            auto it = index.find(s);
            if (it == index.end()) {
                mat.truncated = true;
                continue;
            }
            if (std::abs(amp) > 0.0)
                mat.entries[{it->second, static_cast<int>(col)}] = amp;
        }
    }
    return mat;
}

std::string SparseMatrix::coordinate_text() const {
    std::ostringstream os;
    for (const auto& [rc, v] : entries) {
        os << rc.first << " " << rc.second << " ";
        if (std::abs(v.imag()) < 1e-14) {
            os << v.real();
        } else {
            os << v.real() << (v.imag() < 0 ? "" : "+") << v.imag() << "i";
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace qwps

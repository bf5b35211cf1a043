#include "qwps/algebra.hpp"

#include <sstream>

namespace qwps {

int NormalMonomial::degree() const {
    int d = 0;
    for (size_t i = 0; i < zpow.size(); ++i) d += zpow[i] + spow[i];
    return d;
}

int NormalMonomial::length() const {
    int len = 0;
    for (size_t i = 0; i < zpow.size(); ++i)
        if (zpow[i] + spow[i] > 0) ++len;
    return len;
}

Word NormalMonomial::word() const {
    Word w;
    for (size_t i = 0; i < zpow.size(); ++i) {
        for (int t = 0; t < zpow[i]; ++t) w.push_back({static_cast<int>(i), false});
        for (int t = 0; t < spow[i]; ++t) w.push_back({static_cast<int>(i), true});
    }
    return w;
}

std::string NormalMonomial::str() const {
    if (is_unit()) return "1";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](int i, bool star, int e) {
        if (e == 0) return;
        if (!first) os << " ";
        first = false;
        os << "z" << i << (star ? "*" : "");
        if (e > 1) os << "^" << e;
    };
    for (size_t i = 0; i < zpow.size(); ++i) {
        emit(static_cast<int>(i), false, zpow[i]);
        emit(static_cast<int>(i), true, spow[i]);
    }
    return os.str();
}

AlgebraElement AlgebraElement::one(int n) {
    AlgebraElement a(n);
    a.terms_[NormalMonomial::unit(n)] = Laurent(1);
    return a;
}

AlgebraElement AlgebraElement::monomial(NormalMonomial m, Laurent c) {
    AlgebraElement a(m.n());
    if (!c.is_zero()) a.terms_[std::move(m)] = std::move(c);
    return a;
}

bool AlgebraElement::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_unit() &&
           terms_.begin()->second.is_one();
}

void AlgebraElement::add_term(const NormalMonomial& m, const Laurent& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    if (terms_.empty() && o.n_ != n_ && n_ == 0) n_ = o.n_;
    if (n_ != o.n_) throw precondition_error("AlgebraElement: dimension mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    if (terms_.empty() && o.n_ != n_ && n_ == 0) n_ = o.n_;
    if (n_ != o.n_) throw precondition_error("AlgebraElement: dimension mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

AlgebraElement operator*(const Laurent& c, AlgebraElement a) {
    if (c.is_zero()) return AlgebraElement::zero(a.n());
    for (auto& [m, cc] : a.terms_) cc *= c;
    return a;
}

AlgebraElement& AlgebraElement::add_scaled(const Laurent& c, const AlgebraElement& o) {
    if (terms_.empty() && o.n_ != n_ && n_ == 0) n_ = o.n_;
    if (n_ != o.n_) throw precondition_error("AlgebraElement: dimension mismatch");
    if (c.is_zero()) return *this;
    if (c.is_one()) return *this += o;
    for (const auto& [m, cc] : o.terms_) add_term(m, c * cc);
    return *this;
}

namespace {

// z_t z_t^* left-multiplied into an element whose monomials only involve
// indices > i (the expansion of X_i or of the unit-sphere relation).
AlgebraElement xpair_times(int t, const AlgebraElement& a) {
    return gen_times({t, false}, gen_times({t, true}, a));
}

// Eliminates one z_0 z_0^* pair of the block-0 prefix:
//   z_0^j (z_0^*)^k rest = z_0^{j-1} (z_0^*)^{k-1} rest
//       - q^{-2(k-1)} sum_{t>=1} z_0^{j-1} (z_0^*)^{k-1} (z_t z_t^* rest)
// where rest holds the blocks 1..n of m.  Recurses until min(j,k) = 0.
AlgebraElement reduce_block0(NormalMonomial m) {
    const int n = m.n();
    if (m.zpow[0] == 0 || m.spow[0] == 0) return AlgebraElement::monomial(std::move(m));

    NormalMonomial rest = m;
    rest.zpow[0] = rest.spow[0] = 0;
    const int j = m.zpow[0], k = m.spow[0];

    AlgebraElement tail = AlgebraElement::monomial(rest);
    AlgebraElement sum = AlgebraElement::zero(n);
    for (int t = 1; t <= n; ++t) sum += xpair_times(t, tail);
    AlgebraElement inner = tail - (Laurent::q_power(-2L * (k - 1)) * sum);

    AlgebraElement out = AlgebraElement::zero(n);
    for (const auto& [mm, cc] : inner.terms()) {
        NormalMonomial w = mm;
        w.zpow[0] += j - 1;
        w.spow[0] += k - 1;
        out += cc * reduce_block0(std::move(w));
    }
    return out;
}

AlgebraElement gen_times_mono(const Gen& g, const NormalMonomial& m) {
    const int n = m.n();
    const int i = g.index;

    // Commuting g past the blocks s < i contributes q^{j_s - k_s} per block,
    // for z_i and z_i^* alike.
    long e = 0;
    for (int s = 0; s < i; ++s) e += m.zpow[s] - m.spow[s];
    const Laurent pass = Laurent::q_power(e);

    if (!g.star) {
        NormalMonomial w = m;
        w.zpow[i] += 1;
        AlgebraElement res = (i == 0) ? reduce_block0(std::move(w))
                                      : AlgebraElement::monomial(std::move(w));
        return pass * std::move(res);
    }

    // g = z_i^*
    if (m.zpow[i] == 0 || i == n) {
        // Plain append ([z_n^*, z_n] = 0 lets z_n^* slide through z_n^j).
        NormalMonomial w = m;
        w.spow[i] += 1;
        return pass * AlgebraElement::monomial(std::move(w));
    }

    // z_i^* z_i^j = z_i^j z_i^* + (1 - q^{2j}) z_i^{j-1} X_i, i < n.
    const int j = m.zpow[i], k = m.spow[i];
    AlgebraElement out(n);

    NormalMonomial direct = m;
    direct.spow[i] += 1;
    if (i == 0) {
        out += reduce_block0(std::move(direct));
    } else {
        out += AlgebraElement::monomial(std::move(direct));
    }

    NormalMonomial suffix = m;
    for (int s = 0; s <= i; ++s) suffix.zpow[s] = suffix.spow[s] = 0;
    AlgebraElement tail = AlgebraElement::monomial(suffix);

    Laurent coef = (Laurent(1) - Laurent::q_power(2L * j)) * Laurent::q_power(-2L * k);
    AlgebraElement sum = AlgebraElement::zero(n);
    for (int t = i + 1; t <= n; ++t) sum += xpair_times(t, tail);
    sum = coef * std::move(sum);

    for (const auto& [mm, cc] : sum.terms()) {
        NormalMonomial w = mm;
        for (int s = 0; s < i; ++s) {
            w.zpow[s] = m.zpow[s];
            w.spow[s] = m.spow[s];
        }
        w.zpow[i] = j - 1;
        w.spow[i] = k;
        out.add_term(w, cc);
    }
    return pass * std::move(out);
}

}  // namespace

namespace {

// The rewriting recursion revisits the same (generator, monomial) pairs many
// times inside large products; memoization keeps the strong-connection and
// relation workloads tractable.  thread_local: concurrent callers each warm
// their own table, no coordination.
const AlgebraElement& gen_times_mono_cached(const Gen& g, const NormalMonomial& m) {
    thread_local std::map<std::pair<std::pair<int, bool>, NormalMonomial>, AlgebraElement>
        cache;
    auto key = std::make_pair(std::make_pair(g.index, g.star), m);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(std::move(key), gen_times_mono(g, m)).first;
    return it->second;
}

}  // namespace

AlgebraElement gen_times(const Gen& g, const AlgebraElement& a) {
    AlgebraElement out(a.n());
    for (const auto& [m, c] : a.terms()) out.add_scaled(c, gen_times_mono_cached(g, m));
    return out;
}

AlgebraElement normal_form(int n, const Word& w) {
    AlgebraElement acc = AlgebraElement::one(n);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (it->index < 0 || it->index > n)
            throw precondition_error("normal_form: generator index out of range");
        acc = gen_times(*it, acc);
    }
    return acc;
}

namespace {

// Monomial-pair products recur massively inside idempotency checks and the
// strong-connection verification; cache them.  The table is bounded: once it
// grows past the cap, further products are computed without caching.
const AlgebraElement& mono_times_mono_cached(const NormalMonomial& a, const NormalMonomial& b,
                                             AlgebraElement& scratch) {
    constexpr size_t kCacheCap = 1u << 21;
    thread_local std::map<std::pair<NormalMonomial, NormalMonomial>, AlgebraElement> cache;
    auto compute = [&](AlgebraElement& out) {
        out = AlgebraElement::monomial(b);
        Word w = a.word();
        for (auto it = w.rbegin(); it != w.rend(); ++it) out = gen_times(*it, out);
    };
    auto key = std::make_pair(a, b);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    if (cache.size() >= kCacheCap) {
        compute(scratch);
        return scratch;
    }
    AlgebraElement out;
    compute(out);
    return cache.emplace(std::move(key), std::move(out)).first->second;
}

}  // namespace

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.n() != b.n()) throw precondition_error("AlgebraElement: dimension mismatch");
    AlgebraElement out(a.n());
    AlgebraElement scratch;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            out.add_scaled(ca * cb, mono_times_mono_cached(ma, mb, scratch));
    return out;
}

AlgebraElement AlgebraElement::adjoint() const {
    AlgebraElement out(n_);
    for (const auto& [m, c] : terms_) {
        Word w = m.word();
        Word rev;
        rev.reserve(w.size());
        for (auto it = w.rbegin(); it != w.rend(); ++it) rev.push_back({it->index, !it->star});
        out += c * normal_form(n_, rev);  // rational coefficients: conj = id
    }
    return out;
}

AlgebraElement AlgebraElement::pow(int e) const {
    if (e < 0) throw precondition_error("AlgebraElement::pow: negative exponent");
    AlgebraElement acc = AlgebraElement::one(n_);
    for (int t = 0; t < e; ++t) acc = acc * *this;
    return acc;
}

std::string AlgebraElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (!m.is_unit()) os << "*" << m.str();
    }
    return os.str();
}

Int grade(const NormalMonomial& m, const WeightVector& l) {
    if (l.size() != m.zpow.size())
        throw precondition_error("grade: weight vector length mismatch");
    Int g = 0;
    for (size_t i = 0; i < l.size(); ++i) g += Int(m.zpow[i] - m.spow[i]) * l[i];
    return g;
}

bool is_invariant(const AlgebraElement& a, const WeightVector& l) {
    for (const auto& [m, c] : a.terms())
        if (grade(m, l) != 0) return false;
    return true;
}

bool is_lens_invariant(const AlgebraElement& a, const WeightVector& l, const Int& p) {
    for (const auto& [m, c] : a.terms())
        if (!divides(p, grade(m, l))) return false;
    return true;
}

AlgebraElement x_elem(int n, int i) {
    return normal_form(n, {{i, false}, {i, true}});
}

AlgebraElement big_x_elem(int n, int i) {
    AlgebraElement out(n);
    for (int t = i + 1; t <= n; ++t) out += x_elem(n, t);
    return out;
}

AlgebraElement zeta_elem(int n, int i, int pi) {
    NormalMonomial m = NormalMonomial::unit(n);
    m.zpow[i] = pi;
    return AlgebraElement::monomial(std::move(m));
}

AlgebraElement xi_elem(const WeightVector& l, int i, int j) {
    const int n = l.n();
    if (i < 0 || i > n || j < 0 || j > n) throw precondition_error("xi_elem: bad index");
    Word w;
    if (i == j) {
        w = {{i, true}, {i, false}};
    } else {
        int a = static_cast<int>(l.ratio(j, i).get_si());
        int b = static_cast<int>(l.ratio(i, j).get_si());
        for (int t = 0; t < a; ++t) w.push_back({i, true});
        for (int t = 0; t < b; ++t) w.push_back({j, false});
    }
    return normal_form(n, w);
}

bool verify_relation(const AlgebraElement& lhs, const AlgebraElement& rhs) {
    return (lhs - rhs).is_zero();
}

}  // namespace qwps

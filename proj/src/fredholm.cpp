#include "qwps/fredholm.hpp"

#include <cmath>
#include <sstream>

namespace qwps {

namespace {

std::string join_ints(const std::vector<int>& v, const char* sep) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
    return os.str();
}

PairwiseCoprimeVector prefix(const PairwiseCoprimeVector& p, int h) {
    std::vector<Int> e(p.entries.begin(), p.entries.begin() + h + 1);
    Int prod = 1;
    for (const Int& x : e) prod *= x;
    return PairwiseCoprimeVector{std::move(e), prod};
}

void check_label(const FredholmLabel& label, const PairwiseCoprimeVector& p) {
    if (label.h < 0 || label.h > p.n())
        throw precondition_error("Fredholm label: level out of range");
    if (static_cast<int>(label.r.size()) != label.h)
        throw precondition_error("Fredholm label: remainder arity mismatch");
    for (int i = 0; i < label.h; ++i)
        if (label.r[i] < 0 || label.r[i] >= p.at(i))
            throw precondition_error("Fredholm label: need 0 <= r_i < p_i");
}

}  // namespace

std::string FredholmLabel::str() const {
    return "F(" + std::to_string(h) + ";" + join_ints(r, ",") + ")";
}

std::string ProjectionLabel::str() const {
    return "P(" + std::to_string(m) + ";" + join_ints(alpha, ",") + ")";
}

std::vector<FredholmLabel> all_fredholm_labels(const PairwiseCoprimeVector& p) {
    std::vector<FredholmLabel> out{{0, {}}};
    for (int h = 1; h <= p.n(); ++h) {
        std::vector<std::vector<int>> rs{{}};
        for (int i = 0; i < h; ++i) {
            std::vector<std::vector<int>> next;
            for (const auto& base : rs)
                for (int v = 0; v < p.at(i); ++v) {
                    auto r = base;
                    r.push_back(v);
                    next.push_back(std::move(r));
                }
            rs = std::move(next);
        }
        for (auto& r : rs) out.push_back({h, std::move(r)});
    }
    return out;
}

Int fredholm_label_count(const PairwiseCoprimeVector& p) {
    Int total = 1;
    Int run = 1;
    for (int k = 1; k <= p.n(); ++k) {
        run *= p.entries[k - 1];
        total += run;
    }
    return total;
}

AlgebraElement pullback(const AlgebraElement& a, int h) {
    AlgebraElement out(h);
    for (const auto& [m, c] : a.terms()) {
        bool survives = true;
        for (int i = h + 1; i <= m.n() && survives; ++i)
            if (m.zpow[i] != 0 || m.spow[i] != 0) survives = false;
        if (!survives) continue;
        NormalMonomial mm;
        mm.zpow.assign(m.zpow.begin(), m.zpow.begin() + h + 1);
        mm.spow.assign(m.spow.begin(), m.spow.begin() + h + 1);
        out.add_term(mm, c);
    }
    return out;
}

TraceResult trace_difference(const AlgebraElement& a, const FredholmLabel& label,
                             const PairwiseCoprimeVector& p, double q, int cutoff) {
    check_label(label, p);
    if (!(q > 0.0 && q < 1.0)) throw precondition_error("trace_difference: need 0 < q < 1");
    if (!is_invariant(a, sharp(p.as_weights())))
        throw precondition_error("trace_difference: element is not projective-invariant");

    const int h = label.h;
    TraceResult res;
    res.cutoff = cutoff;

    if (h == 0) {
        // Rank-one module of the scalars: value is the scalar part of a.
        AlgebraElement a0 = pullback(a, 0);
        for (const auto& [m, c] : a0.terms())
            if (m.is_unit()) res.value = c.eval(q);
        return res;
    }

    AlgebraElement ah = pullback(a, h);
    PairwiseCoprimeVector ph = prefix(p, h);
    std::vector<PiKRep> reps;
    for (int k = 0; k <= h; ++k) reps.emplace_back(h, k, ph, label.r, q);

    long double acc = 0.0L;
    for (const State& s : enumerate_lattice(h, cutoff)) {
        for (int k = 0; k <= h; ++k) {
            Amp d = apply(ah, reps[k], s, cutoff + max_up_shift(ah, reps[k])).at(s);
            acc += (k % 2 == 0 ? 1.0L : -1.0L) * static_cast<long double>(d.real());
        }
    }
    res.value = static_cast<double>(acc);

    // Tail: per-monomial envelope |coeff| * deg * q^{-deg} against the
    // intersection-state count with m_k >= floor(cutoff/h) + 1.
    double env = 0.0;
    for (const auto& [m, c] : ah.terms()) {
        int deg = m.degree();
        if (deg == 0) continue;  // scalars cancel exactly between pi_+ and pi_-
        env += std::abs(c.eval(q)) * deg * std::pow(q, -deg);
    }
    double tail = 0.0;
    int t0 = cutoff / h + 1;
    for (int k = 1; k <= h; ++k) {
        double term = 1.0, sum = 0.0;
        for (int mk = t0; term > 1e-18 * (1.0 + sum) && mk < t0 + 100000; ++mk) {
            term = binomial(Int(mk + k - 1), k - 1).get_d() *
                   binomial(Int(mk), h - k).get_d() * std::pow(q, mk);
            sum += term;
        }
        tail += sum;
    }
    res.tail_bound = env * tail;
    return res;
}

TraceResult trace_difference_auto(const AlgebraElement& a, const FredholmLabel& label,
                                  const PairwiseCoprimeVector& p, double q, int cutoff,
                                  int max_cutoff) {
    TraceResult t = trace_difference(a, label, p, q, cutoff);
    while (t.tail_bound >= 0.25 && 2 * t.cutoff <= max_cutoff)
        t = trace_difference(a, label, p, q, 2 * t.cutoff);
    return t;
}

Int pairing_formula(const FredholmLabel& label, const ProjectionLabel& proj,
                    const PairwiseCoprimeVector& p) {
    check_label(label, p);
    const int h = label.h, m = proj.m;
    if (m < 1 || static_cast<int>(proj.alpha.size()) != m)
        throw precondition_error("pairing_formula: bad projection label");
    if (h < m) return 0;
    Int N = 0;
    for (int i = 0; i < m; ++i) {
        int diff = proj.alpha[i] - label.r[i];
        if (diff < 0 || diff % p.at(i) != 0) return 0;
        N += diff / p.at(i);
    }
    Int val = binomial(N, h - m);
    return (m % 2 == 0) ? val : -val;
}

std::optional<std::vector<int>> rap_solution(const FredholmLabel& label,
                                             const ProjectionLabel& proj,
                                             const PairwiseCoprimeVector& p) {
    if (label.h < proj.m) return std::nullopt;
    std::vector<int> beta(proj.m);
    int prev = 0;
    for (int i = 0; i < proj.m; ++i) {
        int diff = proj.alpha[i] - label.r[i];
        if (diff < 0 || diff % p.at(i) != 0) return std::nullopt;
        beta[i] = prev + diff / p.at(i);
        prev = beta[i];
    }
    return beta;
}

int oracle_exact_cutoff(const FredholmLabel& label, const ProjectionLabel& proj,
                        const PairwiseCoprimeVector& p) {
    auto beta = rap_solution(label, proj, p);
    if (!beta) return 4;  // no state is ever selected
    int total = 0;
    for (int b : *beta) total += b;
    return total + (label.h - proj.m) * beta->back() + 2;
}

OracleResult pairing_oracle(const FredholmLabel& label, const ProjectionLabel& proj,
                            const PairwiseCoprimeVector& p, double q, int cutoff) {
    check_label(label, p);
    if (proj.m < 1 || static_cast<int>(proj.alpha.size()) != proj.m)
        throw precondition_error("pairing_oracle: bad projection label");
    OracleResult res;
    res.cutoff = cutoff;
    res.cutoff_sufficient = cutoff >= oracle_exact_cutoff(label, proj, p);
    const int h = label.h, m = proj.m;
    if (h == 0) return res;  // P_m(alpha) dies in the scalar representation

    PairwiseCoprimeVector ph = prefix(p, h);
    std::vector<PiKRep> reps;
    for (int k = 0; k <= h; ++k) reps.emplace_back(h, k, ph, label.r, q);

    std::vector<long> alpha_sums(m);
    long acc = 0;
    for (int i = 0; i < m; ++i) {
        acc += proj.alpha[i];
        alpha_sums[i] = acc;
    }

    (void)q;  // eigenvalue selection is integer-exponent based, q-free
    for (const State& s : enumerate_lattice(h, cutoff)) {
        for (int k = 0; k <= h; ++k) {
            if (k < m) continue;  // X_m is in the kernel of pi^{(h)}_k
            if (!reps[k].in_domain(s)) continue;
            bool selected = true;
            for (int i = 1; i <= m && selected; ++i)
                if (reps[k].x_big_exponent(i, s) != alpha_sums[i - 1]) selected = false;
            if (selected) res.value += (k % 2 == 0) ? 1 : -1;
        }
    }
    return res;
}

ProjectionLabel dual_projection(const std::vector<int>& s, const std::vector<int>& beta,
                                const PairwiseCoprimeVector& p) {
    ProjectionLabel proj;
    proj.m = static_cast<int>(s.size());
    int prev = 0;
    for (int i = 0; i < proj.m; ++i) {
        int b = beta.empty() ? 0 : beta[i];
        proj.alpha.push_back(s[i] + p.at(i) * (b - prev));
        prev = b;
    }
    return proj;
}

std::string PairingReport::json_line() const {
    std::ostringstream os;
    os << "{\"schema\":\"qwps/1\",\"h\":" << label.h << ",\"r\":[" << join_ints(label.r, ",")
       << "],\"m\":" << proj.m << ",\"alpha\":[" << join_ints(proj.alpha, ",")
       << "],\"formula\":" << formula.get_str() << ",\"oracle\":" << oracle
       << ",\"tail\":" << tail_bound << ",\"agrees\":" << (agrees ? "true" : "false") << "}";
    return os.str();
}

std::string PairingReport::csv_header() { return "h,r,m,alpha,formula,oracle,tail,agrees"; }

std::string PairingReport::csv_row() const {
    std::ostringstream os;
    os << label.h << "," << join_ints(label.r, ";") << "," << proj.m << ","
       << join_ints(proj.alpha, ";") << "," << formula.get_str() << "," << oracle << ","
       << tail_bound << "," << (agrees ? "true" : "false");
    return os.str();
}

PairingReport make_pairing_report(const FredholmLabel& label, const ProjectionLabel& proj,
                                  const PairwiseCoprimeVector& p, double q, int cutoff) {
    PairingReport rep;
    rep.label = label;
    rep.proj = proj;
    rep.formula = pairing_formula(label, proj, p);
    OracleResult o = pairing_oracle(label, proj, p, q, std::max(cutoff, oracle_exact_cutoff(label, proj, p)));
    rep.oracle = static_cast<double>(o.value);
    rep.tail_bound = o.cutoff_sufficient ? 0.0 : 0.5;
    rep.agrees = std::abs(rep.oracle - rep.formula.get_d()) < 0.5 && rep.tail_bound < 0.25;
    return rep;
}

TraceResult pairing_idempotent(const Idempotent& e, const FredholmLabel& label,
                               const PairwiseCoprimeVector& p, double q, int cutoff,
                               bool check_idempotent) {
    if (e.size == 0) return TraceResult{0.0, 0.0, cutoff};
    if (check_idempotent && !e.is_idempotent())
        throw precondition_error("pairing_idempotent: matrix is not idempotent");
    return trace_difference(e.trace(), label, p, q, cutoff);
}

NontrivialityReport nontriviality_certificate(const PairwiseCoprimeVector& p, double q,
                                              int cutoff) {
    StrongConnection conn(p);
    Idempotent e1 = conn.idempotent(1);
    if (!e1.is_idempotent())
        throw verification_error("nontriviality_certificate: E_1 is not idempotent");
    AlgebraElement tr = e1.trace();

    NontrivialityReport report;
    for (int r0 = 0; r0 < p.at(0); ++r0) {
        FredholmLabel label{1, {r0}};
        TraceResult t = trace_difference_auto(tr, label, p, q, cutoff, 8 * cutoff);
        // A free module pairs to zero with every F_{1,r}.
        if (std::abs(t.value) > 0.5 && t.tail_bound < 0.25) report.nontrivial = true;
        report.entries.push_back({{r0}, t});
    }
    return report;
}

}  // namespace qwps

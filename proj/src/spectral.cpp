#include "qwps/spectral.hpp"

#include <cmath>

namespace qwps {

double DiracSpec::lambda(int t) const {
    switch (kind) {
        case Kind::Identity: return static_cast<double>(t);
        case Kind::Power: return std::pow(static_cast<double>(t), static_cast<double>(n) / d);
        case Kind::Custom: return custom(t);
    }
    return 0.0;
}

Int multiplicity(int n, int lambda) {
    if (lambda < 0) throw precondition_error("multiplicity: negative eigenvalue");
    return binomial(Int(lambda + n - 1), n - 1);
}

double lipschitz_norm(const std::vector<double>& samples) {
    if (samples.size() < 2) throw precondition_error("lipschitz_norm: need T >= 1");
    // The sup over all pairs of |dg/dt| on an integer grid is attained on an
    // adjacent pair (difference quotients are averages of adjacent slopes).
    double best = 0.0;
    for (size_t t = 1; t < samples.size(); ++t)
        best = std::max(best, std::abs(samples[t] - samples[t - 1]));
    return best;
}

ZetaDiagnostic zeta_partial(const DiracSpec& spec, double s, int terms) {
    if (!(s > 0.0)) throw precondition_error("zeta_partial: need s > 0");
    ZetaDiagnostic out;
    double acc = 0.0;
    double prev_inc = 0.0, last_inc = 0.0;
    for (int j = 1; j <= terms; ++j) {
        double inc = multiplicity(spec.n, j).get_d() * std::pow(spec.lambda(j), -s);
        acc += inc;
        out.partial_sums.push_back(acc);
        prev_inc = last_inc;
        last_inc = inc;
    }
    out.increment_ratio = (prev_inc > 0.0) ? last_inc / prev_inc : 0.0;
    return out;
}

CommutatorProfile commutator_profile(const AlgebraElement& a, const DiracSpec& spec,
                                     const PairwiseCoprimeVector& p, const std::vector<int>& r,
                                     double q, const std::vector<int>& cutoffs) {
    const int n = p.n();
    if (spec.n != n) throw precondition_error("commutator_profile: dimension mismatch");
    if (!is_invariant(a, sharp(p.as_weights())))
        throw precondition_error("commutator_profile: element is not invariant");

    std::vector<PiKRep> reps;
    for (int k = 0; k <= n; ++k) reps.emplace_back(n, k, p, r, q);

    CommutatorProfile out;
    out.cutoffs = cutoffs;
    for (int t = 1; t < 4000; ++t)
        out.envelope_max = std::max(out.envelope_max, n * t * std::pow(q, t));

    for (int cutoff : cutoffs) {
        int margin = 0;
        for (int k = 0; k <= n; ++k) margin = std::max(margin, max_up_shift(a, reps[k]));
        double worst = 0.0;
        for (const State& s : enumerate_lattice(n, cutoff)) {
            if (norm1(s) + margin > cutoff) continue;  // boundary columns excluded
            std::map<State, Amp> plus, minus;
            for (int k = 0; k <= n; ++k) {
                ApplyResult res = apply(a, reps[k], s, cutoff);
                auto& bucket = (k % 2 == 0) ? plus : minus;
                for (const auto& [st, amp] : res.out) {
                    auto [it, fresh] = bucket.emplace(st, amp);
                    if (!fresh) it->second += amp;
                }
            }
            const double ls = spec.lambda(norm1(s));
            // |D| pi_-(a) - pi_+(a) |D|  and  |D| pi_+(a) - pi_-(a) |D|
            double col1 = 0.0, col2 = 0.0;
            std::map<State, Amp> c1, c2;
            for (const auto& [st, amp] : minus) {
                c1[st] += spec.lambda(norm1(st)) * amp;
                c2[st] -= ls * amp;
            }
            for (const auto& [st, amp] : plus) {
                c1[st] -= ls * amp;
                c2[st] += spec.lambda(norm1(st)) * amp;
            }
            for (const auto& [st, v] : c1) col1 += std::norm(v);
            for (const auto& [st, v] : c2) col2 += std::norm(v);
            worst = std::max(worst, std::sqrt(std::max(col1, col2)));
        }
        out.column_norms.push_back(worst);
    }
    return out;
}

double shift_derivation_defect(const WeightedShift& s, const DiracSpec& spec, int cutoff) {
    const int dims = static_cast<int>(s.step.size());
    const int knorm = norm1(s.step);
    double worst = 0.0;
    for (const State& m : enumerate_lattice(dims, cutoff)) {
        State t = m;
        for (int i = 0; i < dims; ++i) t[i] += s.step[i];
        if (norm1(t) > cutoff) continue;
        double c = s.weight(m);
        double commutator_amp = c * (spec.lambda(norm1(t)) - spec.lambda(norm1(m)));
        worst = std::max(worst, std::abs(commutator_amp - knorm * c));
    }
    return worst;
}

}  // namespace qwps

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <memory>
#include <random>

#include "qwps/spectral.hpp"

using namespace qwps;

namespace {
PairwiseCoprimeVector pcv(std::initializer_list<long> v) {
    std::vector<Int> e;
    for (long x : v) e.emplace_back(x);
    return make_pairwise_coprime(std::move(e));
}
}  // namespace

TEST_CASE("multiplicity formula vs lattice enumeration") {
    CHECK(multiplicity(1, 7) == Int(1));
    CHECK(multiplicity(2, 3) == Int(4));
    CHECK(multiplicity(4, 10) == Int(286));
    for (int n = 1; n <= 4; ++n)
        for (int lambda = 0; lambda <= 12; ++lambda) {
            long count = 0;
            for (const State& s : enumerate_lattice(n, lambda))
                if (norm1(s) == lambda) ++count;
            CHECK(multiplicity(n, lambda) == Int(count));
        }
}

TEST_CASE("hockey stick: cumulative multiplicities") {
    for (int n = 1; n <= 4; ++n)
        for (int cutoff = 0; cutoff <= 12; ++cutoff) {
            Int total = 0;
            for (int lambda = 0; lambda <= cutoff; ++lambda) total += multiplicity(n, lambda);
            CHECK(total == binomial(Int(cutoff + n), n));
        }
}

TEST_CASE("weighted shifts are eigenvectors of the |D| derivation") {
    std::mt19937 rng(37);
    std::uniform_real_distribution<double> wdist(-2.0, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 1 + trial % 3;
        State step(n, 0);
        for (int i = 0; i < n; ++i) step[i] = trial % (i + 2);
        auto weights = std::make_shared<std::map<State, double>>();
        WeightedShift s{step, [weights, &rng, &wdist](const State& m) {
                            auto it = weights->find(m);
                            if (it == weights->end())
                                it = weights->emplace(m, wdist(rng)).first;
                            return it->second;
                        }};
        CHECK(shift_derivation_defect(s, DiracSpec::identity(n), 10) == 0.0);
    }
}

TEST_CASE("lipschitz norms on the integer grid") {
    {
        std::vector<double> id;
        for (int t = 0; t <= 20; ++t) id.push_back(t);
        CHECK(lipschitz_norm(id) == doctest::Approx(1.0));
    }
    {
        // t^{n/d} with d >= n: steepest step at the origin, finite on the grid
        DiracSpec spec = DiracSpec::power(2, 4.0);
        std::vector<double> g;
        for (int t = 0; t <= 30; ++t) g.push_back(spec.lambda(t));
        CHECK(lipschitz_norm(g) == doctest::Approx(1.0));  // 1^{1/2} - 0
    }
    {
        // q^{-eps t} grows without bound as the grid grows
        auto froth = [](int T) {
            std::vector<double> g;
            for (int t = 0; t <= T; ++t) g.push_back(std::pow(0.5, -0.3 * t));
            return lipschitz_norm(g);
        };
        CHECK(froth(40) > froth(10));
    }
}

TEST_CASE("zeta partial sums") {
    {
        // identity lambda, n = 2, s = 3: convergent
        ZetaDiagnostic d = zeta_partial(DiracSpec::identity(2), 3.0, 400);
        CHECK(d.increment_ratio < 1.0);
        double last = d.partial_sums.back();
        double mid = d.partial_sums[d.partial_sums.size() / 2];
        CHECK(std::abs(last - mid) < 1e-2 * last);
    }
    {
        // power kind: s slightly above d converges, s = d diverges (ratio -> 1)
        DiracSpec spec = DiracSpec::power(2, 3.0);
        ZetaDiagnostic conv = zeta_partial(spec, 3.5, 2000);
        ZetaDiagnostic div = zeta_partial(spec, 3.0, 2000);
        CHECK(conv.increment_ratio < div.increment_ratio);
        CHECK(div.increment_ratio > 0.99);
        double tail_growth = div.partial_sums.back() - div.partial_sums[999];
        CHECK(tail_growth > 0.1);  // visibly still growing at s = d
    }
    {
        // very large s: dominated by the first eigenvalue
        ZetaDiagnostic d = zeta_partial(DiracSpec::identity(3), 40.0, 50);
        CHECK(d.partial_sums.back() ==
              doctest::Approx(multiplicity(3, 1).get_d()).epsilon(1e-9));
    }
}

TEST_CASE("commutator profiles for the identity lambda stay under the envelope") {
    PairwiseCoprimeVector p = pcv({1, 1, 1});
    WeightVector l = sharp(p.as_weights());
    DiracSpec spec = DiracSpec::identity(2);
    std::vector<int> cutoffs{8, 12};
    for (int i = 0; i <= 2; ++i)
        for (int j = i; j <= 2; ++j) {
            CommutatorProfile prof =
                commutator_profile(xi_elem(l, i, j), spec, p, {0, 0}, 0.5, cutoffs);
            for (double v : prof.column_norms) CHECK(v <= prof.envelope_max + 1e-12);
        }
    // a = 1: commutator exactly zero
    CommutatorProfile unitp =
        commutator_profile(AlgebraElement::one(2), spec, p, {0, 0}, 0.5, cutoffs);
    for (double v : unitp.column_norms) CHECK(v == doctest::Approx(0.0));
}

TEST_CASE("sub-lipschitz lambda profiles are reported without assertion") {
    PairwiseCoprimeVector p = pcv({1, 1, 1});
    WeightVector l = sharp(p.as_weights());
    CommutatorProfile prof = commutator_profile(xi_elem(l, 0, 1), DiracSpec::power(2, 1.0), p,
                                                {0, 0}, 0.5, {6, 8});
    for (double v : prof.column_norms) CHECK(std::isfinite(v));
}

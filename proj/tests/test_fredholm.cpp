#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qwps/fredholm.hpp"

using namespace qwps;

namespace {
PairwiseCoprimeVector pcv(std::initializer_list<long> v) {
    std::vector<Int> e;
    for (long x : v) e.emplace_back(x);
    return make_pairwise_coprime(std::move(e));
}
}  // namespace

TEST_CASE("label bookkeeping") {
    PairwiseCoprimeVector p = pcv({2, 3, 1});
    auto labels = all_fredholm_labels(p);
    CHECK(Int(static_cast<long>(labels.size())) == fredholm_label_count(p));
    CHECK(fredholm_label_count(p) == Int(1 + 2 + 6));
    CHECK(labels.front().h == 0);
    CHECK(labels.front().r.empty());
}

TEST_CASE("pullback") {
    WeightVector l = sharp(WeightVector{2, 3, 1});
    AlgebraElement a = xi_elem(l, 0, 2) + xi_elem(l, 0, 1);
    AlgebraElement a1 = pullback(a, 1);
    CHECK(a1.n() == 1);
    // only the monomials not touching z_2 survive
    AlgebraElement expect = pullback(xi_elem(l, 0, 1), 1);
    CHECK(a1 == expect);
    CHECK_FALSE(a1.is_zero());
}

TEST_CASE("trace difference of the unit") {
    PairwiseCoprimeVector p = pcv({2, 3, 1});
    AlgebraElement one = AlgebraElement::one(2);
    TraceResult t0 = trace_difference(one, {0, {}}, p, 0.5, 30);
    CHECK(t0.value == doctest::Approx(1.0));
    for (int h = 1; h <= 2; ++h) {
        std::vector<int> r(h, 0);
        TraceResult t = trace_difference(one, {h, r}, p, 0.5, 16);
        CHECK(t.value == doctest::Approx(0.0));
    }
}

TEST_CASE("trace difference of a generator converges geometrically") {
    PairwiseCoprimeVector p = pcv({2, 3});
    WeightVector l = sharp(p.as_weights());
    AlgebraElement a = xi_elem(l, 0, 0);  // z_0^* z_0, invariant
    FredholmLabel label{1, {1}};
    TraceResult t1 = trace_difference(a, label, p, 0.5, 30);
    TraceResult t2 = trace_difference(a, label, p, 0.5, 60);
    CHECK(t1.tail_bound > t2.tail_bound);
    CHECK(t2.tail_bound < 1e-6);
    CHECK(t1.value == doctest::Approx(t2.value).epsilon(1e-8));
    // partial sums are Cauchy within the certified tail estimate
    CHECK(std::abs(t2.value - t1.value) <= t1.tail_bound);

    // the rounding contract grows the cutoff until the tail certifies
    TraceResult t3 = trace_difference_auto(a, label, p, 0.9, 4, 128);
    CHECK(t3.tail_bound < 0.25);
    CHECK(t3.cutoff > 4);
    CHECK(trace_difference(a, label, p, 0.9, 4).tail_bound >= 0.25);

    CHECK_THROWS_AS(trace_difference(zeta_elem(1, 0, 2), label, p, 0.5, 10),
                    precondition_error);
}

TEST_CASE("pairing formula cases") {
    PairwiseCoprimeVector p = pcv({2, 3, 1});
    // h = m = 1, alpha_1 = r_0: N = 0, value -1
    CHECK(pairing_formula({1, {1}}, {1, {1}}, p) == Int(-1));
    // h < m
    CHECK(pairing_formula({1, {0}}, {2, {0, 0}}, p) == Int(0));
    // h = 2, m = 1, p_0 = 2, r_0 = 1, alpha_1 = 3: N = 1, (-1)^1 binom(1,1)
    CHECK(pairing_formula({2, {1, 0}}, {1, {3}}, p) == Int(-1));
    // divisibility violated
    CHECK(pairing_formula({1, {0}}, {1, {1}}, p) == Int(0));
    // binom(N, h-m) = 0 when h - m > N
    CHECK(pairing_formula({2, {1, 0}}, {1, {1}}, p) == Int(0));
}

TEST_CASE("oracle matches formula on a small exhaustive grid") {
    for (const auto& p : {pcv({2, 3}), pcv({1, 2}), pcv({2, 3, 1}), pcv({1, 2, 3})}) {
        const int n = p.n();
        for (const FredholmLabel& label : all_fredholm_labels(p)) {
            for (int m = 1; m <= n; ++m) {
                std::vector<int> alpha(m, 0);
                while (true) {
                    ProjectionLabel proj{m, alpha};
                    OracleResult o = pairing_oracle(label, proj, p, 0.5,
                                                    oracle_exact_cutoff(label, proj, p));
                    CHECK(o.cutoff_sufficient);
                    CHECK(Int(o.value) == pairing_formula(label, proj, p));
                    int pos = m - 1;
                    while (pos >= 0 && ++alpha[pos] > 3) alpha[pos--] = 0;
                    if (pos < 0) break;
                }
            }
        }
    }
}

TEST_CASE("oracle counts are q-independent") {
    PairwiseCoprimeVector p = pcv({2, 3, 1});
    FredholmLabel label{2, {1, 2}};
    ProjectionLabel proj{1, {3}};
    int cutoff = oracle_exact_cutoff(label, proj, p);
    long v1 = pairing_oracle(label, proj, p, 0.3, cutoff).value;
    long v2 = pairing_oracle(label, proj, p, 0.5, cutoff).value;
    long v3 = pairing_oracle(label, proj, p, 0.7, cutoff).value;
    CHECK(v1 == v2);
    CHECK(v2 == v3);
}

TEST_CASE("dual family is diagonal for a small case") {
    PairwiseCoprimeVector p = pcv({2, 3});
    auto labels = all_fredholm_labels(p);
    for (const FredholmLabel& row : labels) {
        for (const FredholmLabel& col : labels) {
            if (col.h == 0) continue;  // the trivial projection column is tested below
            ProjectionLabel proj = dual_projection(col.r, {}, p);
            OracleResult o =
                pairing_oracle(row, proj, p, 0.5, oracle_exact_cutoff(row, proj, p));
            long expect = 0;
            if (row.h == col.h && row.r == col.r) expect = (col.h % 2 == 0) ? 1 : -1;
            CHECK(o.value == expect);
        }
        // trivial projection column: <F_{h,r}, [1]> = 1 iff h = 0
        TraceResult t = trace_difference(AlgebraElement::one(p.n()), row, p, 0.5, 24);
        CHECK(t.value == doctest::Approx(row.h == 0 ? 1.0 : 0.0));
    }
}

TEST_CASE("pairing report serialization") {
    PairwiseCoprimeVector p = pcv({2, 3});
    PairingReport rep = make_pairing_report({1, {1}}, {1, {1}}, p, 0.5, 12);
    CHECK(rep.agrees);
    CHECK(rep.csv_row().find("-1") != std::string::npos);
    CHECK(rep.json_line().find("\"schema\":\"qwps/1\"") != std::string::npos);
    CHECK(PairingReport::csv_header() == "h,r,m,alpha,formula,oracle,tail,agrees");
}

TEST_CASE("idempotent pairing reproduces the paper value -1") {
    for (const auto& p : {pcv({1, 3}), pcv({2, 3}), pcv({2, 1, 1})}) {
        StrongConnection conn(p);
        Idempotent e1 = conn.idempotent(1);
        for (int r0 = 0; r0 < p.at(0); ++r0) {
            TraceResult t = pairing_idempotent(e1, {1, {r0}}, p, 0.5, 60, false);
            CHECK(t.tail_bound < 0.25);
            CHECK(t.value == doctest::Approx(-1.0).epsilon(1e-6));
        }
    }
}

TEST_CASE("idempotent pairing degenerate cases") {
    PairwiseCoprimeVector p = pcv({2, 3});
    // E = 0
    Idempotent zero;
    TraceResult t0 = pairing_idempotent(zero, {1, {0}}, p, 0.5, 20);
    CHECK(t0.value == 0.0);
    // E = 1 (rank-one trivial projection)
    Idempotent one;
    one.size = 1;
    one.entries.push_back(AlgebraElement::one(1));
    CHECK(pairing_idempotent(one, {0, {}}, p, 0.5, 20).value == doctest::Approx(1.0));
    CHECK(pairing_idempotent(one, {1, {0}}, p, 0.5, 20).value == doctest::Approx(0.0));
    // non-idempotent rejected when the check flag is on
    Idempotent bad;
    bad.size = 1;
    bad.entries.push_back(Laurent(Rat(1, 2)) * AlgebraElement::one(1));
    CHECK_THROWS_AS(pairing_idempotent(bad, {1, {0}}, p, 0.5, 20, true), precondition_error);
}

TEST_CASE("nontriviality certificate") {
    NontrivialityReport rep = nontriviality_certificate(pcv({1, 3}), 0.5, 60);
    CHECK(rep.nontrivial);
    for (const auto& e : rep.entries) CHECK(e.pairing.value == doctest::Approx(-1.0));
    NontrivialityReport rep2 = nontriviality_certificate(pcv({1, 1}), 0.5, 60);
    CHECK(rep2.nontrivial);
    CHECK(rep2.entries.size() == 1);
    CHECK(rep2.entries[0].pairing.value == doctest::Approx(-1.0));
}

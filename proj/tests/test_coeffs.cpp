#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qwps/coeffs.hpp"

using namespace qwps;

namespace {
PairwiseCoprimeVector pcv(std::initializer_list<long> v) {
    std::vector<Int> e;
    for (long x : v) e.emplace_back(x);
    return make_pairwise_coprime(std::move(e));
}
}  // namespace

TEST_CASE("building blocks match the engine") {
    for (const auto& p : {pcv({2, 3}), pcv({1, 2, 3}), pcv({3, 1, 2})}) {
        const int n = p.n();
        for (int i = 0; i <= n; ++i) {
            AlgebraElement zi = zeta_elem(n, i, p.at(i));
            CHECK(zz_star_poly(p, i).to_algebra(n) == zi * zi.adjoint());
            CHECK(zstar_z_poly(p, i).to_algebra(n) == zi.adjoint() * zi);
        }
    }
}

TEST_CASE("recursion coefficients: trivial weights give 1") {
    auto a = connection_coeffs_a(pcv({1, 1, 1}));
    for (const auto& ai : a) CHECK(ai == CommutingPoly::one(2));
}

TEST_CASE("recursion coefficients verify for small p") {
    // constructor-level engine verification throws on failure
    for (const auto& p : {pcv({1, 1}), pcv({2, 1}), pcv({2, 3}), pcv({1, 3}), pcv({1, 1, 1}),
                          pcv({1, 2, 1}), pcv({2, 1, 3}), pcv({1, 2, 3})}) {
        auto a = connection_coeffs_a(p);
        CHECK(verify_solu_a(p, a));
        auto b = connection_coeffs_b(p);
        CHECK(verify_solu_b(p, b));
    }
}

TEST_CASE("closed-form families of the all-but-one-trivial weights") {
    // p = (1,...,1,p_n)
    for (int pn : {2, 3}) {
        auto a = coeffs_last_weight(2, pn);
        CHECK(a[2] == CommutingPoly::one(2));
        CHECK(verify_solu_a(pcv({1, 1, pn}), a));
    }
    // p = (p_0,1,...,1)
    for (int p0 : {2, 3}) {
        auto a = coeffs_first_weight(2, p0);
        CHECK(a[0] == CommutingPoly::one(2));
        CHECK(a[1] == a[2]);
        CHECK(verify_solu_a(pcv({p0, 1, 1}), a));
    }
}

TEST_CASE("closed form for n = 1") {
    // (1,1): f(t) = 1 - t, so a_0 = 1 and a_1 = 1
    auto [a0, a1] = coeffs_n1_closed(1, 1);
    CHECK(a0 == CommutingPoly::one(1));
    CHECK(a1 == CommutingPoly::one(1));

    // (p_0, 1): a_0 = 1, a_1 = (1 - f(x_1))/x_1
    for (int p0 : {2, 3, 4}) {
        auto [b0, b1] = coeffs_n1_closed(p0, 1);
        CHECK(b0 == CommutingPoly::one(1));
        auto first = coeffs_first_weight(1, p0);
        CHECK(b1 == first[1]);
        CHECK(verify_solu_a(pcv({p0, 1}), {b0, b1}));
    }

    // (2,3): engine verification
    auto [c0, c1] = coeffs_n1_closed(2, 3);
    CHECK(verify_solu_a(pcv({2, 3}), {c0, c1}));

    CHECK_THROWS_AS(coeffs_n1_closed(2, 4), precondition_error);
}

TEST_CASE("closed form and recursion both satisfy the defining identity") {
    for (auto [p0, p1] : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}}) {
        auto closed = coeffs_n1_closed(p0, p1);
        PairwiseCoprimeVector p = pcv({p0, p1});
        CHECK(verify_solu_a(p, {closed.first, closed.second}));
        auto rec = connection_coeffs_a(p);
        CHECK(verify_solu_a(p, rec));
    }
}

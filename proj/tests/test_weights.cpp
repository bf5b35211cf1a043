#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <queue>
#include <random>
#include <set>

#include "qwps/weights.hpp"

using namespace qwps;

namespace {

// Independent reachability oracle: breadth-first search over admissible
// divisions (they strictly shrink the product, so the search is finite).
bool bfs_reaches_unit(const WeightVector& start) {
    std::set<std::vector<Int>> seen;
    std::queue<WeightVector> todo;
    todo.push(start);
    while (!todo.empty()) {
        WeightVector cur = todo.front();
        todo.pop();
        if (!seen.insert(cur.entries()).second) continue;
        bool unit = true;
        for (const Int& e : cur.entries())
            if (e != 1) unit = false;
        if (unit) return true;
        std::set<Int> primes;
        for (const Int& e : cur.entries())
            for (const Int& f : prime_factors(e)) primes.insert(f);
        for (size_t k = 0; k < cur.size(); ++k)
            for (const Int& f : primes)
                if (auto next = admissible_div(cur, static_cast<int>(k), f))
                    todo.push(*next);
    }
    return false;
}

}  // namespace

TEST_CASE("sharp map") {
    CHECK(sharp(WeightVector{2, 1, 1}) == WeightVector{1, 2, 2});
    CHECK(sharp(WeightVector{1, 1, 1, 1}) == WeightVector{1, 1, 1, 1});
    // n = 1: m = (l_0 l_1)^0 = 1, so sharp is an involution
    CHECK(sharp(sharp(WeightVector{2, 3})) == WeightVector{2, 3});
}

TEST_CASE("sharp o sharp = m * id") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> entry(1, 10);
    for (int n = 1; n <= 4; ++n) {
        for (int trial = 0; trial < 60; ++trial) {
            std::vector<Int> v;
            for (int i = 0; i <= n; ++i) v.emplace_back(entry(rng));
            WeightVector l(v);
            Int m = pow_int(l.product(), n - 1);
            WeightVector twice = sharp(sharp(l));
            for (size_t i = 0; i < l.size(); ++i) CHECK(twice[i] == m * l[i]);
        }
    }
}

TEST_CASE("sharp(p) coprime iff p pairwise coprime (exhaustive)") {
    for (int n = 1; n <= 2; ++n) {
        std::vector<Int> cur(n + 1, 1);
        std::function<void(int)> rec = [&](int pos) {
            if (pos == n + 1) {
                WeightVector p(cur);
                CHECK(is_coprime(sharp(p)) == is_pairwise_coprime(p));
                return;
            }
            for (int v = 1; v <= 12; ++v) {
                cur[pos] = v;
                rec(pos + 1);
            }
        };
        rec(0);
    }
}

TEST_CASE("factor_sharp") {
    auto r1 = factor_sharp(WeightVector{1, 2, 2});
    REQUIRE(r1.has_value());
    CHECK(r1->as_weights() == WeightVector{2, 1, 1});
    CHECK(r1->product == 2);

    CHECK_FALSE(factor_sharp(WeightVector{1, 2, 3}).has_value());
    auto r2 = factor_sharp(WeightVector{1, 1});
    REQUIRE(r2.has_value());
    CHECK(r2->as_weights() == WeightVector{1, 1});

    CHECK_THROWS_AS(factor_sharp(WeightVector{2, 4}), precondition_error);
}

TEST_CASE("factor_sharp round trip on pairwise coprime vectors") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& p : all_pairwise_coprime(n, n <= 2 ? 12 : 6)) {
            auto back = factor_sharp(sharp(p.as_weights()));
            REQUIRE(back.has_value());
            CHECK(back->entries == p.entries);
        }
}

TEST_CASE("is_cpn") {
    CHECK(is_cpn(WeightVector{1, 2, 2}));
    CHECK(is_cpn(WeightVector{2, 3, 6}));
    CHECK_FALSE(is_cpn(WeightVector{1, 1, 2}));
}

TEST_CASE("is_cpn invariance under permutation and admissible moves") {
    std::mt19937 rng(17);
    std::vector<Int> primes{2, 3, 5};
    for (const auto& base :
         {WeightVector{1, 2, 2}, WeightVector{1, 1, 2}, WeightVector{2, 3, 6},
          WeightVector{1, 2, 3}, WeightVector{1, 1}, WeightVector{3, 5}}) {
        bool expect = is_cpn(base);
        std::vector<Int> perm = base.entries();
        std::sort(perm.begin(), perm.end());
        do {
            CHECK(is_cpn(WeightVector(perm)) == expect);
        } while (std::next_permutation(perm.begin(), perm.end()));

        for (int trial = 0; trial < 30; ++trial) {
            int k = std::uniform_int_distribution<int>(0, base.n())(rng);
            Int p = primes[std::uniform_int_distribution<int>(0, 2)(rng)];
            if (auto up = admissible_mul(base, k, p)) {
                WeightVector norm = coprime_normalize(*up);
                CHECK(is_cpn(norm) == expect);
            }
            if (auto down = admissible_div(base, k, p)) {
                WeightVector norm = coprime_normalize(*down);
                CHECK(is_cpn(norm) == expect);
            }
        }
    }
}

TEST_CASE("admissible moves") {
    auto m1 = admissible_mul(WeightVector{1, 2, 2}, 0, 3);
    REQUIRE(m1.has_value());
    CHECK(*m1 == WeightVector{1, 6, 6});
    CHECK_FALSE(admissible_mul(WeightVector{1, 1, 2}, 2, 2).has_value());
    CHECK_FALSE(admissible_mul(WeightVector{1, 2, 2}, 1, 2).has_value());
    CHECK_THROWS_AS(admissible_mul(WeightVector{1, 2, 2}, 0, 4), precondition_error);

    auto d1 = admissible_div(WeightVector{1, 2, 2}, 0, 2);
    REQUIRE(d1.has_value());
    CHECK(*d1 == WeightVector{1, 1, 1});
    CHECK_FALSE(admissible_div(WeightVector{1, 1, 2}, 0, 2).has_value());

    // division is a left inverse of multiplication
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> entry(1, 9);
    std::vector<Int> primes{2, 3, 5, 7};
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Int> v;
        for (int i = 0; i < 3; ++i) v.emplace_back(entry(rng));
        WeightVector l(v);
        int k = std::uniform_int_distribution<int>(0, 2)(rng);
        Int p = primes[std::uniform_int_distribution<int>(0, 3)(rng)];
        if (auto up = admissible_mul(l, k, p)) {
            auto down = admissible_div(*up, k, p);
            REQUIRE(down.has_value());
            CHECK(*down == l);
        }
    }
}

TEST_CASE("reachability to the unit weight vector") {
    CHECK(bfs_reaches_unit(WeightVector{2, 3, 6}));
    CHECK_FALSE(bfs_reaches_unit(WeightVector{1, 1, 2}));

    // BFS oracle agrees with is_cpn on all coprime vectors with small entries
    for (int a = 1; a <= 6; ++a)
        for (int b = 1; b <= 6; ++b)
            for (int c = 1; c <= 6; ++c) {
                WeightVector l{a, b, c};
                if (!is_coprime(l)) continue;
                CHECK(bfs_reaches_unit(l) == is_cpn(l));
            }

    // the constructive path is admissible step by step
    auto path = path_to_unit(WeightVector{2, 3, 6});
    REQUIRE(path.has_value());
    WeightVector cur{2, 3, 6};
    for (const AdmissibleMove& mv : *path) {
        REQUIRE(mv.division);
        auto next = admissible_div(cur, mv.k, mv.p);
        REQUIRE(next.has_value());
        cur = *next;
    }
    CHECK(cur == WeightVector{1, 1, 1});
    CHECK_FALSE(path_to_unit(WeightVector{1, 1, 2}).has_value());
}

TEST_CASE("predicates") {
    CHECK(is_normalized(WeightVector{1, 1}));
    CHECK(is_pairwise_coprime(WeightVector{2, 3, 5}));
    for (int l2 : {1, 2, 5, 12}) CHECK(is_normalized(WeightVector{1, 1, l2}));
    CHECK_FALSE(is_normalized(WeightVector{2, 2, 3}));

    // n = 1: the only normalized vector is (1,1)
    for (int a = 1; a <= 8; ++a)
        for (int b = 1; b <= 8; ++b)
            CHECK(is_normalized(WeightVector{a, b}) == (a == 1 && b == 1));

    // n = 2: pairwise coprime iff normalized
    for (int a = 1; a <= 8; ++a)
        for (int b = 1; b <= 8; ++b)
            for (int c = 1; c <= 8; ++c)
                CHECK(is_pairwise_coprime(WeightVector{a, b, c}) ==
                      is_normalized(WeightVector{a, b, c}));
}

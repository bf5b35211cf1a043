#include "qwps/relations.hpp"

#include <sstream>

#include "qwps/qseries.hpp"

namespace qwps {

namespace {

AlgebraElement yk_product(int n, int i, int k) {
    AlgebraElement acc = AlgebraElement::one(n);
    for (int j = 0; j < k; ++j)
        acc = acc * (x_elem(n, i) + (Laurent(1) - Laurent::q_power(-2L * j)) * big_x_elem(n, i));
    return acc;
}

AlgebraElement zk_product(int n, int i, int k) {
    AlgebraElement acc = AlgebraElement::one(n);
    for (int j = 1; j <= k; ++j)
        acc = acc * (x_elem(n, i) + (Laurent(1) - Laurent::q_power(2L * j)) * big_x_elem(n, i));
    return acc;
}

std::string tag(const char* base, int i, int j = -1, int k = -1) {
    std::ostringstream os;
    os << base << "[" << i;
    if (j >= 0) os << "," << j;
    if (k >= 0) os << ";k=" << k;
    os << "]";
    return os.str();
}

}  // namespace

std::vector<RelationCheck> relation_suite_symbolic(const PairwiseCoprimeVector& p, int aux_max) {
    const int n = p.n();
    std::vector<RelationCheck> out;
    std::vector<AlgebraElement> x, zeta, zeta_s, X;
    for (int i = 0; i <= n; ++i) {
        x.push_back(x_elem(n, i));
        zeta.push_back(zeta_elem(n, i, p.at(i)));
        zeta_s.push_back(zeta.back().adjoint());
        X.push_back(big_x_elem(n, i));
    }

    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            out.push_back({tag("a:x.x", i, j), verify_relation(x[i] * x[j], x[j] * x[i])});
            out.push_back({tag("b:x.zeta", i, j), verify_relation(x[i] * zeta[j], zeta[j] * x[i])});
            out.push_back({tag("c:x.zeta", j, i),
                           verify_relation(x[j] * zeta[i],
                                           Laurent::q_power(2L * p.at(i)) * (zeta[i] * x[j]))});
            out.push_back(
                {tag("d:zeta.zeta", i, j),
                 verify_relation(zeta[i] * zeta[j],
                                 Laurent::q_power(-1L * p.at(i) * p.at(j)) * (zeta[j] * zeta[i]))});
        }
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            if (i == j) continue;
            out.push_back(
                {tag("e:zeta*.zeta", i, j),
                 verify_relation(zeta_s[i] * zeta[j],
                                 Laurent::q_power(1L * p.at(i) * p.at(j)) * (zeta[j] * zeta_s[i]))});
        }
    for (int i = 0; i <= n; ++i) {
        out.push_back(
            {tag("f:[x,zeta]", i),
             verify_relation(x[i] * zeta[i] - zeta[i] * x[i],
                             (Laurent(1) - Laurent::q_power(2L * p.at(i))) * (zeta[i] * X[i]))});
    }
    {
        AlgebraElement sum(n);
        for (int i = 0; i <= n; ++i) sum += x[i];
        out.push_back({"g:sum(x)=1", sum.is_one()});
    }
    for (int i = 0; i <= n; ++i) {
        out.push_back({tag("h:zeta.zeta*", i),
                       verify_relation(zeta[i] * zeta_s[i], yk_product(n, i, p.at(i)))});
        out.push_back({tag("l:zeta*.zeta", i),
                       verify_relation(zeta_s[i] * zeta[i], zk_product(n, i, p.at(i)))});
    }

    for (int i = 0; i <= n; ++i)
        for (int k = 1; k <= aux_max; ++k) {
            AlgebraElement zik = zeta_elem(n, i, k);  // z_i^k
            AlgebraElement zis = zeta_elem(n, i, 1).adjoint();
            AlgebraElement lhs = zis * zik - zik * zis;
            AlgebraElement rhs =
                (Laurent(1) - Laurent::q_power(2L * k)) * (zeta_elem(n, i, k - 1) * X[i]);
            out.push_back({tag("zstarzi", i, -1, k), verify_relation(lhs, rhs)});
            out.push_back({tag("Y", i, -1, k),
                           verify_relation(zik * zik.adjoint(), yk_product(n, i, k))});
            out.push_back({tag("Z", i, -1, k),
                           verify_relation(zik.adjoint() * zik, zk_product(n, i, k))});
        }
    return out;
}

bool numeric_equal(const AlgebraElement& a, const AlgebraElement& b, const LensRep& rep,
                   int cutoff, double tol) {
    int margin = std::max(max_up_shift(a, rep), max_up_shift(b, rep));
    for (const State& s : enumerate_lattice(rep.dims(), cutoff)) {
        if (norm1(s) + margin > cutoff) continue;
        ApplyResult ra = apply(a, rep, s, cutoff);
        ApplyResult rb = apply(b, rep, s, cutoff);
        for (const auto& [st, amp] : ra.out)
            if (std::abs(amp - rb.at(st)) > tol) return false;
        for (const auto& [st, amp] : rb.out)
            if (std::abs(amp - ra.at(st)) > tol) return false;
    }
    return true;
}

std::vector<RelationCheck> relation_suite_numeric(const PairwiseCoprimeVector& p,
                                                  const LensRep& rep, int cutoff, double tol) {
    const int n = p.n();
    std::vector<RelationCheck> out;
    std::vector<AlgebraElement> x, zeta, zeta_s, X;
    for (int i = 0; i <= n; ++i) {
        x.push_back(x_elem(n, i));
        zeta.push_back(zeta_elem(n, i, p.at(i)));
        zeta_s.push_back(zeta.back().adjoint());
        X.push_back(big_x_elem(n, i));
    }
    auto eq = [&](const AlgebraElement& a, const AlgebraElement& b) {
        return numeric_equal(a, b, rep, cutoff, tol);
    };

    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            out.push_back({tag("a:x.x", i, j), eq(x[i] * x[j], x[j] * x[i])});
            out.push_back({tag("b:x.zeta", i, j), eq(x[i] * zeta[j], zeta[j] * x[i])});
            out.push_back({tag("c:x.zeta", j, i),
                           eq(x[j] * zeta[i], Laurent::q_power(2L * p.at(i)) * (zeta[i] * x[j]))});
            out.push_back({tag("d:zeta.zeta", i, j),
                           eq(zeta[i] * zeta[j],
                              Laurent::q_power(-1L * p.at(i) * p.at(j)) * (zeta[j] * zeta[i]))});
        }
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            if (i == j) continue;
            out.push_back({tag("e:zeta*.zeta", i, j),
                           eq(zeta_s[i] * zeta[j],
                              Laurent::q_power(1L * p.at(i) * p.at(j)) * (zeta[j] * zeta_s[i]))});
        }
    for (int i = 0; i <= n; ++i) {
        out.push_back({tag("f:[x,zeta]", i),
                       eq(x[i] * zeta[i] - zeta[i] * x[i],
                          (Laurent(1) - Laurent::q_power(2L * p.at(i))) * (zeta[i] * X[i]))});
        out.push_back({tag("h:zeta.zeta*", i), eq(zeta[i] * zeta_s[i], yk_product(n, i, p.at(i)))});
        out.push_back({tag("l:zeta*.zeta", i), eq(zeta_s[i] * zeta[i], zk_product(n, i, p.at(i)))});
    }
    {
        AlgebraElement sum(n);
        for (int i = 0; i <= n; ++i) sum += x[i];
        out.push_back({"g:sum(x)=1", eq(sum, AlgebraElement::one(n))});
    }
    return out;
}

CommutatorDisplayReport zeta_commutator_display_check(const PairwiseCoprimeVector& p, int i) {
    const int n = p.n();
    const int pi = p.at(i);
    AlgebraElement zeta = zeta_elem(n, i, pi);
    AlgebraElement commutator = zeta.adjoint() * zeta - zeta * zeta.adjoint();

    AlgebraElement xi_plus = x_elem(n, i) + big_x_elem(n, i);  // sum_{j>=i} x_j
    AlgebraElement Xi = big_x_elem(n, i);                      // sum_{j>i} x_j
    Laurent front = Laurent::q_power(1) - Laurent::q_power(-1);

    auto build = [&](const AlgebraElement& inner, const AlgebraElement& outer) {
        AlgebraElement acc(n);
        for (int k = 0; k <= pi; ++k) {
            Laurent c = front * q_binomial(pi, k) * q_int(pi * k);
            AlgebraElement term = AlgebraElement::one(n);
            for (int t = 0; t < k; ++t) term = term * (Laurent::q_power(1) * inner);
            if (k % 2 == 1) term = Laurent(-1) * term;
            for (int t = 0; t < pi - k; ++t) term = term * outer;
            acc += c * term;
        }
        return acc;
    };

    CommutatorDisplayReport rep;
    rep.literal_matches = verify_relation(commutator, build(xi_plus, Xi));
    rep.swapped_matches = verify_relation(commutator, build(Xi, xi_plus));
    return rep;
}

}  // namespace qwps

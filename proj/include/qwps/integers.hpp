#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qwps {

using Int = mpz_class;
using Rat = mpq_class;

/// Thrown when a documented precondition is violated.
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an internal exact identity fails to verify (implementation bug,
/// never a legal outcome).
struct verification_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool divides(const Int& d, const Int& a) {
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline bool is_prime(const Int& p) {
    return mpz_probab_prime_p(p.get_mpz_t(), 32) != 0;
}

inline Int pow_int(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline Int binomial(const Int& n, unsigned long k) {
    if (n < 0) throw precondition_error("binomial: negative upper argument");
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

/// (s_0 + ... + s_m)! / (s_0! ... s_m!)
inline Int multinomial(const std::vector<int>& s) {
    Int num = 1;
    Int total = 0;
    for (int si : s) {
        if (si < 0) throw precondition_error("multinomial: negative part");
        for (int t = 1; t <= si; ++t) {
            ++total;
            num *= total;
            num /= t;
        }
    }
    return num;
}

/// Prime factors with multiplicity, by trial division (weights are small).
inline std::vector<Int> prime_factors(Int v) {
    std::vector<Int> out;
    if (v < 0) v = -v;
    for (Int d = 2; d * d <= v; ++d) {
        while (divides(d, v)) {
            out.push_back(d);
            v /= d;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

inline double to_double(const Rat& r) { return r.get_d(); }

}  // namespace qwps

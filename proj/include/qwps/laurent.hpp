#pragma once

#include <map>
#include <string>

#include "qwps/integers.hpp"

namespace qwps {

/**
 * Exact Laurent polynomial in the deformation parameter q, with rational
 * coefficients.  This is the coefficient ring of every symbolic computation:
 * all relation checks must come out as exact zeros, so no floating point
 * enters here.  Stored canonically: no zero coefficients.
 */
class Laurent {
public:
    Laurent() = default;
    Laurent(int c) { if (c != 0) coeffs_[0] = c; }          // NOLINT(runtime/explicit)
    Laurent(const Int& c) { if (c != 0) coeffs_[0] = Rat(c); }  // NOLINT
    Laurent(const Rat& c) { if (c != 0) coeffs_[0] = c; }   // NOLINT

    /// c * q^e
    static Laurent term(const Rat& c, long e) {
        Laurent out;
        if (c != 0) out.coeffs_[e] = c;
        return out;
    }
    static Laurent q_power(long e) { return term(1, e); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const {
        return coeffs_.size() == 1 && coeffs_.begin()->first == 0 &&
               coeffs_.begin()->second == 1;
    }

    const std::map<long, Rat>& coeffs() const { return coeffs_; }

    Laurent& operator+=(const Laurent& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, c);
        return *this;
    }
    Laurent& operator-=(const Laurent& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
        return *this;
    }
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator-(const Laurent& a) {
        Laurent out;
        for (const auto& [e, c] : a.coeffs_) out.coeffs_[e] = -c;
        return out;
    }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent out;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_) out.add_term(ea + eb, ca * cb);
        return out;
    }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    friend bool operator==(const Laurent& a, const Laurent& b) {
        return a.coeffs_ == b.coeffs_;
    }
    /// Arbitrary total order (map comparison), for use as container keys.
    friend bool operator<(const Laurent& a, const Laurent& b) {
        return a.coeffs_ < b.coeffs_;
    }

    /// Substitution q -> q^{-1}.
    Laurent bar() const {
        Laurent out;
        for (const auto& [e, c] : coeffs_) out.coeffs_[-e] = c;
        return out;
    }

    /// Exact evaluation at a rational point q0 != 0.
    Rat eval(const Rat& q0) const {
        if (q0 == 0) throw precondition_error("Laurent::eval at q=0");
        Rat acc = 0;
        for (const auto& [e, c] : coeffs_) {
            Rat p;
            unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
            mpz_pow_ui(p.get_num_mpz_t(), q0.get_num().get_mpz_t(), a);
            mpz_pow_ui(p.get_den_mpz_t(), q0.get_den().get_mpz_t(), a);
            p.canonicalize();
            if (e < 0) p = 1 / p;
            acc += c * p;
        }
        return acc;
    }

    double eval(double q0) const;

    /// Canonical text form: exponent-sorted, explicit q-exponents.
    std::string str() const;

private:
    void add_term(long e, const Rat& c) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            if (c != 0) coeffs_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    std::map<long, Rat> coeffs_;
};

}  // namespace qwps

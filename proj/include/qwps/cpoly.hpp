#pragma once

#include <map>
#include <string>
#include <vector>

#include "qwps/algebra.hpp"
#include "qwps/laurent.hpp"

namespace qwps {

/**
 * Polynomial in the commuting variables x_1, ..., x_n over the Laurent ring;
 * x_0 is always eliminated through x_0 + x_1 + ... + x_n = 1.  Embeds into
 * the sphere algebra via x_i -> z_i z_i^*.
 */
class CommutingPoly {
public:
    CommutingPoly() = default;
    explicit CommutingPoly(int nvars) : nvars_(nvars) {}

    static CommutingPoly constant(int nvars, const Laurent& c);
    static CommutingPoly one(int nvars) { return constant(nvars, Laurent(1)); }
    /// x_i for 1 <= i <= nvars; x_0 yields 1 - x_1 - ... - x_n.
    static CommutingPoly var(int nvars, int i);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, Laurent>& terms() const { return terms_; }

    CommutingPoly& operator+=(const CommutingPoly& o);
    CommutingPoly& operator-=(const CommutingPoly& o);
    friend CommutingPoly operator+(CommutingPoly a, const CommutingPoly& b) { return a += b; }
    friend CommutingPoly operator-(CommutingPoly a, const CommutingPoly& b) { return a -= b; }
    friend CommutingPoly operator*(const CommutingPoly& a, const CommutingPoly& b);
    friend CommutingPoly operator*(const Laurent& c, CommutingPoly a);
    friend bool operator==(const CommutingPoly& a, const CommutingPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    CommutingPoly pow(int e) const;

    /// Exact image in the sphere algebra of dimension n >= nvars.
    AlgebraElement to_algebra(int n) const;

    /// Evaluate at a point (x_1, ..., x_n).
    double eval(const std::vector<double>& x, double q) const;

    std::string str() const;

    void add_term(const std::vector<int>& e, const Laurent& c);

private:
    int nvars_ = 0;
    std::map<std::vector<int>, Laurent> terms_;
};

/// Univariate polynomial in t, promoted to a CommutingPoly in t := arg.
CommutingPoly compose_uni(const std::vector<Laurent>& coeffs, const CommutingPoly& arg);

}  // namespace qwps

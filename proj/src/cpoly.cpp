#include "qwps/cpoly.hpp"

#include <cmath>
#include <sstream>

namespace qwps {

CommutingPoly CommutingPoly::constant(int nvars, const Laurent& c) {
    CommutingPoly p(nvars);
    p.add_term(std::vector<int>(nvars, 0), c);
    return p;
}

CommutingPoly CommutingPoly::var(int nvars, int i) {
    if (i < 0 || i > nvars) throw precondition_error("CommutingPoly::var: bad index");
    if (i == 0) {
        CommutingPoly p = one(nvars);
        for (int t = 1; t <= nvars; ++t) p -= var(nvars, t);
        return p;
    }
    CommutingPoly p(nvars);
    std::vector<int> e(nvars, 0);
    e[i - 1] = 1;
    p.add_term(e, Laurent(1));
    return p;
}

void CommutingPoly::add_term(const std::vector<int>& e, const Laurent& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CommutingPoly& CommutingPoly::operator+=(const CommutingPoly& o) {
    if (terms_.empty() && nvars_ == 0) nvars_ = o.nvars_;
    if (nvars_ != o.nvars_) throw precondition_error("CommutingPoly: arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

CommutingPoly& CommutingPoly::operator-=(const CommutingPoly& o) {
    if (terms_.empty() && nvars_ == 0) nvars_ = o.nvars_;
    if (nvars_ != o.nvars_) throw precondition_error("CommutingPoly: arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

CommutingPoly operator*(const CommutingPoly& a, const CommutingPoly& b) {
    if (a.nvars_ != b.nvars_) throw precondition_error("CommutingPoly: arity mismatch");
    CommutingPoly out(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            std::vector<int> e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

CommutingPoly operator*(const Laurent& c, CommutingPoly a) {
    if (c.is_zero()) return CommutingPoly(a.nvars_);
    for (auto& [e, cc] : a.terms_) cc *= c;
    return a;
}

CommutingPoly CommutingPoly::pow(int e) const {
    if (e < 0) throw precondition_error("CommutingPoly::pow: negative exponent");
    CommutingPoly acc = one(nvars_);
    for (int t = 0; t < e; ++t) acc = acc * *this;
    return acc;
}

AlgebraElement CommutingPoly::to_algebra(int n) const {
    if (n < nvars_) throw precondition_error("CommutingPoly::to_algebra: n too small");
    AlgebraElement out(n);
    for (const auto& [e, c] : terms_) {
        AlgebraElement m = AlgebraElement::one(n);
        for (int i = 0; i < nvars_; ++i)
            for (int t = 0; t < e[i]; ++t) m = m * x_elem(n, i + 1);
        out += c * std::move(m);
    }
    return out;
}

double CommutingPoly::eval(const std::vector<double>& x, double q) const {
    if (static_cast<int>(x.size()) != nvars_)
        throw precondition_error("CommutingPoly::eval: point arity mismatch");
    double acc = 0.0;
    for (const auto& [e, c] : terms_) {
        double t = c.eval(q);
        for (int i = 0; i < nvars_; ++i) t *= std::pow(x[i], e[i]);
        acc += t;
    }
    return acc;
}

std::string CommutingPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            os << "*x" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

CommutingPoly compose_uni(const std::vector<Laurent>& coeffs, const CommutingPoly& arg) {
    CommutingPoly acc(arg.nvars());
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * arg + CommutingPoly::constant(arg.nvars(), *it);
    return acc;
}

}  // namespace qwps

#include "qwps/laurent.hpp"

#include <cmath>
#include <sstream>

namespace qwps {

double Laurent::eval(double q0) const {
    double acc = 0.0;
    for (const auto& [e, c] : coeffs_) acc += c.get_d() * std::pow(q0, static_cast<double>(e));
    return acc;
}

std::string Laurent::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        Rat a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (e == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "q^" << e;
        }
    }
    return os.str();
}

}  // namespace qwps

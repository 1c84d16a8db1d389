#include "palg/rational.hpp"

namespace palg {

Rational rational_pow(const Rational& r, unsigned e) {
    Rational acc(1);
    Rational base = r;
    while (e > 0) {
        if (e & 1u) acc *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return acc;
}

std::string to_string(const Rational& r) {
    return r.str();
}

} // namespace palg

#include "harmonica/rational.hpp"

#include <stdexcept>

namespace harmonica {

std::string to_fraction_string(const Rational& r) {
    Int n = num(r), d = den(r);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

std::string to_decimal_string(const Rational& r, int digits) {
    if (digits < 0) digits = 0;
    Int n = num(r), d = den(r);
    bool neg = n < 0;
    if (neg) n = -n;
    Int scale = ipow(Int(10), digits);
    // round half away from zero
    Int scaled = (n * scale * 2 + d) / (d * 2);
    Int whole = scaled / scale;
    Int frac = scaled % scale;
    std::string out = (neg && scaled != 0) ? "-" : "";
    out += whole.str();
    if (digits > 0) {
        std::string f = frac.str();
        out += "." + std::string(digits - f.size(), '0') + f;
    }
    return out;
}

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int n(s.substr(0, slash));
        Int d(s.substr(slash + 1));
        if (d == 0) throw std::invalid_argument("zero denominator");
        return Rational(n, d);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("bad rational literal '" + s + "': " + e.what());
    }
}

} // namespace harmonica

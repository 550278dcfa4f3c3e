#include "omegalab/rational.hpp"

#include <stdexcept>

namespace omegalab {

std::string fraction_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

static bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

Rational parse_fraction(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!all_digits(s)) throw std::invalid_argument("malformed rational: '" + s + "'");
        return Rational(Int(s));
    }
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw std::invalid_argument("malformed rational: '" + s + "'");
    }
    Int d(den);
    if (d == 0) throw std::invalid_argument("malformed rational: zero denominator in '" + s + "'");
    return Rational(Int(num), d);
}

double to_double(const Rational& r) {
    return r.convert_to<double>();
}

}  // namespace omegalab

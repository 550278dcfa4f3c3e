#include "omegalab/bitstring.hpp"

#include <cstdio>

#include "omegalab/errors.hpp"

namespace omegalab {

bool is_bit_string(const std::string& s) {
    for (char c : s) {
        if (c != '0' && c != '1') return false;
    }
    return true;
}

Rational bits_value(const std::string& bits) {
    if (!is_bit_string(bits)) throw Error("bits_value: not a bit string");
    Int num = 0;
    for (char c : bits) {
        num <<= 1;
        if (c == '1') num += 1;
    }
    return Rational(num, Int(1) << bits.size());
}

std::string expand_binary(const Rational& x, std::size_t count) {
    if (x < 0 || x > 1) throw Error("expand_binary: value outside [0, 1]");
    Int num = numerator(x);
    const Int den = denominator(x);
    std::string out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        num <<= 1;
        if (num >= den) {
            out.push_back('1');
            num -= den;
        } else {
            out.push_back('0');
        }
    }
    return out;
}

std::string fnv1a64_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= static_cast<std::uint64_t>(c);
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace omegalab

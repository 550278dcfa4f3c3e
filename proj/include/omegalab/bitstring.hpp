#pragma once

#include <cstdint>
#include <string>

#include "omegalab/rational.hpp"

namespace omegalab {

bool is_bit_string(const std::string& s);

// Value of "b1 b2 ... bL" read as sum of b_i * 2^-i.
Rational bits_value(const std::string& bits);

// First `count` bits of the binary expansion of x after the radix point.
// Dyadic values expand as terminating-then-zeros. pre: 0 <= x <= 1.
std::string expand_binary(const Rational& x, std::size_t count);

// FNV-1a 64-bit digest, 16 hex characters.
std::string fnv1a64_hex(const std::string& data);

}  // namespace omegalab

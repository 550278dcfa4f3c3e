#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "omegalab/omega_source.hpp"
#include "omegalab/partitions.hpp"
#include "omegalab/rational.hpp"

namespace omegalab::instance {

using structures::CoefficientPolicy;

struct ChaitinInstance {
    std::uint32_t n = 0;
    CoefficientPolicy policy = CoefficientPolicy::TermsOnly;
    std::uint64_t s = 0;             // coefficient count
    std::uint32_t t = 0;             // chunk width, ceil(log2 s), >= 1
    std::string bits;                // exactly s*t bits
    std::vector<std::uint64_t> B;    // s values, each in [0, 2^t - 1]
    Int k_b;                         // sum of B, > 0
    std::vector<Rational> b;         // B_i / k_b, sums to 1 exactly
    bool bits_certified = false;     // s*t <= source stable prefix
    omega::SourceInfo source;

    bool operator==(const ChaitinInstance&) const = default;
};

// ceil(log2 s), except 1 when s = 1.
std::uint32_t chunk_width(std::uint64_t s);

// Big-endian value of a bit string (<= 64 bits).
std::uint64_t bin2dec(const std::string& chunk);

// Split s*t bits into s big-endian t-bit values / rebuild the bit string.
std::vector<std::uint64_t> chunk_bits(const std::string& bits, std::uint64_t s, std::uint32_t t);
std::string render_chunks(const std::vector<std::uint64_t>& B, std::uint32_t t);

ChaitinInstance build_instance(std::uint32_t n, CoefficientPolicy policy,
                               const omega::CertifiedBits& source);

}  // namespace omegalab::instance

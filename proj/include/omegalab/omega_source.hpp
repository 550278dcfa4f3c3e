#pragma once

#include <cstdint>
#include <string>

#include "omegalab/prefix_machine.hpp"
#include "omegalab/rational.hpp"

namespace omegalab::omega {

struct SourceInfo {
    enum class Kind { Computed, External };
    Kind kind = Kind::External;
    // Computed: frontier that produced the bits.
    std::string machine_id;
    std::uint32_t max_level = 0;
    std::uint64_t max_steps = 0;
    // External: digest of the loaded bit text (fnv1a-64, hex).
    std::string digest;

    bool operator==(const SourceInfo&) const = default;

    static SourceInfo computed(const std::string& machine_id, std::uint32_t max_level,
                               std::uint64_t max_steps) {
        SourceInfo s;
        s.kind = Kind::Computed;
        s.machine_id = machine_id;
        s.max_level = max_level;
        s.max_steps = max_steps;
        return s;
    }
    static SourceInfo external(const std::string& digest) {
        SourceInfo s;
        s.kind = Kind::External;
        s.digest = digest;
        return s;
    }
};

// Binary expansion of an Omega lower bound, with the boundary up to which the
// bits can never be changed by still-unresolved halting mass.
struct CertifiedBits {
    std::string bits;
    std::uint64_t stable_prefix_len = 0;
    SourceInfo source;

    bool operator==(const CertifiedBits&) const = default;
};

struct BitsPrefix {
    std::string bits;
    bool certified = false;  // n <= stable_prefix_len
};

// First `count` expansion bits of approx.lower_bound; stable_prefix_len is the
// longest common prefix with the expansion of lower + pending + tail.
CertifiedBits extract_bits(const machine::OmegaApproximation& approx, std::uint64_t count);

// ASCII '0'/'1' with optional whitespace; trusted verbatim (stable = length).
CertifiedBits load_bits_file(const std::string& path);
CertifiedBits bits_from_text(const std::string& text, const std::string& label = "<text>");

BitsPrefix bits_prefix(const CertifiedBits& source, std::uint64_t n);

using machine::level_mass;
using machine::tail_mass;

}  // namespace omegalab::omega

#include "omegalab/omega_source.hpp"

#include <fstream>
#include <sstream>

#include "omegalab/bitstring.hpp"
#include "omegalab/errors.hpp"

namespace omegalab::omega {

CertifiedBits extract_bits(const machine::OmegaApproximation& approx, std::uint64_t count) {
    if (count == 0) throw Error("extract_bits: count must be >= 1");
    const Rational upper = approx.lower_bound + approx.pending_mass + approx.tail_mass;
    if (upper > 1) throw Error("extract_bits: approximation violates the Kraft bound");

    CertifiedBits out;
    out.bits = expand_binary(approx.lower_bound, count);
    const std::string upper_bits = expand_binary(upper, count);
    std::uint64_t stable = 0;
    while (stable < count && out.bits[stable] == upper_bits[stable]) ++stable;
    out.stable_prefix_len = stable;
    out.source = SourceInfo::computed(approx.machine_id, approx.max_level, approx.max_steps);
    return out;
}

CertifiedBits bits_from_text(const std::string& text, const std::string& label) {
    std::string bits;
    bits.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '0' || c == '1') {
            bits.push_back(c);
        } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f') {
            continue;
        } else {
            throw MalformedBitsFileError(label, i, c);
        }
    }
    if (bits.empty()) throw EmptyBitsFileError(label);

    CertifiedBits out;
    out.stable_prefix_len = bits.size();  // caller vouches for external bits
    out.source = SourceInfo::external(fnv1a64_hex(bits));
    out.bits = std::move(bits);
    return out;
}

CertifiedBits load_bits_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open bits file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return bits_from_text(buf.str(), path);
}

BitsPrefix bits_prefix(const CertifiedBits& source, std::uint64_t n) {
    if (n > source.bits.size()) throw InsufficientBitsError(source.bits.size(), n);
    return BitsPrefix{source.bits.substr(0, n), n <= source.stable_prefix_len};
}

}  // namespace omegalab::omega

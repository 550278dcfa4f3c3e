#include "omegalab/instance.hpp"

#include <bit>
#include <limits>

#include "omegalab/bitstring.hpp"
#include "omegalab/errors.hpp"

namespace omegalab::instance {

std::uint32_t chunk_width(std::uint64_t s) {
    if (s == 0) throw Error("chunk_width: s must be >= 1");
    if (s == 1) return 1;
    return static_cast<std::uint32_t>(std::bit_width(s - 1));
}

std::uint64_t bin2dec(const std::string& chunk) {
    if (chunk.empty()) throw Error("bin2dec: empty chunk");
    if (chunk.size() > 64) throw Error("bin2dec: chunk wider than 64 bits");
    if (!is_bit_string(chunk)) throw Error("bin2dec: not a bit string");
    std::uint64_t v = 0;
    for (char c : chunk) v = (v << 1) | static_cast<std::uint64_t>(c - '0');
    return v;
}

std::vector<std::uint64_t> chunk_bits(const std::string& bits, std::uint64_t s, std::uint32_t t) {
    if (s == 0 || t == 0) throw Error("chunk_bits: s and t must be >= 1");
    if (t > 64) throw Error("chunk_bits: chunk wider than 64 bits");
    if (bits.size() != s * t) {
        throw DimensionMismatchError("chunk_bits: expected " + std::to_string(s * t) +
                                     " bits, got " + std::to_string(bits.size()));
    }
    std::vector<std::uint64_t> B;
    B.reserve(s);
    for (std::uint64_t i = 0; i < s; ++i) B.push_back(bin2dec(bits.substr(i * t, t)));
    return B;
}

std::string render_chunks(const std::vector<std::uint64_t>& B, std::uint32_t t) {
    if (t == 0 || t > 64) throw Error("render_chunks: t out of range");
    std::string bits;
    bits.reserve(B.size() * t);
    for (std::uint64_t v : B) {
        if (t < 64 && v >> t) {
            throw DimensionMismatchError("render_chunks: value " + std::to_string(v) +
                                         " does not fit in " + std::to_string(t) + " bits");
        }
        for (std::uint32_t j = t; j-- > 0;) bits.push_back(((v >> j) & 1) ? '1' : '0');
    }
    return bits;
}

ChaitinInstance build_instance(std::uint32_t n, CoefficientPolicy policy,
                               const omega::CertifiedBits& source) {
    if (n < 2) throw Error("build_instance: n must be >= 2");

    const Int s_exact = structures::coefficient_count(n, policy);
    if (s_exact > Int(std::numeric_limits<std::uint64_t>::max())) {
        throw CapExceededError("coefficient count " + s_exact.str() + " does not fit in 64 bits");
    }
    ChaitinInstance inst;
    inst.n = n;
    inst.policy = policy;
    inst.s = s_exact.convert_to<std::uint64_t>();
    inst.t = chunk_width(inst.s);

    if (inst.s > std::numeric_limits<std::uint64_t>::max() / inst.t) {
        throw CapExceededError("bit window s*t overflows 64 bits for s " + std::to_string(inst.s));
    }
    const std::uint64_t need = inst.s * static_cast<std::uint64_t>(inst.t);
    const omega::BitsPrefix prefix = omega::bits_prefix(source, need);
    inst.bits = prefix.bits;
    inst.bits_certified = prefix.certified;
    inst.source = source.source;

    inst.B = chunk_bits(inst.bits, inst.s, inst.t);
    inst.k_b = 0;
    for (std::uint64_t v : inst.B) inst.k_b += v;
    if (inst.k_b == 0) throw AllZeroCoefficientsError();

    inst.b.reserve(inst.s);
    for (std::uint64_t v : inst.B) inst.b.emplace_back(Int(v), inst.k_b);
    return inst;
}

}  // namespace omegalab::instance

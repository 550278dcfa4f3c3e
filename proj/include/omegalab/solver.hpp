#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "omegalab/config.hpp"
#include "omegalab/instance.hpp"
#include "omegalab/omega_source.hpp"
#include "omegalab/rational.hpp"

namespace omegalab::solver {

// Hides the target B sequence behind whole-sequence equality queries; every
// query bumps the counter, so candidates_tested can be read off the oracle.
class EqualityOracle {
  public:
    explicit EqualityOracle(std::vector<std::uint64_t> target) : target_(std::move(target)) {}

    bool query(const std::vector<std::uint64_t>& candidate) const {
        queries_.fetch_add(1, std::memory_order_relaxed);
        return candidate == target_;
    }
    std::uint64_t queries() const { return queries_.load(std::memory_order_relaxed); }
    std::size_t arity() const { return target_.size(); }

  private:
    std::vector<std::uint64_t> target_;
    mutable std::atomic<std::uint64_t> queries_{0};
};

EqualityOracle oracle_for(const instance::ChaitinInstance& inst);

// True iff the concatenated big-endian t-bit encodings equal reference_bits.
bool verify_candidate(const std::vector<std::uint64_t>& candidate,
                      const std::string& reference_bits, std::uint32_t t);

struct SolveStats {
    Int space_size;                       // (2^t)^s
    std::uint64_t candidates_tested = 0;
    double wall_ms = 0.0;
    bool found = false;
};

struct SolveResult {
    SolveStats stats;
    std::optional<std::vector<std::uint64_t>> solution;
};

struct SolveOptions {
    bool early_exit = true;
    std::uint32_t workers = 1;
};

// Lexicographic exhaustive search over all (2^t)^s candidate sequences.
SolveResult brute_force(std::uint64_t s, std::uint32_t t, const EqualityOracle& oracle,
                        const RunConfig& config = RunConfig{},
                        const SolveOptions& options = SolveOptions{});

struct GrowthBenchRow {
    std::uint32_t n = 0;
    std::uint64_t s = 0;
    std::uint32_t t = 0;
    std::uint64_t bits_read = 0;   // s*t, the window the construction consumes
    std::uint64_t space_log2 = 0;  // space_size = 2^space_log2
    double wall_ms = 0.0;
    bool searched = false;         // false: over candidate cap or bits unavailable
};

// Exact decimal of 2^space_log2 when small enough to print; "2^e" beyond.
std::string space_size_string(std::uint64_t space_log2);

using BitProvider = std::function<std::optional<omega::CertifiedBits>(std::uint64_t need)>;

BitProvider provider_from_bits(omega::CertifiedBits bits);
BitProvider provider_from_approx(machine::OmegaApproximation approx, std::uint64_t bits_cap);

std::vector<GrowthBenchRow> growth_benchmark(std::uint32_t n_min, std::uint32_t n_max,
                                             instance::CoefficientPolicy policy,
                                             const BitProvider& provider,
                                             const RunConfig& config = RunConfig{});

}  // namespace omegalab::solver

#include "omegalab/solver.hpp"

#include <chrono>
#include <thread>

#include "omegalab/errors.hpp"
#include "omegalab/partitions.hpp"

namespace omegalab::solver {

EqualityOracle oracle_for(const instance::ChaitinInstance& inst) {
    return EqualityOracle(inst.B);
}

bool verify_candidate(const std::vector<std::uint64_t>& candidate,
                      const std::string& reference_bits, std::uint32_t t) {
    if (candidate.empty() || t == 0) {
        throw DimensionMismatchError("verify_candidate: empty candidate or zero chunk width");
    }
    if (candidate.size() * t != reference_bits.size()) {
        throw DimensionMismatchError("verify_candidate: " + std::to_string(candidate.size()) +
                                     " values of " + std::to_string(t) + " bits vs " +
                                     std::to_string(reference_bits.size()) + " reference bits");
    }
    return instance::render_chunks(candidate, t) == reference_bits;
}

namespace {

std::vector<std::uint64_t> candidate_at(std::uint64_t index, std::uint64_t s, std::uint32_t t) {
    std::vector<std::uint64_t> digits(s, 0);
    for (std::uint64_t i = s; i-- > 0;) {
        digits[i] = index & ((t >= 64) ? ~0ULL : ((1ULL << t) - 1));
        index >>= t;
    }
    return digits;
}

// Lexicographic successor: increment the least significant digit with carry.
bool advance(std::vector<std::uint64_t>& digits, std::uint64_t radix_mask) {
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (digits[i] != radix_mask) {
            ++digits[i];
            return true;
        }
        digits[i] = 0;
    }
    return false;
}

struct ShardOutcome {
    std::uint64_t tested = 0;
    std::optional<std::pair<std::uint64_t, std::vector<std::uint64_t>>> hit;  // (index, candidate)
};

ShardOutcome search_range(std::uint64_t begin, std::uint64_t end, std::uint64_t s,
                          std::uint32_t t, const EqualityOracle& oracle, bool early_exit,
                          const std::atomic<bool>& stop) {
    ShardOutcome out;
    if (begin >= end) return out;
    const std::uint64_t mask = (1ULL << t) - 1;
    std::vector<std::uint64_t> digits = candidate_at(begin, s, t);
    for (std::uint64_t index = begin; index < end; ++index) {
        if (early_exit && stop.load(std::memory_order_relaxed)) break;
        ++out.tested;
        if (oracle.query(digits)) {
            if (!out.hit) out.hit = {index, digits};
            if (early_exit) break;
        }
        advance(digits, mask);
    }
    return out;
}

}  // namespace

SolveResult brute_force(std::uint64_t s, std::uint32_t t, const EqualityOracle& oracle,
                        const RunConfig& config, const SolveOptions& options) {
    if (s == 0 || t == 0) throw Error("brute_force: s and t must be >= 1");
    if (oracle.arity() != s) {
        throw DimensionMismatchError("brute_force: oracle arity " +
                                     std::to_string(oracle.arity()) + " vs s " + std::to_string(s));
    }

    const Int exponent_exact = Int(s) * t;
    if (exponent_exact > 63) {
        throw CapExceededError("candidate space 2^" + exponent_exact.str() + " exceeds cap " +
                               std::to_string(config.candidate_cap));
    }
    const std::uint64_t exponent = exponent_exact.convert_to<std::uint64_t>();
    const Int space = Int(1) << exponent;
    if (space > Int(config.candidate_cap)) {
        throw CapExceededError("candidate space 2^" + std::to_string(exponent) + " exceeds cap " +
                               std::to_string(config.candidate_cap));
    }
    const std::uint64_t total = space.convert_to<std::uint64_t>();

    const auto start = std::chrono::steady_clock::now();
    const std::uint32_t workers =
        static_cast<std::uint32_t>(std::min<std::uint64_t>(options.workers ? options.workers : 1,
                                                           total));
    std::atomic<bool> stop{false};
    std::vector<ShardOutcome> outcomes(workers);

    auto work = [&](std::uint32_t w) {
        const std::uint64_t begin = total / workers * w + std::min<std::uint64_t>(w, total % workers);
        const std::uint64_t end =
            total / workers * (w + 1) + std::min<std::uint64_t>(w + 1, total % workers);
        outcomes[w] = search_range(begin, end, s, t, oracle, options.early_exit, stop);
        if (outcomes[w].hit && options.early_exit) stop.store(true, std::memory_order_relaxed);
    };

    if (workers <= 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (std::uint32_t w = 0; w < workers; ++w) threads.emplace_back(work, w);
        for (auto& th : threads) th.join();
    }

    SolveResult result;
    result.stats.space_size = space;
    std::optional<std::pair<std::uint64_t, std::vector<std::uint64_t>>> best;
    for (const auto& o : outcomes) {
        result.stats.candidates_tested += o.tested;
        if (o.hit && (!best || o.hit->first < best->first)) best = o.hit;
    }
    if (best) {
        result.stats.found = true;
        result.solution = best->second;
    }
    const auto stop_time = std::chrono::steady_clock::now();
    result.stats.wall_ms =
        std::chrono::duration<double, std::milli>(stop_time - start).count();
    return result;
}

std::string space_size_string(std::uint64_t space_log2) {
    if (space_log2 <= 1'000'000) return (Int(1) << space_log2).str();
    return "2^" + std::to_string(space_log2);
}

BitProvider provider_from_bits(omega::CertifiedBits bits) {
    return [bits = std::move(bits)](std::uint64_t need) -> std::optional<omega::CertifiedBits> {
        if (need > bits.bits.size()) return std::nullopt;
        return bits;
    };
}

BitProvider provider_from_approx(machine::OmegaApproximation approx, std::uint64_t bits_cap) {
    return [approx = std::move(approx),
            bits_cap](std::uint64_t need) -> std::optional<omega::CertifiedBits> {
        if (need == 0 || need > bits_cap) return std::nullopt;
        return omega::extract_bits(approx, need);
    };
}

std::vector<GrowthBenchRow> growth_benchmark(std::uint32_t n_min, std::uint32_t n_max,
                                             instance::CoefficientPolicy policy,
                                             const BitProvider& provider,
                                             const RunConfig& config) {
    if (n_min < 2 || n_min > n_max) throw Error("growth_benchmark: need 2 <= n_min <= n_max");
    if (n_max > config.enum_cap) throw CapExceededError("growth n_max", n_max, config.enum_cap);

    std::vector<GrowthBenchRow> rows;
    for (std::uint32_t n = n_min; n <= n_max; ++n) {
        GrowthBenchRow row;
        row.n = n;
        const Int s_exact = structures::coefficient_count(n, policy);
        row.s = s_exact.convert_to<std::uint64_t>();
        row.t = instance::chunk_width(row.s);
        row.bits_read = row.s * row.t;
        row.space_log2 = row.bits_read;

        const bool within_cap = row.space_log2 < 64 &&
                                (Int(1) << row.space_log2) <= Int(config.candidate_cap);
        if (within_cap) {
            if (auto bits = provider(row.bits_read)) {
                try {
                    const auto inst = instance::build_instance(n, policy, *bits);
                    const EqualityOracle oracle = oracle_for(inst);
                    const SolveResult solved = brute_force(inst.s, inst.t, oracle, config);
                    row.wall_ms = solved.stats.wall_ms;
                    row.searched = solved.stats.found;
                } catch (const AllZeroCoefficientsError&) {
                    // The window decodes to zero everywhere (common for small n,
                    // where the expansion prefix starts 0...), so there is no
                    // instance to search; the row stays size-only.
                }
            }
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace omegalab::solver

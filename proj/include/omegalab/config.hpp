#pragma once

#include <cstdint>
#include <string>

namespace omegalab {

// Resource ceilings shared by library entry points and the CLI.
// Every cap is enforced before work starts; exceeding one raises
// CapExceededError rather than silently truncating results.
struct RunConfig {
    std::uint32_t max_level_cap = 6;
    std::uint64_t max_steps_cap = 1'000'000;
    std::uint32_t enum_cap = 12;
    std::uint32_t dim_cap = 6;           // max subsystem count for dense states (2^dim_cap amplitudes)
    std::uint64_t candidate_cap = 1ULL << 24;
    std::uint64_t bits_cap = 1ULL << 26;
    std::uint32_t workers = 1;
};

// Parses "key = value" lines; '#' starts a comment, blank lines are
// skipped, unknown keys rejected so typos don't silently use defaults.
RunConfig parse_config_text(const std::string& text);
RunConfig load_config_file(const std::string& path);

}  // namespace omegalab

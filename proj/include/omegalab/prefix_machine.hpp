#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "omegalab/config.hpp"
#include "omegalab/rational.hpp"

namespace omegalab::machine {

inline constexpr const char* kMachineId = "toy8-unary-v1";

enum class Opcode : std::uint8_t {
    Halt = 0,      // 000
    Inc = 1,       // 001
    Dec = 2,       // 010 (floors at 0)
    Right = 3,     // 011
    Left = 4,      // 100 (floors at 0)
    Skipz = 5,     // 101 (skip next instruction when current cell is 0)
    JmpStart = 6,  // 110 (instruction pointer back to 0)
    Nop = 7,       // 111
};

inline constexpr std::size_t kOpcodeCount = 8;

using ProgramBody = std::vector<Opcode>;

const char* opcode_name(Opcode op);
std::string opcode_bits(Opcode op);

// Tape cells and the data pointer are nonnegative; DEC/LEFT floor at 0.
// Cells beyond tape.size() read as 0.
struct MachineState {
    std::vector<std::uint64_t> tape;
    std::uint64_t pointer = 0;
    std::uint64_t ip = 0;
    std::uint64_t steps = 0;

    std::uint64_t cell() const { return pointer < tape.size() ? tape[pointer] : 0; }
};

struct RunOutcome {
    enum class Kind { Halted, StillRunning, Invalid };
    Kind kind = Kind::Invalid;
    std::uint64_t steps = 0;

    bool halted() const { return kind == Kind::Halted; }

    static RunOutcome halted_after(std::uint64_t s) { return {Kind::Halted, s}; }
    static RunOutcome still_running(std::uint64_t s) { return {Kind::StillRunning, s}; }
    static RunOutcome invalid() { return {Kind::Invalid, 0}; }
};

struct RunResult {
    RunOutcome outcome;
    MachineState final_state;
};

// Prefix-free coding: body p of k opcodes (3k bits) encodes as 1^{3k} 0 p,
// total length 6k + 1.
std::string encode_program(const ProgramBody& body);
std::optional<ProgramBody> decode_program(const std::string& bits);

RunOutcome run(const ProgramBody& body, std::uint64_t max_steps);
RunResult run_with_state(const ProgramBody& body, std::uint64_t max_steps);
RunOutcome run_encoded(const std::string& bits, std::uint64_t max_steps);

// All 8^k bodies of exactly k opcodes, lexicographic by opcode bits.
std::vector<ProgramBody> enumerate_bodies(std::uint32_t k);
std::uint64_t body_count(std::uint32_t k);  // 8^k
ProgramBody body_from_index(std::uint32_t k, std::uint64_t index);

// Per-program weight 2^{-(6k+1)}, whole-level mass 8^k * 2^{-(6k+1)} = 2^{-(3k+1)},
// and the closed-form mass of every level beyond K: 2^{-3K-1}/7.
Rational level_weight(std::uint32_t k);
Rational level_mass(std::uint32_t k);
Rational tail_mass(std::uint32_t max_level);

struct OmegaApproximation {
    std::string machine_id;
    std::uint32_t max_level = 0;
    std::uint64_t max_steps = 0;
    Rational lower_bound;
    Rational pending_mass;
    Rational tail_mass;
    std::uint64_t halted_count = 0;
    std::uint64_t pending_count = 0;

    bool operator==(const OmegaApproximation&) const = default;
};

// Runs every body of level k <= max_level for up to max_steps steps.
// Exact-rational ledger; deterministic for any worker count.
OmegaApproximation dovetail(std::uint32_t max_level, std::uint64_t max_steps,
                            const RunConfig& config = RunConfig{});

bool kraft_check(const OmegaApproximation& approx);

}  // namespace omegalab::machine

#include "omegalab/prefix_machine.hpp"

#include <algorithm>
#include <thread>

#include "omegalab/errors.hpp"

namespace omegalab::machine {

const char* opcode_name(Opcode op) {
    switch (op) {
        case Opcode::Halt: return "HALT";
        case Opcode::Inc: return "INC";
        case Opcode::Dec: return "DEC";
        case Opcode::Right: return "RIGHT";
        case Opcode::Left: return "LEFT";
        case Opcode::Skipz: return "SKIPZ";
        case Opcode::JmpStart: return "JMPSTART";
        case Opcode::Nop: return "NOP";
    }
    return "?";
}

std::string opcode_bits(Opcode op) {
    const auto v = static_cast<unsigned>(op);
    std::string out(3, '0');
    out[0] = static_cast<char>('0' + ((v >> 2) & 1));
    out[1] = static_cast<char>('0' + ((v >> 1) & 1));
    out[2] = static_cast<char>('0' + (v & 1));
    return out;
}

std::string encode_program(const ProgramBody& body) {
    if (body.empty()) throw Error("encode_program: empty body");
    std::string out(3 * body.size(), '1');
    out.push_back('0');
    for (Opcode op : body) out += opcode_bits(op);
    return out;
}

std::optional<ProgramBody> decode_program(const std::string& bits) {
    std::size_t ones = 0;
    while (ones < bits.size() && bits[ones] == '1') ++ones;
    if (ones == 0 || ones % 3 != 0) return std::nullopt;          // empty or ragged body
    if (ones >= bits.size() || bits[ones] != '0') return std::nullopt;  // missing separator
    const std::string body_bits = bits.substr(ones + 1);
    if (body_bits.size() != ones) return std::nullopt;            // length mismatch
    ProgramBody body;
    body.reserve(ones / 3);
    for (std::size_t i = 0; i < body_bits.size(); i += 3) {
        unsigned v = 0;
        for (std::size_t j = 0; j < 3; ++j) {
            const char c = body_bits[i + j];
            if (c != '0' && c != '1') return std::nullopt;
            v = (v << 1) | static_cast<unsigned>(c - '0');
        }
        body.push_back(static_cast<Opcode>(v));
    }
    return body;
}

RunResult run_with_state(const ProgramBody& body, std::uint64_t max_steps) {
    if (body.empty()) throw Error("run: empty body");
    if (max_steps == 0) throw Error("run: max_steps must be >= 1");
    MachineState st;
    while (true) {
        if (st.ip >= body.size()) return {RunOutcome::halted_after(st.steps), std::move(st)};
        if (st.steps >= max_steps) return {RunOutcome::still_running(st.steps), std::move(st)};
        const Opcode op = body[st.ip];
        ++st.steps;
        switch (op) {
            case Opcode::Halt:
                return {RunOutcome::halted_after(st.steps), std::move(st)};
            case Opcode::Inc:
                if (st.pointer >= st.tape.size()) st.tape.resize(st.pointer + 1, 0);
                ++st.tape[st.pointer];
                ++st.ip;
                break;
            case Opcode::Dec:
                if (st.pointer < st.tape.size() && st.tape[st.pointer] > 0) --st.tape[st.pointer];
                ++st.ip;
                break;
            case Opcode::Right:
                ++st.pointer;
                ++st.ip;
                break;
            case Opcode::Left:
                if (st.pointer > 0) --st.pointer;
                ++st.ip;
                break;
            case Opcode::Skipz:
                st.ip += (st.cell() == 0) ? 2 : 1;
                break;
            case Opcode::JmpStart:
                st.ip = 0;
                break;
            case Opcode::Nop:
                ++st.ip;
                break;
        }
    }
}

RunOutcome run(const ProgramBody& body, std::uint64_t max_steps) {
    return run_with_state(body, max_steps).outcome;
}

RunOutcome run_encoded(const std::string& bits, std::uint64_t max_steps) {
    const auto body = decode_program(bits);
    if (!body) return RunOutcome::invalid();
    return run(*body, max_steps);
}

std::uint64_t body_count(std::uint32_t k) {
    if (k == 0 || k > 20) throw Error("body_count: level out of range");
    std::uint64_t n = 1;
    for (std::uint32_t i = 0; i < k; ++i) n *= 8;
    return n;
}

ProgramBody body_from_index(std::uint32_t k, std::uint64_t index) {
    ProgramBody body(k);
    for (std::uint32_t i = 0; i < k; ++i) {
        const unsigned shift = 3 * (k - 1 - i);
        body[i] = static_cast<Opcode>((index >> shift) & 7);
    }
    return body;
}

std::vector<ProgramBody> enumerate_bodies(std::uint32_t k) {
    if (k == 0) throw Error("enumerate_bodies: level must be >= 1");
    if (k > 7) throw CapExceededError("enumerate_bodies level", k, 7);
    const std::uint64_t total = body_count(k);
    std::vector<ProgramBody> out;
    out.reserve(total);
    for (std::uint64_t i = 0; i < total; ++i) out.push_back(body_from_index(k, i));
    return out;
}

Rational level_weight(std::uint32_t k) {
    return Rational(1, Int(1) << (6 * k + 1));
}

Rational level_mass(std::uint32_t k) {
    return Rational(1, Int(1) << (3 * k + 1));
}

Rational tail_mass(std::uint32_t max_level) {
    return Rational(1, 7 * (Int(1) << (3 * max_level + 1)));
}

namespace {

struct LevelCounts {
    std::uint64_t halted = 0;
    std::uint64_t pending = 0;
};

// All programs at one level carry the same weight, so the exact-rational
// merge reduces to counting halted/pending bodies per level.
LevelCounts count_level(std::uint32_t k, std::uint64_t max_steps, std::uint32_t workers) {
    const std::uint64_t total = body_count(k);
    const std::uint32_t used = static_cast<std::uint32_t>(
        std::min<std::uint64_t>(workers, total));

    std::vector<LevelCounts> partial(used);
    auto work = [&](std::uint32_t w) {
        const std::uint64_t begin = total * w / used;
        const std::uint64_t end = total * (w + 1) / used;
        LevelCounts local;
        for (std::uint64_t i = begin; i < end; ++i) {
            const RunOutcome out = run(body_from_index(k, i), max_steps);
            if (out.halted()) {
                ++local.halted;
            } else {
                ++local.pending;
            }
        }
        partial[w] = local;
    };

    if (used <= 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(used);
        for (std::uint32_t w = 0; w < used; ++w) threads.emplace_back(work, w);
        for (auto& t : threads) t.join();
    }

    LevelCounts merged;
    for (const auto& p : partial) {
        merged.halted += p.halted;
        merged.pending += p.pending;
    }
    return merged;
}

}  // namespace

OmegaApproximation dovetail(std::uint32_t max_level, std::uint64_t max_steps,
                            const RunConfig& config) {
    if (max_level == 0) throw Error("dovetail: max_level must be >= 1");
    if (max_steps == 0) throw Error("dovetail: max_steps must be >= 1");
    if (max_level > config.max_level_cap) {
        throw CapExceededError("max_level", max_level, config.max_level_cap);
    }
    if (max_steps > config.max_steps_cap) {
        throw CapExceededError("max_steps", max_steps, config.max_steps_cap);
    }

    OmegaApproximation approx;
    approx.machine_id = kMachineId;
    approx.max_level = max_level;
    approx.max_steps = max_steps;
    approx.lower_bound = 0;
    approx.pending_mass = 0;
    for (std::uint32_t k = 1; k <= max_level; ++k) {
        const LevelCounts counts = count_level(k, max_steps, config.workers);
        const Rational w = level_weight(k);
        approx.lower_bound += Rational(counts.halted) * w;
        approx.pending_mass += Rational(counts.pending) * w;
        approx.halted_count += counts.halted;
        approx.pending_count += counts.pending;
    }
    approx.tail_mass = tail_mass(max_level);
    return approx;
}

bool kraft_check(const OmegaApproximation& approx) {
    return approx.lower_bound + approx.pending_mass + approx.tail_mass <= 1;
}

}  // namespace omegalab::machine

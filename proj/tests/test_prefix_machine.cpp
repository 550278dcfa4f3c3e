#include <doctest.h>

#include <set>

#include "omegalab/errors.hpp"
#include "omegalab/prefix_machine.hpp"
#include "omegalab/serialize.hpp"
#include "test_support.hpp"

using namespace omegalab;
using namespace omegalab::machine;

TEST_CASE("opcode encoding is a bijection on 3-bit patterns") {
    std::set<std::string> patterns;
    for (unsigned v = 0; v < 8; ++v) {
        patterns.insert(opcode_bits(static_cast<Opcode>(v)));
    }
    CHECK(patterns.size() == 8);
    CHECK(opcode_bits(Opcode::Halt) == "000");
    CHECK(opcode_bits(Opcode::Nop) == "111");
}

TEST_CASE("encode_program produces unary length prefix plus body") {
    CHECK(encode_program({Opcode::Halt}) == "1110000");
    CHECK(encode_program({Opcode::Inc, Opcode::Halt}) == "1111110001000");
    CHECK_THROWS_AS(encode_program({}), Error);
}

TEST_CASE("decode_program inverts encode_program for k <= 2") {
    for (std::uint32_t k = 1; k <= 2; ++k) {
        for (const auto& body : enumerate_bodies(k)) {
            const auto decoded = decode_program(encode_program(body));
            REQUIRE(decoded.has_value());
            CHECK(*decoded == body);
        }
    }
}

TEST_CASE("decode_program rejects malformed encodings") {
    CHECK(decode_program("1110000").has_value());
    CHECK_FALSE(decode_program("0").has_value());          // empty body
    CHECK_FALSE(decode_program("101").has_value());        // body length 1
    CHECK_FALSE(decode_program("111000").has_value());     // truncated body
    CHECK_FALSE(decode_program("11100000").has_value());   // trailing bit
    CHECK_FALSE(decode_program("111").has_value());        // missing separator
    CHECK_FALSE(decode_program("1110a00").has_value());    // non-bit character
    CHECK_FALSE(decode_program("").has_value());
}

TEST_CASE("valid encodings up to length 13 form a prefix-free set") {
    // Collect the valid set by decoding every bitstring of length 1..13.
    std::vector<std::string> valid;
    for (std::size_t len = 1; len <= 13; ++len) {
        for (std::uint64_t x = 0; x < (1ULL << len); ++x) {
            std::string bits(len, '0');
            for (std::size_t i = 0; i < len; ++i) {
                bits[i] = ((x >> (len - 1 - i)) & 1) ? '1' : '0';
            }
            if (decode_program(bits)) valid.push_back(bits);
        }
    }
    // Exactly the level-1 and level-2 programs fit in 13 bits.
    CHECK(valid.size() == 8 + 64);
    for (const auto& a : valid) {
        for (const auto& b : valid) {
            if (a == b) continue;
            const bool is_prefix = a.size() <= b.size() && b.compare(0, a.size(), a) == 0;
            CHECK_FALSE(is_prefix);
        }
    }
}

TEST_CASE("run handles halting, fall-off and step budgets") {
    CHECK(run({Opcode::Halt}, 10).kind == RunOutcome::Kind::Halted);
    CHECK(run({Opcode::Halt}, 10).steps == 1);
    CHECK(run({Opcode::Nop}, 10).kind == RunOutcome::Kind::Halted);
    CHECK(run({Opcode::Nop}, 10).steps == 1);

    const auto loop = run({Opcode::JmpStart}, 1000);
    CHECK(loop.kind == RunOutcome::Kind::StillRunning);
    CHECK(loop.steps == 1000);
}

TEST_CASE("SKIPZ skips the next instruction only on zero") {
    // Cell is 0: SKIPZ jumps over JMPSTART straight to HALT.
    const auto skipped = run({Opcode::Skipz, Opcode::JmpStart, Opcode::Halt}, 100);
    CHECK(skipped.kind == RunOutcome::Kind::Halted);
    CHECK(skipped.steps == 2);

    // Cell is 1: SKIPZ does not skip, so JMPSTART loops forever.
    const auto looping = run({Opcode::Inc, Opcode::Skipz, Opcode::JmpStart, Opcode::Halt}, 100);
    CHECK(looping.kind == RunOutcome::Kind::StillRunning);

    // SKIPZ as the last opcode falls off either way.
    CHECK(run({Opcode::Skipz}, 10).kind == RunOutcome::Kind::Halted);
}

TEST_CASE("DEC and LEFT floor at zero") {
    const auto dec = run_with_state({Opcode::Dec, Opcode::Dec, Opcode::Halt}, 10);
    CHECK(dec.outcome.kind == RunOutcome::Kind::Halted);
    CHECK(dec.final_state.cell() == 0);

    const auto left = run_with_state({Opcode::Left, Opcode::Left, Opcode::Halt}, 10);
    CHECK(left.final_state.pointer == 0);

    const auto mixed =
        run_with_state({Opcode::Inc, Opcode::Dec, Opcode::Dec, Opcode::Right, Opcode::Left,
                        Opcode::Left, Opcode::Halt},
                       100);
    CHECK(mixed.final_state.pointer == 0);
    CHECK(mixed.final_state.cell() == 0);
}

TEST_CASE("tape grows to the right and INC/DEC act on the pointed cell") {
    const auto r = run_with_state(
        {Opcode::Inc, Opcode::Inc, Opcode::Right, Opcode::Inc, Opcode::Halt}, 100);
    REQUIRE(r.outcome.kind == RunOutcome::Kind::Halted);
    REQUIRE(r.final_state.tape.size() >= 2);
    CHECK(r.final_state.tape[0] == 2);
    CHECK(r.final_state.tape[1] == 1);
    CHECK(r.final_state.pointer == 1);
}

TEST_CASE("run_encoded flags malformed encodings as Invalid") {
    CHECK(run_encoded("1110000", 10).kind == RunOutcome::Kind::Halted);
    CHECK(run_encoded("111000", 10).kind == RunOutcome::Kind::Invalid);
    CHECK(run_encoded("", 10).kind == RunOutcome::Kind::Invalid);
}

TEST_CASE("enumerate_bodies is lexicographic with 8^k entries") {
    const auto level1 = enumerate_bodies(1);
    REQUIRE(level1.size() == 8);
    CHECK(level1.front() == ProgramBody{Opcode::Halt});
    CHECK(level1.back() == ProgramBody{Opcode::Nop});

    const auto level2 = enumerate_bodies(2);
    REQUIRE(level2.size() == 64);
    CHECK(level2.front() == ProgramBody{Opcode::Halt, Opcode::Halt});
    CHECK(level2[1] == ProgramBody{Opcode::Halt, Opcode::Inc});

    // Lexicographic by opcode bits == lexicographic by encoded body bits.
    for (std::size_t i = 1; i < level2.size(); ++i) {
        CHECK(encode_program(level2[i - 1]) < encode_program(level2[i]));
    }
    CHECK_THROWS_AS(enumerate_bodies(0), Error);
}

TEST_CASE("level weights and masses have the closed forms") {
    CHECK(level_weight(1) == Rational(1, 128));
    CHECK(level_mass(1) == Rational(1, 16));
    CHECK(level_mass(2) == Rational(1, 128));
    CHECK(tail_mass(0) == Rational(1, 14));
    CHECK(tail_mass(1) == Rational(1, 112));
    for (std::uint32_t k = 0; k <= 5; ++k) {
        CHECK(tail_mass(k) == 8 * tail_mass(k + 1));
        CHECK(tail_mass(k) == level_mass(k + 1) + tail_mass(k + 1));
    }
}

TEST_CASE("dovetail at K=1, S=10 matches the hand enumeration") {
    const auto approx = dovetail(1, 10);
    CHECK(approx.machine_id == std::string(kMachineId));
    CHECK(approx.lower_bound == Rational(7, 128));
    CHECK(approx.pending_mass == Rational(1, 128));  // [JMPSTART]
    CHECK(approx.tail_mass == Rational(1, 112));
    CHECK(approx.halted_count == 7);
    CHECK(approx.pending_count == 1);
    CHECK(kraft_check(approx));
}

TEST_CASE("dovetail is monotone in both frontier dimensions") {
    std::vector<OmegaApproximation> grid;
    for (std::uint32_t k : {1u, 2u}) {
        for (std::uint64_t s : {1ull, 10ull, 100ull}) {
            grid.push_back(dovetail(k, s));
        }
    }
    for (const auto& a : grid) {
        CHECK(kraft_check(a));
        for (const auto& b : grid) {
            if (a.max_level <= b.max_level && a.max_steps <= b.max_steps) {
                CHECK(a.lower_bound <= b.lower_bound);
            }
        }
    }
}

TEST_CASE("explored mass is conserved as the step budget grows") {
    for (std::uint32_t k : {1u, 2u}) {
        const auto small = dovetail(k, 1);
        const auto large = dovetail(k, 50);
        CHECK(small.lower_bound + small.pending_mass == large.lower_bound + large.pending_mass);
    }
    // Every level-1 program halts on its first step or never, so the budget
    // only moves mass at level 2 and beyond ([NOP, HALT] needs two steps).
    CHECK(dovetail(1, 1).lower_bound == dovetail(1, 50).lower_bound);
    CHECK(dovetail(2, 1).lower_bound < dovetail(2, 50).lower_bound);
}

TEST_CASE("dovetail output is identical for 1 and 4 workers") {
    RunConfig one;
    one.workers = 1;
    RunConfig four;
    four.workers = 4;
    for (std::uint32_t k : {1u, 2u, 3u}) {
        CHECK(dovetail(k, 25, one) == dovetail(k, 25, four));
    }
}

TEST_CASE("dovetail agrees with the naive sequential loop at K <= 2") {
    for (std::uint32_t k : {1u, 2u}) {
        for (std::uint64_t s : {1ull, 10ull, 100ull}) {
            CHECK(dovetail(k, s) == testsup::naive_omega(k, s));
        }
    }
}

TEST_CASE("dovetail enforces the configured caps") {
    RunConfig cfg;
    cfg.max_level_cap = 2;
    cfg.max_steps_cap = 100;
    CHECK_THROWS_AS(dovetail(3, 10, cfg), CapExceededError);
    CHECK_THROWS_AS(dovetail(1, 101, cfg), CapExceededError);
    CHECK_NOTHROW(dovetail(2, 100, cfg));
}

TEST_CASE("kraft_check rejects a hand-built violation") {
    OmegaApproximation bogus;
    bogus.machine_id = kMachineId;
    bogus.max_level = 1;
    bogus.max_steps = 1;
    bogus.lower_bound = 1;
    bogus.pending_mass = 0;
    bogus.tail_mass = Rational(1, 2);
    CHECK_FALSE(kraft_check(bogus));
}

TEST_CASE("approximation JSON round trip is identity") {
    const auto approx = dovetail(2, 10);
    const std::string doc = serialize::approx_to_json(approx);
    CHECK(serialize::approx_from_json(doc) == approx);
    CHECK(doc.find("\"lower_bound\"") != std::string::npos);

    const auto k1 = serialize::approx_to_json(dovetail(1, 10));
    CHECK(k1.find("7/128") != std::string::npos);
}

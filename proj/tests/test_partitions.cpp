#include <doctest.h>

#include <set>

#include <json.hpp>

#include "omegalab/errors.hpp"
#include "omegalab/partitions.hpp"
#include "omegalab/serialize.hpp"

using namespace omegalab;
using namespace omegalab::structures;

namespace {

// Bell numbers 0..12, independent of the library's triangle.
const Int kBell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975, 678570, 4213597};

}  // namespace

TEST_CASE("bell_number matches the reference table") {
    for (std::uint32_t n = 0; n <= 12; ++n) {
        CHECK(bell_number(n) == kBell[n]);
    }
}

TEST_CASE("term_count is Bell(n) - 1") {
    CHECK(term_count(1) == 0);
    CHECK(term_count(2) == 1);
    CHECK(term_count(3) == 4);
    CHECK(term_count(4) == 14);
    CHECK(term_count(5) == 51);
    CHECK_THROWS_AS(term_count(0), Error);
}

TEST_CASE("n=2 catalog is the single split") {
    const auto catalog = enumerate_partitions(2);
    REQUIRE(catalog.partitions.size() == 1);
    CHECK(catalog.partitions[0] == SetPartition{{1}, {2}});
}

TEST_CASE("n=3 catalog order matches the four summatories") {
    const auto catalog = enumerate_partitions(3);
    REQUIRE(catalog.partitions.size() == 4);
    CHECK(catalog.partitions[0] == SetPartition{{1}, {2}, {3}});
    CHECK(catalog.partitions[1] == SetPartition{{1}, {2, 3}});
    CHECK(catalog.partitions[2] == SetPartition{{1, 3}, {2}});
    CHECK(catalog.partitions[3] == SetPartition{{1, 2}, {3}});
    CHECK(partition_to_string(catalog.partitions[2]) == "{1,3}{2}");
}

TEST_CASE("catalogs exclude the single-block partition") {
    for (std::uint32_t n = 1; n <= 6; ++n) {
        bool saw_single_block = false;
        for_each_partition(n, [&](const SetPartition& p) {
            if (p.size() == 1) saw_single_block = true;
        });
        CHECK_FALSE(saw_single_block);
    }
    CHECK(enumerate_partitions(1).partitions.empty());
}

TEST_CASE("every partition is canonical, disjoint and covers 1..n") {
    for (std::uint32_t n = 1; n <= 7; ++n) {
        for_each_partition(n, [&](const SetPartition& p) {
            std::set<std::uint32_t> seen;
            for (std::size_t b = 0; b < p.size(); ++b) {
                REQUIRE(!p[b].empty());
                for (std::size_t i = 1; i < p[b].size(); ++i) {
                    CHECK(p[b][i - 1] < p[b][i]);  // elements ascending
                }
                if (b > 0) CHECK(p[b - 1].front() < p[b].front());  // blocks by smallest element
                for (auto q : p[b]) {
                    CHECK(seen.insert(q).second);
                }
            }
            CHECK(seen.size() == n);
            CHECK(*seen.begin() == 1);
            CHECK(*seen.rbegin() == n);
        });
    }
}

TEST_CASE("enumeration count equals the Bell recurrence up to n=10") {
    for (std::uint32_t n = 1; n <= 10; ++n) {
        std::uint64_t count = 0;
        for_each_partition(n, [&](const SetPartition&) { ++count; });
        CHECK(Int(count) == term_count(n));
    }
}

TEST_CASE("partitions in a catalog are pairwise distinct") {
    for (std::uint32_t n = 2; n <= 7; ++n) {
        std::set<std::string> keys;
        std::uint64_t count = 0;
        for_each_partition(n, [&](const SetPartition& p) {
            keys.insert(partition_to_string(p));
            ++count;
        });
        CHECK(keys.size() == count);
    }
}

TEST_CASE("enumeration order is deterministic") {
    const auto a = enumerate_partitions(5);
    const auto b = enumerate_partitions(5);
    CHECK(a.partitions == b.partitions);
}

TEST_CASE("growth claim: term_count exceeds 2^n beyond n=4") {
    CHECK(term_count(4) == 14);
    CHECK(term_count(4) <= Int(1) << 4);
    for (std::uint32_t n = 5; n <= 12; ++n) {
        CHECK(term_count(n) > Int(1) << n);
    }
}

TEST_CASE("coefficient_count reproduces the anchors") {
    CHECK(coefficient_count(2, CoefficientPolicy::UniformCaratheodory) == 16);
    CHECK(coefficient_count(3, CoefficientPolicy::TermsOnly) == 4);
    CHECK(coefficient_count(3, CoefficientPolicy::UniformCaratheodory) == 256);
    CHECK(coefficient_count(2, CoefficientPolicy::TermsOnly) == 1);
    CHECK_THROWS_AS(coefficient_count(1, CoefficientPolicy::TermsOnly), Error);
}

TEST_CASE("policy names round trip") {
    CHECK(parse_policy("terms-only") == CoefficientPolicy::TermsOnly);
    CHECK(parse_policy("uniform-caratheodory") == CoefficientPolicy::UniformCaratheodory);
    CHECK(policy_name(CoefficientPolicy::TermsOnly) == std::string("terms-only"));
    CHECK_THROWS_AS(parse_policy("bogus"), SchemaError);
}

TEST_CASE("growth_table rows carry the policy formulas") {
    const auto report = growth_table(5);
    REQUIRE(report.rows.size() == 4);  // n = 2..5
    for (const auto& row : report.rows) {
        CHECK(row.s_terms_only == row.terms);
        CHECK(row.s_uniform_caratheodory == row.terms * (Int(1) << (2 * row.n)));
        CHECK(row.pow2 == Int(1) << row.n);
    }
    CHECK(report.rows[3].n == 5);
    CHECK(report.rows[3].terms == 51);

    const auto csv = serialize::growth_table_csv(report);
    CHECK(csv.find("n,terms,pow2,S_terms_only,S_uniform_caratheodory\n") == 0);
    CHECK(csv.find("5,51,32,51,52224\n") != std::string::npos);
    CHECK(csv.find("4,14,16,14,3584\n") != std::string::npos);
    CHECK(csv.find("2,1,4,1,16\n") != std::string::npos);
}

TEST_CASE("enumeration caps are enforced") {
    RunConfig cfg;
    cfg.enum_cap = 6;
    CHECK_THROWS_AS(enumerate_partitions(7, cfg), CapExceededError);
    CHECK_THROWS_AS(growth_table(7, cfg), CapExceededError);
    CHECK_NOTHROW(enumerate_partitions(6, cfg));
}

TEST_CASE("catalog JSON lists blocks of integers") {
    const auto doc = nlohmann::json::parse(serialize::catalog_to_json(enumerate_partitions(3)));
    CHECK(doc.at("n") == 3);
    const auto& parts = doc.at("partitions");
    REQUIRE(parts.is_array());
    REQUIRE(parts.size() == 4);
    CHECK(parts[0] == nlohmann::json::parse("[[1],[2],[3]]"));
    CHECK(parts[2] == nlohmann::json::parse("[[1,3],[2]]"));
}

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "omegalab/config.hpp"
#include "omegalab/rational.hpp"

namespace omegalab::structures {

// Canonical form: blocks sorted by smallest element, elements ascending.
using SetPartition = std::vector<std::vector<std::uint32_t>>;

struct PartitionCatalog {
    std::uint32_t n = 0;
    std::vector<SetPartition> partitions;  // Bell(n) - 1 entries; {{1..n}} excluded
};

enum class CoefficientPolicy { TermsOnly, UniformCaratheodory };

const char* policy_name(CoefficientPolicy policy);                  // "terms-only" etc.
CoefficientPolicy parse_policy(const std::string& name);            // throws SchemaError

// Bell(n) by the Bell-triangle recurrence.
Int bell_number(std::uint32_t n);
Int term_count(std::uint32_t n);  // Bell(n) - 1

Int coefficient_count(std::uint32_t n, CoefficientPolicy policy);

// Catalog order: all singletons first, the coarsest retained partitions last
// (restricted-growth strings in descending lexicographic order); {{1..n}}
// is skipped. Streaming form avoids materializing large catalogs.
void for_each_partition(std::uint32_t n, const std::function<void(const SetPartition&)>& fn);
PartitionCatalog enumerate_partitions(std::uint32_t n, const RunConfig& config = RunConfig{});

std::string partition_to_string(const SetPartition& p);  // "{1,3}{2}" display form

struct GrowthRow {
    std::uint32_t n = 0;
    Int terms;
    Int pow2;
    Int s_terms_only;
    Int s_uniform_caratheodory;
};

struct GrowthReport {
    std::vector<GrowthRow> rows;  // n = 2 .. n_max
};

GrowthReport growth_table(std::uint32_t n_max, const RunConfig& config = RunConfig{});

}  // namespace omegalab::structures

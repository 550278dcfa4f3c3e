#pragma once

#include <string>
#include <vector>

#include "omegalab/instance.hpp"
#include "omegalab/omega_source.hpp"
#include "omegalab/partitions.hpp"
#include "omegalab/prefix_machine.hpp"
#include "omegalab/quantum.hpp"
#include "omegalab/solver.hpp"

namespace omegalab::serialize {

// All *_to_json return a pretty-printed document; all *_from_json throw
// SchemaError naming the offending field.

std::string approx_to_json(const machine::OmegaApproximation& approx);
machine::OmegaApproximation approx_from_json(const std::string& text);

std::string bits_to_json(const omega::CertifiedBits& bits);
omega::CertifiedBits bits_from_json(const std::string& text);

std::string instance_to_json(const instance::ChaitinInstance& inst);
instance::ChaitinInstance instance_from_json(const std::string& text);

std::string state_to_json(const quantum::DensityMatrix& rho);
quantum::DensityMatrix state_from_json(const std::string& text,
                                       const RunConfig& config = RunConfig{});

std::string catalog_to_json(const structures::PartitionCatalog& catalog);

std::string growth_table_csv(const structures::GrowthReport& report);
std::string growth_bench_csv(const std::vector<solver::GrowthBenchRow>& rows);

// Minimal CSV reader for the report formats above (no quoting, no embedded
// commas); skips empty trailing lines.
std::vector<std::vector<std::string>> parse_csv(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace omegalab::serialize

#include "omegalab/partitions.hpp"

#include "omegalab/errors.hpp"

namespace omegalab::structures {

const char* policy_name(CoefficientPolicy policy) {
    switch (policy) {
        case CoefficientPolicy::TermsOnly: return "terms-only";
        case CoefficientPolicy::UniformCaratheodory: return "uniform-caratheodory";
    }
    return "?";
}

CoefficientPolicy parse_policy(const std::string& name) {
    if (name == "terms-only") return CoefficientPolicy::TermsOnly;
    if (name == "uniform-caratheodory") return CoefficientPolicy::UniformCaratheodory;
    throw SchemaError("policy", "unknown policy '" + name + "'");
}

Int bell_number(std::uint32_t n) {
    // Bell triangle: row 0 is [1]; each row starts with the previous row's
    // last entry; Bell(n) is the first entry of row n.
    std::vector<Int> row{1};
    for (std::uint32_t i = 1; i <= n; ++i) {
        std::vector<Int> next;
        next.reserve(i + 1);
        next.push_back(row.back());
        for (const Int& v : row) next.push_back(next.back() + v);
        row = std::move(next);
    }
    return row.front();
}

Int term_count(std::uint32_t n) {
    if (n == 0) throw Error("term_count: n must be >= 1");
    return bell_number(n) - 1;
}

Int coefficient_count(std::uint32_t n, CoefficientPolicy policy) {
    if (n < 2) throw Error("coefficient_count: n must be >= 2");
    const Int terms = term_count(n);
    switch (policy) {
        case CoefficientPolicy::TermsOnly: return terms;
        case CoefficientPolicy::UniformCaratheodory: return terms * (Int(1) << (2 * n));
    }
    throw Error("coefficient_count: unknown policy");
}

namespace {

// Restricted growth strings in descending lexicographic order; the all-zero
// string (the single-block partition) comes last and is skipped.
void recurse(std::uint32_t n, std::uint32_t pos, std::uint32_t max_label,
             std::vector<std::uint32_t>& rgs, SetPartition& scratch,
             const std::function<void(const SetPartition&)>& fn) {
    if (pos == n) {
        if (max_label == 0 && n > 0) return;  // {{1..n}}
        scratch.assign(max_label + 1, {});
        for (std::uint32_t i = 0; i < n; ++i) scratch[rgs[i]].push_back(i + 1);
        fn(scratch);
        return;
    }
    const std::uint32_t top = (pos == 0) ? 0 : max_label + 1;
    for (std::uint32_t v = top + 1; v-- > 0;) {
        rgs[pos] = v;
        recurse(n, pos + 1, std::max(max_label, v), rgs, scratch, fn);
    }
}

}  // namespace

void for_each_partition(std::uint32_t n, const std::function<void(const SetPartition&)>& fn) {
    if (n == 0) throw Error("for_each_partition: n must be >= 1");
    std::vector<std::uint32_t> rgs(n, 0);
    SetPartition scratch;
    recurse(n, 0, 0, rgs, scratch, fn);
}

PartitionCatalog enumerate_partitions(std::uint32_t n, const RunConfig& config) {
    if (n == 0) throw Error("enumerate_partitions: n must be >= 1");
    if (n > config.enum_cap) throw CapExceededError("partition subsystem count", n, config.enum_cap);
    PartitionCatalog catalog;
    catalog.n = n;
    for_each_partition(n, [&](const SetPartition& p) { catalog.partitions.push_back(p); });
    return catalog;
}

std::string partition_to_string(const SetPartition& p) {
    std::string out;
    for (const auto& block : p) {
        out.push_back('{');
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i) out.push_back(',');
            out += std::to_string(block[i]);
        }
        out.push_back('}');
    }
    return out;
}

GrowthReport growth_table(std::uint32_t n_max, const RunConfig& config) {
    if (n_max < 2) throw Error("growth_table: n_max must be >= 2");
    if (n_max > config.enum_cap) throw CapExceededError("growth table n_max", n_max, config.enum_cap);
    GrowthReport report;
    for (std::uint32_t n = 2; n <= n_max; ++n) {
        GrowthRow row;
        row.n = n;
        row.terms = term_count(n);
        row.pow2 = Int(1) << n;
        row.s_terms_only = coefficient_count(n, CoefficientPolicy::TermsOnly);
        row.s_uniform_caratheodory = coefficient_count(n, CoefficientPolicy::UniformCaratheodory);
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace omegalab::structures

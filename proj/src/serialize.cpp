#include "omegalab/serialize.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "omegalab/bitstring.hpp"
#include "omegalab/errors.hpp"

namespace omegalab::serialize {

using nlohmann::json;

namespace {

json parse_document(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw SchemaError("(document)", "not valid JSON");
    return doc;
}

const json& field(const json& doc, const char* name) {
    if (!doc.is_object()) throw SchemaError("(document)", "expected a JSON object");
    const auto it = doc.find(name);
    if (it == doc.end()) throw SchemaError(name, "missing");
    return *it;
}

std::string string_field(const json& doc, const char* name) {
    const json& v = field(doc, name);
    if (!v.is_string()) throw SchemaError(name, "expected a string");
    return v.get<std::string>();
}

std::uint64_t uint_field(const json& doc, const char* name) {
    const json& v = field(doc, name);
    if (!v.is_number_unsigned()) throw SchemaError(name, "expected a nonnegative integer");
    return v.get<std::uint64_t>();
}

bool bool_field(const json& doc, const char* name) {
    const json& v = field(doc, name);
    if (!v.is_boolean()) throw SchemaError(name, "expected a boolean");
    return v.get<bool>();
}

Rational rational_field(const json& doc, const char* name) {
    const std::string s = string_field(doc, name);
    try {
        return parse_fraction(s);
    } catch (const std::invalid_argument& e) {
        throw SchemaError(name, e.what());
    }
}

json source_to_json(const omega::SourceInfo& source) {
    json j;
    if (source.kind == omega::SourceInfo::Kind::Computed) {
        j["kind"] = "computed";
        j["machine_id"] = source.machine_id;
        j["max_level"] = source.max_level;
        j["max_steps"] = source.max_steps;
    } else {
        j["kind"] = "external";
        j["digest"] = source.digest;
    }
    return j;
}

omega::SourceInfo source_from_json(const json& j) {
    const std::string kind = string_field(j, "kind");
    if (kind == "computed") {
        return omega::SourceInfo::computed(string_field(j, "machine_id"),
                                           static_cast<std::uint32_t>(uint_field(j, "max_level")),
                                           uint_field(j, "max_steps"));
    }
    if (kind == "external") {
        return omega::SourceInfo::external(string_field(j, "digest"));
    }
    throw SchemaError("source.kind", "expected \"computed\" or \"external\"");
}

}  // namespace

std::string approx_to_json(const machine::OmegaApproximation& approx) {
    json j;
    j["machine_id"] = approx.machine_id;
    j["max_level"] = approx.max_level;
    j["max_steps"] = approx.max_steps;
    j["lower_bound"] = fraction_string(approx.lower_bound);
    j["pending_mass"] = fraction_string(approx.pending_mass);
    j["tail_mass"] = fraction_string(approx.tail_mass);
    j["halted_count"] = approx.halted_count;
    j["pending_count"] = approx.pending_count;
    return j.dump(2) + "\n";
}

machine::OmegaApproximation approx_from_json(const std::string& text) {
    const json doc = parse_document(text);
    machine::OmegaApproximation approx;
    approx.machine_id = string_field(doc, "machine_id");
    approx.max_level = static_cast<std::uint32_t>(uint_field(doc, "max_level"));
    approx.max_steps = uint_field(doc, "max_steps");
    approx.lower_bound = rational_field(doc, "lower_bound");
    approx.pending_mass = rational_field(doc, "pending_mass");
    approx.tail_mass = rational_field(doc, "tail_mass");
    approx.halted_count = uint_field(doc, "halted_count");
    approx.pending_count = uint_field(doc, "pending_count");
    if (approx.max_level == 0) throw SchemaError("max_level", "must be >= 1");
    if (approx.max_steps == 0) throw SchemaError("max_steps", "must be >= 1");
    if (approx.lower_bound < 0 || approx.lower_bound > 1) {
        throw SchemaError("lower_bound", "outside [0, 1]");
    }
    if (approx.pending_mass < 0) throw SchemaError("pending_mass", "negative");
    if (approx.tail_mass < 0) throw SchemaError("tail_mass", "negative");
    if (!machine::kraft_check(approx)) {
        throw SchemaError("lower_bound", "lower + pending + tail exceeds 1");
    }
    return approx;
}

std::string bits_to_json(const omega::CertifiedBits& bits) {
    json j;
    j["bits"] = bits.bits;
    j["stable_prefix_len"] = bits.stable_prefix_len;
    j["source"] = source_to_json(bits.source);
    return j.dump(2) + "\n";
}

omega::CertifiedBits bits_from_json(const std::string& text) {
    const json doc = parse_document(text);
    omega::CertifiedBits bits;
    bits.bits = string_field(doc, "bits");
    if (!is_bit_string(bits.bits)) throw SchemaError("bits", "contains non-bit characters");
    bits.stable_prefix_len = uint_field(doc, "stable_prefix_len");
    if (bits.stable_prefix_len > bits.bits.size()) {
        throw SchemaError("stable_prefix_len", "exceeds bit count");
    }
    bits.source = source_from_json(field(doc, "source"));
    return bits;
}

std::string instance_to_json(const instance::ChaitinInstance& inst) {
    json j;
    j["n"] = inst.n;
    j["policy"] = structures::policy_name(inst.policy);
    j["s"] = inst.s;
    j["t"] = inst.t;
    j["bits"] = inst.bits;
    j["B"] = inst.B;
    j["k_b"] = inst.k_b.convert_to<std::uint64_t>();
    json weights = json::array();
    for (const Rational& w : inst.b) weights.push_back(fraction_string(w));
    j["b"] = std::move(weights);
    j["bits_certified"] = inst.bits_certified;
    j["source"] = source_to_json(inst.source);
    return j.dump(2) + "\n";
}

instance::ChaitinInstance instance_from_json(const std::string& text) {
    const json doc = parse_document(text);
    instance::ChaitinInstance inst;
    inst.n = static_cast<std::uint32_t>(uint_field(doc, "n"));
    if (inst.n < 2) throw SchemaError("n", "must be >= 2");
    inst.policy = structures::parse_policy(string_field(doc, "policy"));
    inst.s = uint_field(doc, "s");
    if (inst.s == 0) throw SchemaError("s", "must be >= 1");
    if (Int(inst.s) != structures::coefficient_count(inst.n, inst.policy)) {
        throw SchemaError("s", "does not match the coefficient count for n and policy");
    }
    inst.t = static_cast<std::uint32_t>(uint_field(doc, "t"));
    if (inst.t != instance::chunk_width(inst.s)) {
        throw SchemaError("t", "does not match the chunk width for s");
    }
    inst.bits = string_field(doc, "bits");
    if (!is_bit_string(inst.bits)) throw SchemaError("bits", "contains non-bit characters");
    if (inst.bits.size() != inst.s * inst.t) {
        throw SchemaError("bits", "length is not s*t");
    }

    const json& b_values = field(doc, "B");
    if (!b_values.is_array() || b_values.size() != inst.s) {
        throw SchemaError("B", "expected an array of s integers");
    }
    for (const json& v : b_values) {
        if (!v.is_number_unsigned()) throw SchemaError("B", "expected nonnegative integers");
        inst.B.push_back(v.get<std::uint64_t>());
    }
    if (inst.B != instance::chunk_bits(inst.bits, inst.s, inst.t)) {
        throw SchemaError("B", "does not match the bit chunks");
    }

    inst.k_b = Int(uint_field(doc, "k_b"));
    Int sum = 0;
    for (std::uint64_t v : inst.B) sum += v;
    if (sum == 0) throw SchemaError("k_b", "all chunk values are zero");
    if (inst.k_b != sum) throw SchemaError("k_b", "is not the sum of B");

    const json& weights = field(doc, "b");
    if (!weights.is_array() || weights.size() != inst.s) {
        throw SchemaError("b", "expected an array of s rationals");
    }
    Rational weight_sum = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (!weights[i].is_string()) throw SchemaError("b", "expected \"num/den\" strings");
        Rational w;
        try {
            w = parse_fraction(weights[i].get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw SchemaError("b", e.what());
        }
        if (w != Rational(Int(inst.B[i]), inst.k_b)) {
            throw SchemaError("b", "entry " + std::to_string(i) + " is not B_i/k_b");
        }
        weight_sum += w;
        inst.b.push_back(std::move(w));
    }
    if (weight_sum != 1) throw SchemaError("b", "does not sum to 1");

    inst.bits_certified = bool_field(doc, "bits_certified");
    inst.source = source_from_json(field(doc, "source"));
    return inst;
}

std::string state_to_json(const quantum::DensityMatrix& rho) {
    json j;
    j["n"] = rho.n;
    j["dim"] = static_cast<std::uint64_t>(rho.dim());
    json entries = json::array();
    for (Eigen::Index r = 0; r < rho.dim(); ++r) {
        for (Eigen::Index c = 0; c < rho.dim(); ++c) {
            entries.push_back(json::array({rho.m(r, c).real(), rho.m(r, c).imag()}));
        }
    }
    j["entries"] = std::move(entries);
    return j.dump(2) + "\n";
}

quantum::DensityMatrix state_from_json(const std::string& text, const RunConfig& config) {
    const json doc = parse_document(text);
    const std::uint32_t n = static_cast<std::uint32_t>(uint_field(doc, "n"));
    if (n == 0) throw SchemaError("n", "must be >= 1");
    if (n > config.dim_cap) {
        throw CapExceededError("subsystem count", n, config.dim_cap);
    }
    const std::uint64_t dim = uint_field(doc, "dim");
    if (dim != (1ULL << n)) throw SchemaError("dim", "is not 2^n");
    const json& entries = field(doc, "entries");
    if (!entries.is_array() || entries.size() != dim * dim) {
        throw SchemaError("entries", "expected dim*dim [re, im] pairs");
    }
    quantum::Matrix m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const json& e = entries[i];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
            throw SchemaError("entries", "entry " + std::to_string(i) + " is not [re, im]");
        }
        const double re = e[0].get<double>();
        const double im = e[1].get<double>();
        if (!std::isfinite(re) || !std::isfinite(im)) {
            throw SchemaError("entries", "entry " + std::to_string(i) + " is not finite");
        }
        m(static_cast<Eigen::Index>(i / dim), static_cast<Eigen::Index>(i % dim)) = {re, im};
    }
    return quantum::DensityMatrix{std::move(m), n};
}

std::string catalog_to_json(const structures::PartitionCatalog& catalog) {
    json j;
    j["n"] = catalog.n;
    json parts = json::array();
    for (const auto& partition : catalog.partitions) {
        json blocks = json::array();
        for (const auto& block : partition) blocks.push_back(block);
        parts.push_back(std::move(blocks));
    }
    j["partitions"] = std::move(parts);
    return j.dump(2) + "\n";
}

std::string growth_table_csv(const structures::GrowthReport& report) {
    std::ostringstream out;
    out << "n,terms,pow2,S_terms_only,S_uniform_caratheodory\n";
    for (const auto& row : report.rows) {
        out << row.n << ',' << row.terms.str() << ',' << row.pow2.str() << ','
            << row.s_terms_only.str() << ',' << row.s_uniform_caratheodory.str() << '\n';
    }
    return out.str();
}

std::string growth_bench_csv(const std::vector<solver::GrowthBenchRow>& rows) {
    std::ostringstream out;
    out << "n,s,t,bits_read,space_size,wall_ms,searched\n";
    for (const auto& row : rows) {
        out << row.n << ',' << row.s << ',' << row.t << ',' << row.bits_read << ','
            << solver::space_size_string(row.space_log2) << ',' << row.wall_ms << ','
            << (row.searched ? "true" : "false") << '\n';
    }
    return out.str();
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.push_back("");
        rows.push_back(std::move(cells));
    }
    return rows;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw Error("failed writing '" + path + "'");
}

}  // namespace omegalab::serialize

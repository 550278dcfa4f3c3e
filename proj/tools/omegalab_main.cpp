#include <cstdlib>
#include <functional>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "omegalab/bitstring.hpp"
#include "omegalab/config.hpp"
#include "omegalab/errors.hpp"
#include "omegalab/instance.hpp"
#include "omegalab/omega_source.hpp"
#include "omegalab/partitions.hpp"
#include "omegalab/prefix_machine.hpp"
#include "omegalab/quantum.hpp"
#include "omegalab/rational.hpp"
#include "omegalab/serialize.hpp"
#include "omegalab/solver.hpp"

namespace {

using namespace omegalab;

constexpr int kExitOk = 0;
constexpr int kExitOther = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;
constexpr int kExitInsufficientBits = 4;
constexpr int kExitSchema = 5;
constexpr int kExitVerification = 6;

void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    serialize::write_text_file(path, content);
}

struct ConfigOverrides {
    std::optional<std::string> config_path;
    std::optional<std::uint64_t> max_level_cap;
    std::optional<std::uint64_t> max_steps_cap;
    std::optional<std::uint64_t> enum_cap;
    std::optional<std::uint64_t> dim_cap;
    std::optional<std::uint64_t> candidate_cap;
    std::optional<std::uint64_t> bits_cap;
    std::optional<std::uint64_t> workers;

    RunConfig resolve() const {
        RunConfig cfg;
        if (config_path) {
            cfg = load_config_file(*config_path);
        } else if (const char* env = std::getenv("OMEGALAB_CONFIG"); env && *env) {
            cfg = load_config_file(env);
        }
        if (max_level_cap) cfg.max_level_cap = static_cast<std::uint32_t>(*max_level_cap);
        if (max_steps_cap) cfg.max_steps_cap = *max_steps_cap;
        if (enum_cap) cfg.enum_cap = static_cast<std::uint32_t>(*enum_cap);
        if (dim_cap) cfg.dim_cap = static_cast<std::uint32_t>(*dim_cap);
        if (candidate_cap) cfg.candidate_cap = *candidate_cap;
        if (bits_cap) cfg.bits_cap = *bits_cap;
        if (workers) {
            if (*workers == 0) throw Error("workers must be >= 1");
            cfg.workers = static_cast<std::uint32_t>(*workers);
        }
        return cfg;
    }
};

omega::CertifiedBits bits_from_flags(const std::string& bits_path, const std::string& approx_path,
                                     std::uint64_t need, const RunConfig& cfg) {
    if (!bits_path.empty()) return omega::load_bits_file(bits_path);
    const auto approx = serialize::approx_from_json(serialize::read_text_file(approx_path));
    if (need > cfg.bits_cap) throw CapExceededError("bit request", need, cfg.bits_cap);
    return omega::extract_bits(approx, need);
}

std::vector<std::uint64_t> parse_candidate(const std::string& text) {
    std::vector<std::uint64_t> values;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) throw Error("bad candidate: empty value in '" + text + "'");
        std::size_t used = 0;
        std::uint64_t v = 0;
        try {
            v = std::stoull(item, &used);
        } catch (const std::exception&) {
            throw Error("bad candidate value '" + item + "'");
        }
        if (used != item.size()) throw Error("bad candidate value '" + item + "'");
        values.push_back(v);
    }
    if (values.empty()) throw Error("bad candidate: no values");
    return values;
}

int run_state_check(const quantum::DensityMatrix& rho) {
    const quantum::StateReport report = quantum::check_state(rho);
    auto line = [](const char* name, bool ok, const std::string& detail) {
        std::cout << name << ": " << (ok ? "PASS" : "FAIL") << " (" << detail << ")\n";
    };
    std::ostringstream herm;
    herm << "max |rho - rho^dagger| = " << report.herm_dev << ", tolerance " << quantum::kHermTol;
    std::ostringstream trace;
    trace << "|tr rho - 1| = " << report.trace_dev << ", tolerance " << quantum::kTraceTol;
    std::ostringstream psd;
    psd << "min eigenvalue = " << report.min_eig << ", floor " << quantum::kPsdTol;
    line("hermitian", report.hermitian_ok, herm.str());
    line("unit_trace", report.trace_ok, trace.str());
    line("psd", report.psd_ok, psd.str());
    std::cout << "result: " << (report.ok() ? "PASS" : "FAIL") << "\n";
    return report.ok() ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Omega approximation, decomposition censuses and solver benchmarks"};
    app.require_subcommand(1);

    ConfigOverrides overrides;
    app.add_option("--config", overrides.config_path,
                   "key=value config file (default: $OMEGALAB_CONFIG)");
    app.add_option("--max-level-cap", overrides.max_level_cap, "frontier level cap");
    app.add_option("--max-steps-cap", overrides.max_steps_cap, "step budget cap");
    app.add_option("--enum-cap", overrides.enum_cap, "partition enumeration cap");
    app.add_option("--dim-cap", overrides.dim_cap, "qubit count cap for dense states");
    app.add_option("--candidate-cap", overrides.candidate_cap, "brute-force space cap");
    app.add_option("--bits-cap", overrides.bits_cap, "extracted bit count cap");
    app.add_option("--workers", overrides.workers, "worker threads for approximate/brute");

    std::function<int(const RunConfig&)> action;

    // ---- omega ----
    auto* omega_cmd = app.add_subcommand("omega", "halting-probability approximation");
    omega_cmd->require_subcommand(1);
    {
        auto* approx = omega_cmd->add_subcommand("approximate", "dovetail up to a frontier");
        auto max_level = std::make_shared<std::uint32_t>(0);
        auto max_steps = std::make_shared<std::uint64_t>(0);
        auto out = std::make_shared<std::string>("-");
        approx->add_option("--max-level", *max_level, "deepest program level")->required();
        approx->add_option("--max-steps", *max_steps, "step budget per program")->required();
        approx->add_option("--out", *out, "output JSON path, - for stdout");
        approx->callback([&action, max_level, max_steps, out] {
            action = [=](const RunConfig& cfg) {
                const auto result = machine::dovetail(*max_level, *max_steps, cfg);
                write_output(*out, serialize::approx_to_json(result));
                std::cerr << "lower bound " << fraction_string(result.lower_bound) << ", "
                          << result.halted_count << " halted / " << result.pending_count
                          << " pending\n";
                return kExitOk;
            };
        });

        auto* bits = omega_cmd->add_subcommand("bits", "expansion bits of an approximation");
        auto approx_path = std::make_shared<std::string>();
        auto count = std::make_shared<std::uint64_t>(0);
        auto certified_only = std::make_shared<bool>(false);
        auto bits_out = std::make_shared<std::string>("-");
        bits->add_option("--approx", *approx_path, "approximation JSON")->required();
        bits->add_option("--count", *count, "number of bits")->required();
        bits->add_flag("--certified-only", *certified_only,
                       "fail unless every requested bit is stable");
        bits->add_option("--out", *bits_out, "output bits path, - for stdout");
        bits->callback([&action, approx_path, count, certified_only, bits_out] {
            action = [=](const RunConfig& cfg) {
                if (*count == 0) throw Error("--count must be >= 1");
                if (*count > cfg.bits_cap) throw CapExceededError("bit request", *count, cfg.bits_cap);
                const auto approx =
                    serialize::approx_from_json(serialize::read_text_file(*approx_path));
                const auto extracted = omega::extract_bits(approx, *count);
                if (*certified_only && extracted.stable_prefix_len < *count) {
                    throw InsufficientBitsError(extracted.stable_prefix_len, *count);
                }
                write_output(*bits_out, extracted.bits + "\n");
                if (*bits_out != "-") {
                    serialize::write_text_file(*bits_out + ".meta.json",
                                               serialize::bits_to_json(extracted));
                }
                std::cerr << extracted.bits.size() << " bits, stable prefix "
                          << extracted.stable_prefix_len << "\n";
                return kExitOk;
            };
        });
    }

    // ---- structures ----
    auto* structures_cmd = app.add_subcommand("structures", "decomposition term censuses");
    structures_cmd->require_subcommand(1);
    {
        auto* count = structures_cmd->add_subcommand("count", "term/coefficient growth table");
        auto n_max = std::make_shared<std::uint32_t>(0);
        auto out = std::make_shared<std::string>("-");
        count->add_option("--n-max", *n_max, "largest subsystem count")->required();
        count->add_option("--out", *out, "output CSV path, - for stdout");
        count->callback([&action, n_max, out] {
            action = [=](const RunConfig& cfg) {
                write_output(*out, serialize::growth_table_csv(structures::growth_table(*n_max, cfg)));
                return kExitOk;
            };
        });

        auto* enumerate = structures_cmd->add_subcommand("enumerate", "partition catalog JSON");
        auto n = std::make_shared<std::uint32_t>(0);
        auto enum_out = std::make_shared<std::string>("-");
        enumerate->add_option("--n", *n, "subsystem count")->required();
        enumerate->add_option("--out", *enum_out, "output JSON path, - for stdout");
        enumerate->callback([&action, n, enum_out] {
            action = [=](const RunConfig& cfg) {
                write_output(*enum_out,
                             serialize::catalog_to_json(structures::enumerate_partitions(*n, cfg)));
                return kExitOk;
            };
        });
    }

    // ---- instance ----
    auto* instance_cmd = app.add_subcommand("instance", "coefficient instances");
    instance_cmd->require_subcommand(1);
    {
        auto* generate = instance_cmd->add_subcommand("generate", "build an instance from bits");
        auto n = std::make_shared<std::uint32_t>(0);
        auto policy = std::make_shared<std::string>();
        auto bits_path = std::make_shared<std::string>();
        auto approx_path = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>("-");
        generate->add_option("--n", *n, "subsystem count")->required();
        generate->add_option("--policy", *policy, "terms-only or uniform-caratheodory")->required();
        auto* bits_opt = generate->add_option("--bits", *bits_path, "bit file");
        generate->add_option("--approx", *approx_path, "approximation JSON")->excludes(bits_opt);
        generate->add_option("--out", *out, "output JSON path, - for stdout");
        generate->callback([&action, n, policy, bits_path, approx_path, out] {
            action = [=](const RunConfig& cfg) {
                if (bits_path->empty() && approx_path->empty()) {
                    throw Error("one of --bits or --approx is required");
                }
                const auto pol = structures::parse_policy(*policy);
                const Int s_exact = structures::coefficient_count(*n, pol);
                if (s_exact > Int(std::numeric_limits<std::uint64_t>::max())) {
                    throw CapExceededError("coefficient count " + s_exact.str() +
                                           " does not fit in 64 bits");
                }
                const std::uint64_t s = s_exact.convert_to<std::uint64_t>();
                const std::uint64_t need = s * instance::chunk_width(s);
                const auto source = bits_from_flags(*bits_path, *approx_path, need, cfg);
                const auto inst = instance::build_instance(*n, pol, source);
                write_output(*out, serialize::instance_to_json(inst));
                std::cerr << "s=" << inst.s << " t=" << inst.t << " k_b=" << inst.k_b.str()
                          << (inst.bits_certified ? " (certified bits)" : " (uncertified bits)")
                          << "\n";
                return kExitOk;
            };
        });

        auto* verify = instance_cmd->add_subcommand("verify", "validate an instance document");
        auto in = std::make_shared<std::string>();
        verify->add_option("--in", *in, "instance JSON")->required();
        verify->callback([&action, in] {
            action = [=](const RunConfig&) {
                const auto inst = serialize::instance_from_json(serialize::read_text_file(*in));
                std::cout << "instance ok: n=" << inst.n << " policy="
                          << structures::policy_name(inst.policy) << " s=" << inst.s
                          << " t=" << inst.t << " k_b=" << inst.k_b.str()
                          << " certified=" << (inst.bits_certified ? "true" : "false") << "\n";
                return kExitOk;
            };
        });
    }

    // ---- solve ----
    auto* solve_cmd = app.add_subcommand("solve", "brute-force search and growth reports");
    solve_cmd->require_subcommand(1);
    {
        auto* brute = solve_cmd->add_subcommand("brute", "exhaustive search for an instance's B");
        auto inst_path = std::make_shared<std::string>();
        auto no_early_exit = std::make_shared<bool>(false);
        auto brute_workers = std::make_shared<std::uint64_t>(0);
        auto candidate = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        brute->add_option("--instance", *inst_path, "instance JSON")->required();
        brute->add_flag("--no-early-exit", *no_early_exit, "scan the whole space");
        brute->add_option("--workers", *brute_workers, "search worker threads");
        brute->add_option("--candidate", *candidate,
                          "comma-separated values to verify instead of searching");
        brute->add_option("--out", *out, "optional stats JSON path, - for stdout");
        brute->callback([&action, inst_path, no_early_exit, brute_workers, candidate, out] {
            action = [=](const RunConfig& cfg) {
                const auto inst =
                    serialize::instance_from_json(serialize::read_text_file(*inst_path));

                if (!candidate->empty()) {
                    const auto values = parse_candidate(*candidate);
                    const bool match = solver::verify_candidate(values, inst.bits, inst.t);
                    std::cout << "candidate " << (match ? "matches" : "mismatch") << "\n";
                    return match ? kExitOk : kExitVerification;
                }

                solver::SolveOptions options;
                options.early_exit = !*no_early_exit;
                options.workers = *brute_workers ? static_cast<std::uint32_t>(*brute_workers)
                                                 : cfg.workers;
                const solver::EqualityOracle oracle = solver::oracle_for(inst);
                const auto result = solver::brute_force(inst.s, inst.t, oracle, cfg, options);

                std::cout << "found: " << (result.stats.found ? "true" : "false") << "\n";
                if (result.solution) {
                    std::cout << "solution:";
                    for (std::uint64_t v : *result.solution) std::cout << ' ' << v;
                    std::cout << "\n";
                }
                std::cout << "candidates_tested: " << result.stats.candidates_tested << "\n";
                std::cout << "space_size: " << result.stats.space_size.str() << "\n";
                std::cout << "wall_ms: " << result.stats.wall_ms << "\n";

                if (!out->empty()) {
                    std::ostringstream stats;
                    stats << "{\n  \"found\": " << (result.stats.found ? "true" : "false")
                          << ",\n  \"candidates_tested\": " << result.stats.candidates_tested
                          << ",\n  \"space_size\": \"" << result.stats.space_size.str()
                          << "\",\n  \"wall_ms\": " << result.stats.wall_ms << "\n}\n";
                    write_output(*out, stats.str());
                }
                if (!result.stats.found || *result.solution != inst.B) return kExitVerification;
                return kExitOk;
            };
        });

        auto* growth = solve_cmd->add_subcommand("growth", "per-n search-cost report");
        auto n_min = std::make_shared<std::uint32_t>(0);
        auto n_max = std::make_shared<std::uint32_t>(0);
        auto policy = std::make_shared<std::string>();
        auto bits_path = std::make_shared<std::string>();
        auto approx_path = std::make_shared<std::string>();
        auto growth_out = std::make_shared<std::string>("-");
        growth->add_option("--n-min", *n_min, "first subsystem count")->required();
        growth->add_option("--n-max", *n_max, "last subsystem count")->required();
        growth->add_option("--policy", *policy, "terms-only or uniform-caratheodory")->required();
        auto* growth_bits_opt = growth->add_option("--bits", *bits_path, "bit file");
        growth->add_option("--approx", *approx_path, "approximation JSON")
            ->excludes(growth_bits_opt);
        growth->add_option("--out", *growth_out, "output CSV path, - for stdout");
        growth->callback([&action, n_min, n_max, policy, bits_path, approx_path, growth_out] {
            action = [=](const RunConfig& cfg) {
                const auto pol = structures::parse_policy(*policy);
                solver::BitProvider provider;
                if (!bits_path->empty()) {
                    provider = solver::provider_from_bits(omega::load_bits_file(*bits_path));
                } else if (!approx_path->empty()) {
                    provider = solver::provider_from_approx(
                        serialize::approx_from_json(serialize::read_text_file(*approx_path)),
                        cfg.bits_cap);
                } else {
                    provider = [](std::uint64_t) { return std::nullopt; };
                }
                const auto rows = solver::growth_benchmark(*n_min, *n_max, pol, provider, cfg);
                write_output(*growth_out, serialize::growth_bench_csv(rows));
                return kExitOk;
            };
        });
    }

    // ---- state ----
    auto* state_cmd = app.add_subcommand("state", "assemble and validate dense states");
    state_cmd->require_subcommand(1);
    {
        auto* assemble = state_cmd->add_subcommand("assemble", "mixture over canonical terms");
        auto inst_path = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>("-");
        assemble->add_option("--instance", *inst_path, "instance JSON")->required();
        assemble->add_option("--out", *out, "output state JSON path, - for stdout");
        assemble->callback([&action, inst_path, out] {
            action = [=](const RunConfig& cfg) {
                const auto inst =
                    serialize::instance_from_json(serialize::read_text_file(*inst_path));
                const auto catalog = structures::enumerate_partitions(inst.n, cfg);
                const auto assembled = quantum::assemble_state(inst, catalog, cfg);
                write_output(*out, serialize::state_to_json(assembled.gamma));
                std::cerr << assembled.terms.size() << " terms, dim " << assembled.gamma.dim()
                          << "\n";
                return kExitOk;
            };
        });

        auto* check = state_cmd->add_subcommand("check", "density-matrix invariant report");
        auto in = std::make_shared<std::string>();
        check->add_option("--in", *in, "state JSON")->required();
        check->callback([&action, in] {
            action = [=](const RunConfig& cfg) {
                const auto rho = serialize::state_from_json(serialize::read_text_file(*in), cfg);
                return run_state_check(rho);
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const RunConfig cfg = overrides.resolve();
        return action(cfg);
    } catch (const CapExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const InsufficientBitsError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInsufficientBits;
    } catch (const SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const MalformedBitsFileError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const EmptyBitsFileError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const AllZeroCoefficientsError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const PolicyUnsupportedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DimensionMismatchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOther;
    }
}

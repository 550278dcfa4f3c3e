#include "omegalab/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "omegalab/errors.hpp"

namespace omegalab {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    std::uint64_t out = 0;
    const char* first = value.data();
    const char* last = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc() || ptr != last) {
        throw Error("config: bad value for '" + key + "': '" + value + "'");
    }
    return out;
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw Error("config: line " + std::to_string(lineno) + " is not 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "max_level_cap") {
            cfg.max_level_cap = static_cast<std::uint32_t>(parse_u64(key, value));
        } else if (key == "max_steps_cap") {
            cfg.max_steps_cap = parse_u64(key, value);
        } else if (key == "enum_cap") {
            cfg.enum_cap = static_cast<std::uint32_t>(parse_u64(key, value));
        } else if (key == "dim_cap") {
            cfg.dim_cap = static_cast<std::uint32_t>(parse_u64(key, value));
        } else if (key == "candidate_cap") {
            cfg.candidate_cap = parse_u64(key, value);
        } else if (key == "bits_cap") {
            cfg.bits_cap = parse_u64(key, value);
        } else if (key == "workers") {
            cfg.workers = static_cast<std::uint32_t>(parse_u64(key, value));
            if (cfg.workers == 0) throw Error("config: workers must be >= 1");
        } else {
            throw Error("config: unknown key '" + key + "'");
        }
    }
    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("config: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

}  // namespace omegalab

#include "jsrlab/cli/config.hpp"
#include "jsrlab/errors.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace jsrlab::cli {

namespace {

std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double parse_double(const std::string& v, const std::string& key) {
    try {
        size_t used = 0;
        double x = std::stod(v, &used);
        if (used != v.size()) throw std::invalid_argument("trailing");
        return x;
    } catch (const std::exception&) {
        throw ParseError("value '" + v + "' is not a number", key);
    }
}

long long parse_int(const std::string& v, const std::string& key) {
    long long x = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || p != v.data() + v.size())
        throw ParseError("value '" + v + "' is not an integer", key);
    return x;
}

// fixed float rendering so the canonical form is stable across platforms
std::string render(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace

void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "input") cfg.input = value;
    else if (key == "out") cfg.out = value;
    else if (key == "format") cfg.format = value;
    else if (key == "norm") cfg.norm = value;
    else if (key == "delta") cfg.delta = parse_double(value, key);
    else if (key == "dedup_tol") cfg.dedup_tol = parse_double(value, key);
    else if (key == "idem_tol") cfg.idem_tol = parse_double(value, key);
    else if (key == "budget_products") cfg.budget_products = parse_int(value, key);
    else if (key == "budget_powers") cfg.budget_powers = static_cast<int>(parse_int(value, key));
    else if (key == "budget_depth") cfg.budget_depth = static_cast<int>(parse_int(value, key));
    else if (key == "seed") cfg.seed = static_cast<unsigned>(parse_int(value, key));
    else if (key == "trials") cfg.trials = static_cast<int>(parse_int(value, key));
    else if (key == "eps") cfg.eps = parse_double(value, key);
    else throw ParseError("unknown config key '" + key + "'", key);
}

void apply_config_text(RunConfig& cfg, const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected key=value", "line " + std::to_string(lineno));
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ParseError("empty key", "line " + std::to_string(lineno));
        apply_config_entry(cfg, key, value);
    }
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file '" + path + "'", path);
    std::stringstream buf;
    buf << in.rdbuf();
    apply_config_text(cfg, buf.str());
}

void validate_config(const RunConfig& cfg) {
    if (!(cfg.delta > 0.0)) throw ValidationError("delta must be positive");
    if (!(cfg.dedup_tol > 0.0)) throw ValidationError("dedup_tol must be positive");
    if (!(cfg.idem_tol > 0.0)) throw ValidationError("idem_tol must be positive");
    if (!(cfg.eps > 0.0)) throw ValidationError("eps must be positive");
    if (cfg.budget_products <= 0) throw ValidationError("budget_products must be positive");
    if (cfg.budget_powers <= 0) throw ValidationError("budget_powers must be positive");
    if (cfg.budget_depth <= 0) throw ValidationError("budget_depth must be positive");
    if (cfg.trials <= 0) throw ValidationError("trials must be positive");
    if (cfg.norm != "1" && cfg.norm != "2" && cfg.norm != "inf")
        throw ValidationError("norm must be one of 1, 2, inf");
    if (cfg.format != "json" && cfg.format != "csv")
        throw ValidationError("format must be json or csv");
}

// `out` and `format` are deliberately absent: they choose where and how the
// report is written, not what was computed, so the two projections of one run
// share a hash.
std::string canonical_config(const RunConfig& cfg) {
    std::ostringstream out;
    out << "command=" << cfg.command << "\n"
        << "input=" << cfg.input << "\n"
        << "norm=" << cfg.norm << "\n"
        << "delta=" << render(cfg.delta) << "\n"
        << "dedup_tol=" << render(cfg.dedup_tol) << "\n"
        << "idem_tol=" << render(cfg.idem_tol) << "\n"
        << "budget_products=" << cfg.budget_products << "\n"
        << "budget_powers=" << cfg.budget_powers << "\n"
        << "budget_depth=" << cfg.budget_depth << "\n"
        << "seed=" << cfg.seed << "\n"
        << "trials=" << cfg.trials << "\n"
        << "eps=" << render(cfg.eps) << "\n";
    return out.str();
}

std::string config_hash(const RunConfig& cfg) {
    const std::string text = canonical_config(cfg);
    std::uint64_t h = 1469598103934665603ull; // FNV offset basis
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull; // FNV prime
    }
    char buf[24];
    std::snprintf(buf, sizeof buf, "fnv1a:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace jsrlab::cli

#include "combwalk/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace combwalk {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

bool parse_i64(const std::string& s, std::int64_t& out) {
    const char* b = s.data();
    const char* e = b + s.size();
    auto [p, ec] = std::from_chars(b, e, out);
    return ec == std::errc() && p == e;
}

bool parse_u64(const std::string& s, std::uint64_t& out) {
    const char* b = s.data();
    const char* e = b + s.size();
    auto [p, ec] = std::from_chars(b, e, out);
    return ec == std::errc() && p == e;
}

bool parse_dbl(const std::string& s, double& out) {
    try {
        std::size_t used = 0;
        out = std::stod(s, &used);
        return used == s.size() && std::isfinite(out);
    } catch (...) {
        return false;
    }
}

// Key schema per experiment kind. `check` may be empty.
struct KeySpec {
    enum class Type { i64, u64, dbl, enumerated, boolean, text };
    std::string name;
    Type type = Type::text;
    bool required = false;
    std::vector<std::string> options;  // enumerated
    double min = -1e308;
    double max = 1e308;
};

using Schema = std::vector<KeySpec>;

const Schema kCommonKeys = {
    {"seed", KeySpec::Type::u64, false, {}},
    {"threads", KeySpec::Type::u64, false, {}, 0, 4096},
    {"format", KeySpec::Type::enumerated, false, {"csv", "json", "both"}},
    {"out_dir", KeySpec::Type::text, false, {}},
};

std::map<std::string, Schema> build_schemas() {
    std::map<std::string, Schema> m;
    m["lil_profile"] = {
        {"graph", KeySpec::Type::enumerated, false, {"zd", "comb"}},
        {"statistic", KeySpec::Type::enumerated, false,
         {"d_k", "abs_c1", "abs_c2", "norm_s"}},
        {"d", KeySpec::Type::i64, false, {}, 1, 16},
        {"k", KeySpec::Type::i64, false, {}, 1, 64},
        {"n_max", KeySpec::Type::i64, false, {}, 1000, 1e12},
        {"replicates", KeySpec::Type::i64, false, {}, 1, 1e9},
        {"band_lo_factor", KeySpec::Type::dbl, false, {}, 0, 100},
        {"band_hi_factor", KeySpec::Type::dbl, false, {}, 0, 100},
    };
    m["collision_growth"] = {
        {"graph", KeySpec::Type::enumerated, false, {"zd", "comb"}},
        {"d", KeySpec::Type::i64, false, {}, 1, 16},
        {"k", KeySpec::Type::i64, false, {}, 2, 64},
        {"n_max", KeySpec::Type::i64, false, {}, 16, 1e12},
        {"replicates", KeySpec::Type::i64, false, {}, 1, 1e9},
        {"late_window_start", KeySpec::Type::i64, false, {}, 0, 1e12},
        {"mean_tolerance", KeySpec::Type::dbl, false, {}, 1e-9, 1},
    };
    m["backbone_coincidence"] = {
        {"n_max", KeySpec::Type::i64, false, {}, 16, 1e12},
        {"replicates", KeySpec::Type::i64, false, {}, 1, 1e9},
        {"factor_band", KeySpec::Type::dbl, false, {}, 1, 100},
    };
    m["distance_cdf"] = {
        {"d", KeySpec::Type::i64, false, {}, 1, 1},
        {"k", KeySpec::Type::i64, false, {}, 2, 64},
        {"n", KeySpec::Type::i64, false, {}, 16, 1e12},
        {"replicates", KeySpec::Type::i64, false, {}, 100, 1e9},
        {"ks_cap", KeySpec::Type::dbl, false, {}, 1e-6, 1},
    };
    m["lower_class"] = {
        {"n_max", KeySpec::Type::i64, false, {}, 4096, 1e12},
        {"replicates", KeySpec::Type::i64, false, {}, 100, 1e9},
        {"epsilon", KeySpec::Type::dbl, false, {}, 1e-6, 0.124999},
        {"slope_fit_min", KeySpec::Type::i64, false, {}, 16, 1e12},
        {"slope_slack", KeySpec::Type::dbl, false, {}, 0, 1},
        {"ever_event_min_fraction", KeySpec::Type::dbl, false, {}, 0, 1},
        {"final_event_min_fraction", KeySpec::Type::dbl, false, {}, 0, 1},
    };
    m["tail_bounds"] = {
        {"geometric_n", KeySpec::Type::i64, false, {}, 1, 1e9},
        {"geometric_bound_n", KeySpec::Type::i64, false, {}, 256, 1e9},
        {"delta", KeySpec::Type::dbl, false, {}, 1e-6, 0.999},
        {"geometric_samples", KeySpec::Type::i64, false, {}, 1000, 1e10},
        {"local_time_n", KeySpec::Type::i64, false, {}, 2, 1e9},
        {"local_time_samples", KeySpec::Type::i64, false, {}, 1000, 1e10},
        {"slope_slack", KeySpec::Type::dbl, false, {}, 0, 1},
    };
    m["series_classify"] = {
        {"family", KeySpec::Type::enumerated, true, {"power", "logpower"}},
        {"param", KeySpec::Type::dbl, true, {}, -100, 100},
        {"exponent_p", KeySpec::Type::i64, true, {}, -1000, 1000},
    };
    m["zd_walk"] = {
        {"d", KeySpec::Type::i64, false, {}, 1, 16},
        {"n", KeySpec::Type::i64, false, {}, 0, 1e12},
        {"replicates", KeySpec::Type::i64, false, {}, 1, 1e9},
        {"record", KeySpec::Type::enumerated, false, {"checkpoints", "full"}},
    };
    m["comb_direct"] = {
        {"n", KeySpec::Type::i64, false, {}, 0, 1e12},
        {"replicates", KeySpec::Type::i64, false, {}, 1, 1e9},
        {"record", KeySpec::Type::enumerated, false, {"checkpoints", "full"}},
    };
    m["comb_constructed"] = m["comb_direct"];
    m["kernel_table"] = {
        {"start_x", KeySpec::Type::i64, false, {}, -1e6, 1e6},
        {"start_y", KeySpec::Type::i64, false, {}, -1e6, 1e6},
        {"n", KeySpec::Type::i64, true, {}, 0, 1e6},
        {"rational", KeySpec::Type::boolean, false, {}},
    };
    m["reversibility"] = {
        {"ux", KeySpec::Type::i64, false, {}, -1e6, 1e6},
        {"uy", KeySpec::Type::i64, false, {}, -1e6, 1e6},
        {"vx", KeySpec::Type::i64, false, {}, -1e6, 1e6},
        {"vy", KeySpec::Type::i64, false, {}, -1e6, 1e6},
        {"n", KeySpec::Type::i64, true, {}, 0, 1e6},
        {"tolerance", KeySpec::Type::dbl, false, {}, 0, 1},
    };
    m["backbone_return"] = {
        {"n", KeySpec::Type::i64, true, {}, 0, 1e6},
    };
    m["vertical_profile"] = {
        {"n", KeySpec::Type::i64, true, {}, 1, 1e6},
        {"k_max", KeySpec::Type::i64, true, {}, 0, 1e6},
    };
    m["green_function"] = {
        {"k", KeySpec::Type::i64, false, {}, -1e6, 1e6},
        {"l", KeySpec::Type::i64, false, {}, -1e6, 1e6},
        {"z", KeySpec::Type::dbl, true, {}, 0, 0.999999999999},
    };
    m["hitting_pmf"] = {
        {"r", KeySpec::Type::i64, true, {}, 1, 1e9},
        {"n", KeySpec::Type::i64, true, {}, 0, 1e12},
    };
    m["hitting_limit"] = {
        {"u", KeySpec::Type::dbl, true, {}, 1e-12, 1e12},
    };
    m["dk_limit"] = {
        {"z", KeySpec::Type::dbl, true, {}, 0, 1e6},
        {"k", KeySpec::Type::i64, true, {}, 2, 64},
    };
    m["verify_all"] = {
        {"scale", KeySpec::Type::enumerated, false, {"quick", "full"}},
    };
    for (auto& [kind, schema] : m)
        schema.insert(schema.end(), kCommonKeys.begin(), kCommonKeys.end());
    return m;
}

const std::map<std::string, Schema>& schemas() {
    static const std::map<std::string, Schema> s = build_schemas();
    return s;
}

void validate_against_schema(const std::string& kind,
                             const std::map<std::string, std::string>& kv,
                             std::vector<std::string>& errors) {
    const Schema& schema = schemas().at(kind);
    std::set<std::string> known{"kind"};
    for (const auto& spec : schema) {
        known.insert(spec.name);
        auto it = kv.find(spec.name);
        if (it == kv.end()) {
            if (spec.required)
                errors.push_back("missing required key '" + spec.name +
                                 "' for kind " + kind);
            continue;
        }
        const std::string& raw = it->second;
        switch (spec.type) {
            case KeySpec::Type::i64: {
                std::int64_t v;
                if (!parse_i64(raw, v))
                    errors.push_back("key '" + spec.name +
                                     "': expected integer, got '" + raw + "'");
                else if (static_cast<double>(v) < spec.min ||
                         static_cast<double>(v) > spec.max)
                    errors.push_back("key '" + spec.name + "': value " + raw +
                                     " outside [" + std::to_string(spec.min) +
                                     ", " + std::to_string(spec.max) + "]");
                break;
            }
            case KeySpec::Type::u64: {
                std::uint64_t v;
                if (!parse_u64(raw, v))
                    errors.push_back("key '" + spec.name +
                                     "': expected unsigned integer, got '" +
                                     raw + "'");
                break;
            }
            case KeySpec::Type::dbl: {
                double v;
                if (!parse_dbl(raw, v))
                    errors.push_back("key '" + spec.name +
                                     "': expected number, got '" + raw + "'");
                else if (v < spec.min || v > spec.max)
                    errors.push_back("key '" + spec.name + "': value " + raw +
                                     " outside [" + std::to_string(spec.min) +
                                     ", " + std::to_string(spec.max) + "]");
                break;
            }
            case KeySpec::Type::enumerated: {
                if (std::find(spec.options.begin(), spec.options.end(), raw) ==
                    spec.options.end()) {
                    std::string opts;
                    for (const auto& o : spec.options)
                        opts += (opts.empty() ? "" : "|") + o;
                    errors.push_back("key '" + spec.name + "': '" + raw +
                                     "' not one of {" + opts + "}");
                }
                break;
            }
            case KeySpec::Type::boolean: {
                if (raw != "true" && raw != "false")
                    errors.push_back("key '" + spec.name +
                                     "': expected true|false, got '" + raw + "'");
                break;
            }
            case KeySpec::Type::text:
                break;
        }
    }
    for (const auto& [key, value] : kv)
        if (!known.count(key))
            errors.push_back("unknown key '" + key + "' for kind " + kind);
}

// Cross-field constraints that a per-key schema cannot express.
void validate_cross_fields(const ExperimentConfig& cfg,
                           std::vector<std::string>& errors) {
    if (cfg.kind == "lil_profile") {
        const std::string stat = cfg.get_or("statistic", "d_k");
        const std::string graph = cfg.get_or("graph", "zd");
        if (stat == "d_k" && cfg.get_i64("k", 2) < 2)
            errors.push_back(
                "key 'k': distance statistic needs at least 2 walkers");
        if (graph == "zd" && (stat == "abs_c1" || stat == "abs_c2"))
            errors.push_back(
                "key 'statistic': comb coordinate statistics require graph = comb");
        if (graph == "comb" && stat == "norm_s")
            errors.push_back("key 'statistic': norm_s requires graph = zd");
    } else if (cfg.kind == "tail_bounds") {
        if (cfg.get_i64("local_time_n", 10000) % 2 != 0)
            errors.push_back("key 'local_time_n': must be even");
    } else if (cfg.kind == "kernel_table") {
        if (cfg.get_or("rational", "false") == "true" &&
            cfg.get_i64("n", 0) > 60)
            errors.push_back("key 'n': rational mode is limited to n <= 60");
    } else if (cfg.kind == "vertical_profile") {
        const double n = static_cast<double>(cfg.get_i64("n", 1));
        const double k_max = static_cast<double>(cfg.get_i64("k_max", 0));
        if (k_max > std::pow(n, 0.45))
            errors.push_back("key 'k_max': must be <= n^0.45");
    } else if (cfg.kind == "collision_growth") {
        if (cfg.get_i64("late_window_start", 10000) >= cfg.get_i64("n_max", 1000000))
            errors.push_back("key 'late_window_start': must be < n_max");
    }
}

}  // namespace

std::int64_t ExperimentConfig::get_i64(const std::string& key,
                                       std::int64_t fallback) const {
    auto it = values.find(key);
    if (it == values.end()) return fallback;
    std::int64_t v = fallback;
    parse_i64(it->second, v);
    return v;
}

std::uint64_t ExperimentConfig::get_u64(const std::string& key,
                                        std::uint64_t fallback) const {
    auto it = values.find(key);
    if (it == values.end()) return fallback;
    std::uint64_t v = fallback;
    parse_u64(it->second, v);
    return v;
}

double ExperimentConfig::get_dbl(const std::string& key, double fallback) const {
    auto it = values.find(key);
    if (it == values.end()) return fallback;
    double v = fallback;
    parse_dbl(it->second, v);
    return v;
}

std::string ExperimentConfig::canonical_text() const {
    std::string out = "kind = " + kind + "\n";
    for (const auto& [key, value] : values)
        out += key + " = " + value + "\n";
    return out;
}

std::string ExperimentConfig::config_hash() const {
    std::string filtered = "kind = " + kind + "\n";
    for (const auto& [key, value] : values) {
        if (key == "threads" || key == "out_dir" || key == "format") continue;
        filtered += key + " = " + value + "\n";
    }
    return fnv1a_hex(filtered);
}

std::string fnv1a_hex(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
    return buf;
}

const std::vector<std::string>& known_kinds() {
    static const std::vector<std::string> kinds = [] {
        std::vector<std::string> v;
        for (const auto& [kind, schema] : schemas()) v.push_back(kind);
        return v;
    }();
    return kinds;
}

ParseResult parse_config_text(const std::string& text) {
    ParseResult result;
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash_pos = line.find('#');
        if (hash_pos != std::string::npos) line = line.substr(0, hash_pos);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            result.errors.push_back("line " + std::to_string(line_no) +
                                    ": expected 'key = value'");
            continue;
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            result.errors.push_back("line " + std::to_string(line_no) +
                                    ": empty key");
            continue;
        }
        if (kv.count(key)) {
            result.errors.push_back("line " + std::to_string(line_no) +
                                    ": duplicate key '" + key + "'");
            continue;
        }
        kv[key] = value;
    }

    auto kind_it = kv.find("kind");
    if (kind_it == kv.end()) {
        result.errors.push_back("missing required key 'kind'");
        return result;
    }
    const std::string kind = kind_it->second;
    if (!schemas().count(kind)) {
        std::string all;
        for (const auto& k : known_kinds()) all += (all.empty() ? "" : ", ") + k;
        result.errors.push_back("unknown kind '" + kind + "' (known: " + all + ")");
        return result;
    }
    kv.erase("kind");

    validate_against_schema(kind, kv, result.errors);
    ExperimentConfig cfg;
    cfg.kind = kind;
    cfg.values = std::move(kv);
    validate_cross_fields(cfg, result.errors);
    if (result.errors.empty()) result.config = std::move(cfg);
    return result;
}

ParseResult parse_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        ParseResult r;
        r.errors.push_back("cannot open config file: " + path);
        return r;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

}  // namespace combwalk

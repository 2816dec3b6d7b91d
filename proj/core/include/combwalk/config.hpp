// Flat key-value experiment configs: parsing, validation (all violations
// reported, not just the first), canonical serialization and hashing.
//
// Grammar: one "key = value" pair per line; '#' starts a comment; blank
// lines ignored; keys are lowercase identifiers and may appear once.

#ifndef COMBWALK_CONFIG_HPP
#define COMBWALK_CONFIG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace combwalk {

struct ExperimentConfig {
    std::string kind;
    std::map<std::string, std::string> values;  // raw validated pairs

    bool has(const std::string& key) const { return values.count(key) != 0; }
    std::string get_or(const std::string& key, const std::string& fallback) const {
        auto it = values.find(key);
        return it == values.end() ? fallback : it->second;
    }
    std::int64_t get_i64(const std::string& key, std::int64_t fallback) const;
    std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
    double get_dbl(const std::string& key, double fallback) const;

    /// Sorted "key = value" lines; re-parsing reproduces the config.
    std::string canonical_text() const;
    /// FNV-1a hash (hex) of the canonical text minus execution-only keys
    /// (threads, out_dir, format): identifies the experiment, not the run.
    std::string config_hash() const;
};

struct ParseResult {
    std::optional<ExperimentConfig> config;
    std::vector<std::string> errors;

    bool ok() const { return config.has_value() && errors.empty(); }
};

/// Parses and validates a config file. On failure the full list of
/// violations is returned.
ParseResult parse_config(const std::string& path);

/// Same, from an in-memory document.
ParseResult parse_config_text(const std::string& text);

/// The set of recognized experiment kinds.
const std::vector<std::string>& known_kinds();

/// FNV-1a 64-bit over a string, hex-encoded.
std::string fnv1a_hex(const std::string& text);

}  // namespace combwalk

#endif  // COMBWALK_CONFIG_HPP

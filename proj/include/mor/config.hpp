#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <string>

#include "mor/scan.hpp"
#include "mor/types.hpp"

namespace mor {

/// Config parse/lookup failure, carrying the file position or key that
/// caused it (already embedded in what()).
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// INI-style key-value config: `[section]` headers, `key = value` lines,
/// `#` or `;` comments, blank lines ignored. Values are kept as strings;
/// typed accessors convert on demand and report the defining line on error.
class ConfigFile {
  public:
    ConfigFile() = default;

    static ConfigFile parse_file(const std::string& path);
    static ConfigFile parse_stream(std::istream& in, const std::string& origin);

    bool has(const std::string& section, const std::string& key) const;
    double get_double(const std::string& section, const std::string& key,
                      double fallback) const;
    int get_int(const std::string& section, const std::string& key, int fallback) const;
    bool get_bool(const std::string& section, const std::string& key, bool fallback) const;
    std::string get_string(const std::string& section, const std::string& key,
                           const std::string& fallback) const;

    /// Every section.key that was never read back; used to reject typos.
    std::set<std::string> unused_keys() const;

  private:
    struct Entry {
        std::string value;
        int line;
        mutable bool used = false;
    };
    const Entry* find(const std::string& section, const std::string& key) const;
    std::map<std::string, Entry> entries_;  // "section.key" -> entry
    std::string origin_;
};

/// Applies [atom]/[control]/[env]/[sweep] sections on top of `base`.
/// Missing keys keep the base values; `notes` (may be null) receives one
/// line per documented default that was applied because the key is absent.
SweepSpec apply_config(const ConfigFile& cfg, SweepSpec base, std::string* notes);

/// Applies the [lab] section on top of `base`.
LabUnits apply_lab_config(const ConfigFile& cfg, LabUnits base);

}  // namespace mor

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "divland/scenario.hpp"

namespace divland {

// Flat "[section]\nkey = value" files. Values are numbers, booleans, quoted
// or bare strings, or "[a, b, c]" number lists. '#' starts a comment.
// Every key must be consumed by the loader, otherwise ConfigError names it.
class ConfigFile {
public:
    static ConfigFile parse(const std::string& text, const std::string& origin = "<string>");
    static ConfigFile load(const std::filesystem::path& path);

    bool has(const std::string& key) const { return values_.contains(key); }
    bool has_section(const std::string& section) const;

    // Keys are "section.name". Throws ConfigError on type mismatch.
    std::optional<double> number(const std::string& key) const;
    std::optional<std::string> text(const std::string& key) const;
    std::optional<bool> flag(const std::string& key) const;
    std::optional<std::vector<double>> list(const std::string& key) const;

    void get(const std::string& key, double& out) const;
    void get(const std::string& key, std::uint64_t& out) const;

    // Throws ConfigError listing keys that were never read.
    void reject_unused() const;

private:
    std::map<std::string, std::string> values_;
    std::map<std::string, int> lines_;
    std::string origin_;
    mutable std::set<std::string> used_;

    const std::string* raw(const std::string& key) const;
};

// Applies [scenario], [vehicle], [env], [controller], [detector], [adaptive]
// and [edge] over base.
ScenarioConfig load_scenario(const ConfigFile& file, ScenarioConfig base = {});

} // namespace divland

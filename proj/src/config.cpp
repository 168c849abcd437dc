#include "divland/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "divland/error.hpp"

namespace divland {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::string strip_comment(const std::string& line) {
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') quoted = !quoted;
        if (line[i] == '#' && !quoted) return line.substr(0, i);
    }
    return line;
}

std::optional<double> to_double(const std::string& s) {
    double v = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (!s.empty() && *first == '+') ++first;
    const auto [p, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || p != last) return std::nullopt;
    return v;
}

} // namespace

ConfigFile ConfigFile::parse(const std::string& text, const std::string& origin) {
    ConfigFile f;
    f.origin_ = origin;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string s = trim(strip_comment(line));
        if (s.empty()) continue;
        const std::string where = origin + ":" + std::to_string(lineno) + ": ";
        if (s.front() == '[') {
            if (s.back() != ']') throw ConfigError(where + "unterminated section header");
            section = trim(std::string_view(s).substr(1, s.size() - 2));
            if (section.empty()) throw ConfigError(where + "empty section name");
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos) throw ConfigError(where + "expected key = value");
        const std::string key = trim(std::string_view(s).substr(0, eq));
        const std::string value = trim(std::string_view(s).substr(eq + 1));
        if (key.empty()) throw ConfigError(where + "empty key");
        if (section.empty()) throw ConfigError(where + "key outside of a section");
        const std::string full = section + "." + key;
        if (f.values_.contains(full)) throw ConfigError(where + "duplicate key " + full);
        f.values_[full] = value;
        f.lines_[full] = lineno;
    }
    return f;
}

ConfigFile ConfigFile::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path.string());
}

bool ConfigFile::has_section(const std::string& section) const {
    const std::string prefix = section + ".";
    const auto it = values_.lower_bound(prefix);
    return it != values_.end() && it->first.starts_with(prefix);
}

const std::string* ConfigFile::raw(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return nullptr;
    used_.insert(key);
    return &it->second;
}

std::optional<double> ConfigFile::number(const std::string& key) const {
    const std::string* v = raw(key);
    if (!v) return std::nullopt;
    const auto d = to_double(*v);
    if (!d) throw ConfigError(origin_ + ": " + key + " expects a number, got '" + *v + "'");
    return d;
}

std::optional<std::string> ConfigFile::text(const std::string& key) const {
    const std::string* v = raw(key);
    if (!v) return std::nullopt;
    if (v->size() >= 2 && v->front() == '"' && v->back() == '"') return v->substr(1, v->size() - 2);
    return *v;
}

std::optional<bool> ConfigFile::flag(const std::string& key) const {
    const std::string* v = raw(key);
    if (!v) return std::nullopt;
    if (*v == "true") return true;
    if (*v == "false") return false;
    throw ConfigError(origin_ + ": " + key + " expects true or false, got '" + *v + "'");
}

std::optional<std::vector<double>> ConfigFile::list(const std::string& key) const {
    const std::string* v = raw(key);
    if (!v) return std::nullopt;
    if (v->size() < 2 || v->front() != '[' || v->back() != ']')
        throw ConfigError(origin_ + ": " + key + " expects a list like [1, 2, 3]");
    std::vector<double> out;
    std::stringstream items(v->substr(1, v->size() - 2));
    std::string item;
    while (std::getline(items, item, ',')) {
        const std::string t = trim(item);
        if (t.empty()) continue;
        const auto d = to_double(t);
        if (!d) throw ConfigError(origin_ + ": " + key + " has a non-numeric entry '" + t + "'");
        out.push_back(*d);
    }
    return out;
}

void ConfigFile::get(const std::string& key, double& out) const {
    if (auto v = number(key)) out = *v;
}

void ConfigFile::get(const std::string& key, std::uint64_t& out) const {
    const std::string* v = raw(key);
    if (!v) return;
    std::uint64_t x = 0;
    const auto [p, ec] = std::from_chars(v->data(), v->data() + v->size(), x);
    if (ec != std::errc() || p != v->data() + v->size())
        throw ConfigError(origin_ + ": " + key + " expects a non-negative integer");
    out = x;
}

void ConfigFile::reject_unused() const {
    std::string unknown;
    for (const auto& [k, v] : values_) {
        if (used_.contains(k)) continue;
        if (!unknown.empty()) unknown += ", ";
        unknown += k + " (line " + std::to_string(lines_.at(k)) + ")";
    }
    if (!unknown.empty()) throw ConfigError(origin_ + ": unknown keys: " + unknown);
}

ScenarioConfig load_scenario(const ConfigFile& f, ScenarioConfig c) {
    if (auto m = f.text("scenario.mode")) {
        if (*m == "landing") c.mode = Mode::landing;
        else if (*m == "hover") c.mode = Mode::hover;
        else if (*m == "edge") c.mode = Mode::edge;
        else throw ConfigError("scenario.mode must be landing, hover or edge");
    }
    if (auto s = f.text("scenario.stop")) {
        if (*s == "touchdown") c.stop = StopRule::touchdown;
        else if (*s == "detection") c.stop = StopRule::detection;
        else if (*s == "convergence") c.stop = StopRule::convergence;
        else throw ConfigError("scenario.stop must be touchdown, detection or convergence");
    }
    if (auto s = f.text("scenario.integrator")) {
        if (*s == "rk4") c.integrator = Integrator::rk4;
        else if (*s == "euler") c.integrator = Integrator::euler;
        else throw ConfigError("scenario.integrator must be rk4 or euler");
    }
    f.get("scenario.T", c.T);
    f.get("scenario.delay", c.delay);
    f.get("scenario.z0", c.z0);
    f.get("scenario.v_z0", c.v_z0);
    f.get("scenario.t_max", c.t_max);
    f.get("scenario.z_floor", c.z_floor);
    f.get("scenario.noise_sigma", c.noise_sigma);
    f.get("scenario.seed", c.seed);

    f.get("vehicle.mass", c.vehicle.mass);
    f.get("vehicle.gravity", c.vehicle.gravity);
    f.get("vehicle.drag_coeff_half", c.vehicle.drag_coeff_half);
    f.get("vehicle.actuator_b", c.vehicle.actuator_b);
    f.get("vehicle.actuator_c", c.vehicle.actuator_c);

    f.get("env.wind_mean", c.env.wind_mean);
    f.get("env.gust_amplitude", c.env.gust_amplitude);
    f.get("env.gust_rate", c.env.gust_rate);

    f.get("controller.gain_p", c.controller.gain_p);
    f.get("controller.gain_i", c.controller.gain_i);
    f.get("controller.c2", c.controller.c2);
    f.get("controller.integrator_limit", c.controller.integrator_limit);

    f.get("detector.theta_thr", c.detector.theta_thr);
    f.get("detector.cov_thr", c.detector.cov_thr);
    std::uint64_t window = c.window;
    f.get("detector.window", window);
    c.window = static_cast<std::size_t>(window);

    if (f.has_section("adaptive")) {
        AdaptiveConfig a = c.adaptive.value_or(AdaptiveConfig{});
        bool enabled = true;
        if (auto e = f.flag("adaptive.enabled")) enabled = *e;
        f.get("adaptive.cov_setpoint", a.cov_setpoint);
        f.get("adaptive.outer_p", a.outer_p);
        f.get("adaptive.outer_i", a.outer_i);
        f.get("adaptive.k_init", a.k_init);
        f.get("adaptive.k_floor", a.k_floor);
        f.get("adaptive.convergence_band", a.convergence_band);
        if (enabled) c.adaptive = a;
        else c.adaptive.reset();
    }

    f.get("edge.hover_cov_setpoint", c.edge.hover_cov_setpoint);
    f.get("edge.trigger_cov", c.edge.trigger_cov);
    f.get("edge.landing_c2", c.edge.landing_c2);
    f.get("edge.landing_cov_setpoint", c.edge.landing_cov_setpoint);

    c.validate();
    return c;
}

} // namespace divland

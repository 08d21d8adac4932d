#include "scenario.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace pcapm {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void parse_fail(const std::string& name, int line, const std::string& msg) {
    fail(errc::config, name + ":" + std::to_string(line) + ": " + msg);
}

double to_double(const std::string& name, int line, const std::string& key,
                 const std::string& value) {
    try {
        size_t pos = 0;
        double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        parse_fail(name, line, "value '" + value + "' for key '" + key + "' is not a number");
    }
}

int to_int(const std::string& name, int line, const std::string& key,
           const std::string& value) {
    try {
        size_t pos = 0;
        int v = std::stoi(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        parse_fail(name, line, "value '" + value + "' for key '" + key + "' is not an integer");
    }
}

}  // namespace

Scenario parse_scenario_text(const std::string& text, const std::string& name) {
    Scenario sc;
    sc.name = name;
    std::istringstream in(text);
    std::string raw;
    std::string section;
    int line = 0;
    bool preset_seen = false;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw;
        size_t hash = s.find('#');
        if (hash != std::string::npos) s = s.substr(0, hash);
        s = trim(s);
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']') parse_fail(name, line, "unterminated section header");
            section = trim(s.substr(1, s.size() - 2));
            static const char* known[] = {"metric", "model",      "coefficients",
                                          "grid",   "tolerances", "outputs"};
            if (std::find_if(std::begin(known), std::end(known), [&](const char* k) {
                    return section == k;
                }) == std::end(known))
                parse_fail(name, line, "unknown section [" + section + "]");
            continue;
        }
        size_t eq = s.find('=');
        if (eq == std::string::npos) parse_fail(name, line, "expected key = value");
        std::string key = trim(s.substr(0, eq));
        std::string value = trim(s.substr(eq + 1));
        if (key.empty() || value.empty()) parse_fail(name, line, "empty key or value");

        if (section.empty()) {
            if (key == "p")
                sc.p = to_double(name, line, key, value);
            else
                parse_fail(name, line, "unknown top-level key '" + key + "'");
        } else if (section == "metric") {
            if (key == "family")
                sc.family = value;
            else
                sc.metric_params[key] = to_double(name, line, key, value);
        } else if (section == "model") {
            if (key != "k") parse_fail(name, line, "unknown key '" + key + "' in [model]");
            if (value == "matched" || value == "from-willmore" || value == "zero") {
                sc.k_mode = value;
            } else {
                sc.k_mode = "value";
                sc.k_value = to_double(name, line, key, value);
            }
        } else if (section == "coefficients") {
            if (key == "preset") {
                sc.preset = value;
                preset_seen = true;
            } else if (key == "C1") {
                sc.C1 = to_double(name, line, key, value);
            } else if (key == "C2") {
                sc.C2 = to_double(name, line, key, value);
            } else if (key == "C3") {
                sc.C3 = to_double(name, line, key, value);
            } else {
                parse_fail(name, line, "unknown key '" + key + "' in [coefficients]");
            }
        } else if (section == "grid") {
            if (key == "t_min")
                sc.t_min = to_double(name, line, key, value);
            else if (key == "t_max")
                sc.t_max = to_double(name, line, key, value);
            else if (key == "t_max_factor")
                sc.t_max_factor = to_double(name, line, key, value);
            else if (key == "n")
                sc.grid_n = to_int(name, line, key, value);
            else if (key == "spacing")
                sc.spacing = value;
            else
                parse_fail(name, line, "unknown key '" + key + "' in [grid]");
        } else if (section == "tolerances") {
            double v = to_double(name, line, key, value);
            if (key == "quad_abs")
                sc.tol.quad_abs = v;
            else if (key == "quad_rel")
                sc.tol.quad_rel = v;
            else if (key == "guard")
                sc.tol.guard = v;
            else if (key == "tol_mono_factor")
                sc.tol.tol_mono_factor = v;
            else if (key == "bound_tol_factor")
                sc.tol.bound_tol_factor = v;
            else if (key == "tol_ineq_factor")
                sc.tol.tol_ineq_factor = v;
            else if (key == "eq_tol_factor")
                sc.tol.eq_tol_factor = v;
            else if (key == "h_tol")
                sc.tol.h_tol = v;
            else if (key == "adm_tol")
                sc.tol.adm_tol = v;
            else
                parse_fail(name, line, "unknown key '" + key + "' in [tolerances]");
        } else if (section == "outputs") {
            if (key == "csv")
                sc.csv_path = value;
            else if (key == "report")
                sc.report_path = value;
            else
                parse_fail(name, line, "unknown key '" + key + "' in [outputs]");
        }
    }

    if (sc.family.empty()) fail(errc::config, name + ": [metric] family is required");
    if (preset_seen && (sc.C1 || sc.C2))
        fail(errc::config, name + ": [coefficients] preset and explicit C1/C2 are exclusive");
    if (sc.spacing != "log" && sc.spacing != "linear")
        fail(errc::config, name + ": [grid] spacing must be 'log' or 'linear'");
    if (sc.grid_n < 2) fail(errc::config, name + ": [grid] n must be at least 2");
    if (sc.t_max && sc.t_max_factor)
        fail(errc::config, name + ": [grid] t_max and t_max_factor are exclusive");
    return sc;
}

Scenario parse_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::io, "cannot open scenario file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    std::string stem = path;
    size_t slash = stem.find_last_of('/');
    if (slash != std::string::npos) stem = stem.substr(slash + 1);
    size_t dot = stem.find_last_of('.');
    if (dot != std::string::npos) stem = stem.substr(0, dot);
    return parse_scenario_text(buf.str(), stem);
}

}  // namespace pcapm

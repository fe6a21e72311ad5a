#include "degpv/config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "degpv/errors.hpp"
#include "degpv/pathgeom.hpp"

namespace degpv {

namespace {

struct Value {
    enum Kind { Number, String, Array } kind;
    double num = 0.0;
    std::string str;
    std::vector<double> arr;
    int line = 0, col = 0;
};

// one "key = value" line of the TOML subset
bool parse_line(const std::string& line, int lineno, std::string* key, Value* val) {
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    };
    skip_ws();
    if (i >= line.size() || line[i] == '#') return false;  // blank or comment
    if (line[i] == '[')
        throw ConfigError(lineno, int(i) + 1, "sections are not supported; use flat keys");

    const std::size_t key_start = i;
    while (i < line.size() && (std::isalnum(static_cast<unsigned char>(line[i])) ||
                               line[i] == '_' || line[i] == '-'))
        ++i;
    if (i == key_start) throw ConfigError(lineno, int(i) + 1, "expected a key");
    *key = line.substr(key_start, i - key_start);
    skip_ws();
    if (i >= line.size() || line[i] != '=')
        throw ConfigError(lineno, int(i) + 1, "expected '=' after key '" + *key + "'");
    ++i;
    skip_ws();
    if (i >= line.size()) throw ConfigError(lineno, int(i) + 1, "missing value");

    val->line = lineno;
    val->col = int(i) + 1;
    if (line[i] == '"') {
        const std::size_t close = line.find('"', i + 1);
        if (close == std::string::npos)
            throw ConfigError(lineno, int(i) + 1, "unterminated string");
        val->kind = Value::String;
        val->str = line.substr(i + 1, close - i - 1);
        i = close + 1;
    } else if (line[i] == '[') {
        val->kind = Value::Array;
        ++i;
        while (true) {
            skip_ws();
            if (i < line.size() && line[i] == ']') {
                ++i;
                break;
            }
            std::size_t used = 0;
            double d;
            try {
                d = std::stod(line.substr(i), &used);
            } catch (const std::exception&) {
                throw ConfigError(lineno, int(i) + 1, "expected a number in array");
            }
            val->arr.push_back(d);
            i += used;
            skip_ws();
            if (i < line.size() && line[i] == ',') {
                ++i;
            } else if (i < line.size() && line[i] == ']') {
                ++i;
                break;
            } else {
                throw ConfigError(lineno, int(i) + 1, "expected ',' or ']' in array");
            }
        }
    } else {
        std::size_t used = 0;
        double d;
        try {
            d = std::stod(line.substr(i), &used);
        } catch (const std::exception&) {
            throw ConfigError(lineno, int(i) + 1, "expected a number, string or array");
        }
        val->kind = Value::Number;
        val->num = d;
        i += used;
        // allow trailing true/false? no boolean keys exist
    }
    skip_ws();
    if (i < line.size() && line[i] != '#')
        throw ConfigError(lineno, int(i) + 1, "trailing characters after value");
    return true;
}

Cx as_complex(const Value& v) {
    if (v.kind == Value::Number) return Cx(v.num, 0.0);
    if (v.kind == Value::Array && v.arr.size() == 2) return Cx(v.arr[0], v.arr[1]);
    throw ConfigError(v.line, v.col, "expected [re, im] or a plain number");
}

double as_number(const Value& v) {
    if (v.kind != Value::Number) throw ConfigError(v.line, v.col, "expected a number");
    return v.num;
}

int as_int(const Value& v) {
    const double d = as_number(v);
    if (d != std::floor(d)) throw ConfigError(v.line, v.col, "expected an integer");
    return static_cast<int>(d);
}

std::string as_string(const Value& v) {
    if (v.kind != Value::String) throw ConfigError(v.line, v.col, "expected a string");
    return v.str;
}

} // namespace

RunConfig parse_config_text(const std::string& text) {
    RunConfig cfg;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string key;
        Value v;
        if (!parse_line(line, lineno, &key, &v)) continue;

        if (key == "theta0") cfg.theta.theta0 = as_complex(v);
        else if (key == "theta1") cfg.theta.theta1 = as_complex(v);
        else if (key == "t_start") cfg.t_start = as_complex(v);
        else if (key == "t_end") cfg.t_end = as_complex(v);
        else if (key == "t_mid") cfg.t_mid = as_complex(v);
        else if (key == "q0") cfg.q0 = as_complex(v);
        else if (key == "p0") cfg.p0 = as_complex(v);
        else if (key == "tol") cfg.tol = as_number(v);
        else if (key == "n_samples") cfg.n_samples = as_int(v);
        else if (key == "base_point") cfg.contour.base = as_complex(v);
        else if (key == "radius0") cfg.contour.radius0 = as_number(v);
        else if (key == "radius1") cfg.contour.radius1 = as_number(v);
        else if (key == "circle_segments") cfg.contour.circle_segments = as_int(v);
        else if (key == "output") cfg.output = as_string(v);
        else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(as_number(v));
        else if (key == "cases") cfg.cases = as_int(v);
        else if (key == "kind") cfg.kind = as_string(v);
        else if (key == "input") cfg.input = as_string(v);
        else if (key == "s0") cfg.s0 = as_complex(v);
        else if (key == "s1") cfg.s1 = as_complex(v);
        else if (key == "fiber_samples") cfg.fiber_samples = as_int(v);
        else if (key == "theta0_min") cfg.theta0_min = as_number(v);
        else if (key == "theta0_max") cfg.theta0_max = as_number(v);
        else if (key == "theta0_steps") cfg.theta0_steps = as_int(v);
        else if (key == "theta1_min") cfg.theta1_min = as_number(v);
        else if (key == "theta1_max") cfg.theta1_max = as_number(v);
        else if (key == "theta1_steps") cfg.theta1_steps = as_int(v);
        else if (key == "workers") cfg.workers = as_int(v);
        else throw ConfigError(v.line, 1, "unknown key '" + key + "'");
    }
    validate_config(cfg);
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError(0, 0, "cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_config_text(buf.str());
}

void validate_config(const RunConfig& cfg) {
    if (!(cfg.tol > 0.0) || cfg.tol > 1e-2)
        throw ConfigError(0, 0, "tol must lie in (0, 1e-2]");
    if (cfg.t_start == Cx(0.0) || cfg.t_end == Cx(0.0))
        throw ConfigError(0, 0, "t path passes through 0");
    std::vector<Cx> waypoints{cfg.t_start};
    if (cfg.t_mid != Cx(0.0)) waypoints.push_back(cfg.t_mid);
    waypoints.push_back(cfg.t_end);
    for (std::size_t i = 0; i + 1 < waypoints.size(); ++i)
        if (point_segment_distance(Cx(0.0), waypoints[i], waypoints[i + 1]) < 1e-9)
            throw ConfigError(0, 0, "t path passes through 0");
    if (cfg.n_samples < 2) throw ConfigError(0, 0, "n_samples must be >= 2");
    if (cfg.contour.radius0 <= 0.0 || cfg.contour.radius1 <= 0.0)
        throw ConfigError(0, 0, "contour radii must be positive");
    if (cfg.workers < 1) throw ConfigError(0, 0, "workers must be >= 1");
    if (cfg.theta0_steps < 1 || cfg.theta1_steps < 1)
        throw ConfigError(0, 0, "sweep steps must be >= 1");
    if (cfg.kind != "negate-t" && cfg.kind != "flip0" && cfg.kind != "flip1" &&
        cfg.kind != "swap" && cfg.kind != "shift")
        throw ConfigError(0, 0, "kind must be one of negate-t, flip0, flip1, swap, shift");
}

Cx parse_complex_pair(const std::string& s) {
    const std::size_t comma = s.find(',');
    try {
        if (comma == std::string::npos) return Cx(std::stod(s), 0.0);
        return Cx(std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1)));
    } catch (const std::exception&) {
        throw ConfigError(0, 0, "expected 're' or 're,im' but got '" + s + "'");
    }
}

} // namespace degpv

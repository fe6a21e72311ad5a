#ifndef DEGPV_CONFIG_HPP
#define DEGPV_CONFIG_HPP

#include <cstdint>
#include <string>

#include "degpv/monodromy.hpp"

namespace degpv {

// Run configuration shared by all CLI subcommands. Values come from a flat
// TOML-syntax key/value file (complex numbers as [re, im] arrays); CLI flags
// override file values.
struct RunConfig {
    Theta theta{Cx(1.0), Cx(1.0)};
    Cx t_start{1.0};
    Cx t_end{1.5};
    Cx t_mid{0.0};  // optional waypoint (0 = unused); lets the path dodge movable poles
    Cx q0{2.0};
    Cx p0{0.5};
    double tol = 1e-10;
    int n_samples = 33;
    ContourConfig contour;
    std::string output;  // empty -> stdout
    std::uint64_t seed = 12345;
    int cases = 100;  // case count for the randomized verify suites

    // backlund
    std::string kind = "shift";
    std::string input;  // input trajectory CSV; empty -> integrate from config

    // surface
    Cx s0{3.0};
    Cx s1{2.0};
    int fiber_samples = 5;

    // sweep (real theta grids)
    double theta0_min = 0.25, theta0_max = 0.75;
    int theta0_steps = 3;
    double theta1_min = 0.25, theta1_max = 0.75;
    int theta1_steps = 3;
    int workers = 4;
};

// Parses a flat TOML-subset config. Throws ConfigError with line/column on
// malformed input, unknown keys or out-of-range values.
RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

// Post-parse validation shared with flag overrides (tol range, t path).
void validate_config(const RunConfig& cfg);

// "re,im" or plain "re" to complex; used for CLI flag overrides.
Cx parse_complex_pair(const std::string& s);

} // namespace degpv

#endif

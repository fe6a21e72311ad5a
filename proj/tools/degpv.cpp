// degpv: explicit isomonodromy toolkit for the degenerate fifth Painleve
// equation. Subcommands: verify, integrate, monodromy, backlund, surface,
// sweep. See README.md for the config-file format.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "degpv/commands.hpp"
#include "degpv/errors.hpp"

using degpv::RunConfig;

namespace {

struct FlagOverrides {
    std::optional<std::string> theta0, theta1, t_start, t_end, t_mid, q0, p0, s0, s1, base_point;
    std::optional<double> tol, radius0, radius1;
    std::optional<int> n_samples, circle_segments, cases, fiber_samples, workers;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> output, input, kind;
};

void add_common_flags(CLI::App* cmd, FlagOverrides& f) {
    cmd->add_option("--theta0", f.theta0, "theta0 as 're' or 're,im'");
    cmd->add_option("--theta1", f.theta1, "theta1 as 're' or 're,im'");
    cmd->add_option("--t-start", f.t_start, "start of the t path ('re' or 're,im')");
    cmd->add_option("--t-end", f.t_end, "end of the t path");
    cmd->add_option("--t-mid", f.t_mid, "optional waypoint, e.g. to dodge a movable pole");
    cmd->add_option("--q0", f.q0, "initial q");
    cmd->add_option("--p0", f.p0, "initial p");
    cmd->add_option("--tol", f.tol, "integration tolerance, in (0, 1e-2]");
    cmd->add_option("--n-samples", f.n_samples, "trajectory sample count");
    cmd->add_option("--seed", f.seed, "seed for randomized suites");
    cmd->add_option("--cases", f.cases, "case count for randomized suites");
    cmd->add_option("--output,-o", f.output, "output file (default stdout)");
    cmd->add_option("--base-point", f.base_point, "monodromy base point");
    cmd->add_option("--radius0", f.radius0, "loop radius around z=0");
    cmd->add_option("--radius1", f.radius1, "loop radius around z=1");
    cmd->add_option("--circle-segments", f.circle_segments, "polygon segments per loop");
}

void apply_overrides(const FlagOverrides& f, RunConfig& cfg) {
    using degpv::parse_complex_pair;
    if (f.theta0) cfg.theta.theta0 = parse_complex_pair(*f.theta0);
    if (f.theta1) cfg.theta.theta1 = parse_complex_pair(*f.theta1);
    if (f.t_start) cfg.t_start = parse_complex_pair(*f.t_start);
    if (f.t_end) cfg.t_end = parse_complex_pair(*f.t_end);
    if (f.t_mid) cfg.t_mid = parse_complex_pair(*f.t_mid);
    if (f.q0) cfg.q0 = parse_complex_pair(*f.q0);
    if (f.p0) cfg.p0 = parse_complex_pair(*f.p0);
    if (f.s0) cfg.s0 = parse_complex_pair(*f.s0);
    if (f.s1) cfg.s1 = parse_complex_pair(*f.s1);
    if (f.base_point) cfg.contour.base = parse_complex_pair(*f.base_point);
    if (f.tol) cfg.tol = *f.tol;
    if (f.radius0) cfg.contour.radius0 = *f.radius0;
    if (f.radius1) cfg.contour.radius1 = *f.radius1;
    if (f.n_samples) cfg.n_samples = *f.n_samples;
    if (f.circle_segments) cfg.contour.circle_segments = *f.circle_segments;
    if (f.cases) cfg.cases = *f.cases;
    if (f.fiber_samples) cfg.fiber_samples = *f.fiber_samples;
    if (f.workers) cfg.workers = *f.workers;
    if (f.seed) cfg.seed = *f.seed;
    if (f.output) cfg.output = *f.output;
    if (f.input) cfg.input = *f.input;
    if (f.kind) cfg.kind = *f.kind;
    degpv::validate_config(cfg);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"isomonodromy toolkit for the degenerate fifth Painleve equation"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config,-c", config_path, "TOML-syntax config file");

    FlagOverrides flags;
    auto* verify = app.add_subcommand("verify", "run the identity suites");
    auto* integrate = app.add_subcommand("integrate", "integrate the Painleve flow");
    auto* monodromy = app.add_subcommand("monodromy", "numerical monodromy invariants");
    auto* backlund = app.add_subcommand("backlund", "apply a Backlund transformation");
    auto* surface = app.add_subcommand("surface", "singular loci and the cubic surface");
    auto* sweep = app.add_subcommand("sweep", "integrate+monodromy over a theta grid");

    for (CLI::App* cmd : {verify, integrate, monodromy, backlund, surface, sweep})
        add_common_flags(cmd, flags);
    backlund->add_option("--kind", flags.kind,
                         "one of negate-t, flip0, flip1, swap, shift");
    backlund->add_option("--input", flags.input, "input trajectory CSV");
    surface->add_option("--s0", flags.s0, "cubic parameter s0 ('re' or 're,im')");
    surface->add_option("--s1", flags.s1, "cubic parameter s1");
    surface->add_option("--fiber-samples", flags.fiber_samples, "exceptional fiber samples");
    sweep->add_option("--workers", flags.workers, "worker pool size");

    CLI11_PARSE(app, argc, argv);

    RunConfig cfg;
    try {
        if (!config_path.empty()) cfg = degpv::parse_config_file(config_path);
        apply_overrides(flags, cfg);
    } catch (const degpv::ConfigError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }

    try {
        if (verify->parsed()) return degpv::cmd_verify(cfg, std::cout, std::cerr);
        if (integrate->parsed()) return degpv::cmd_integrate(cfg, std::cout, std::cerr);
        if (monodromy->parsed()) return degpv::cmd_monodromy(cfg, std::cout, std::cerr);
        if (backlund->parsed()) return degpv::cmd_backlund(cfg, std::cout, std::cerr);
        if (surface->parsed()) return degpv::cmd_surface(cfg, std::cout, std::cerr);
        if (sweep->parsed()) return degpv::cmd_sweep(cfg, std::cout, std::cerr);
    } catch (const degpv::ConfigError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const degpv::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

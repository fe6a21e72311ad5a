#include "degpv/painleve.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "degpv/errors.hpp"
#include "degpv/pathgeom.hpp"

namespace degpv {

namespace {

constexpr double kGuardBand = 1e-10;

void check_q(Cx q, Cx t) {
    if (std::abs(q) < kGuardBand || std::abs(q - Cx(1.0)) < kGuardBand)
        throw FixedSingularity("q hit {0,1}");
    if (std::abs(t) == 0.0) throw FixedSingularity("t = 0");
}

void validate_path(const std::vector<Cx>& t_path) {
    if (t_path.empty()) throw DegenerateInput("empty t path");
    for (std::size_t i = 0; i < t_path.size(); ++i) {
        if (t_path[i] == Cx(0.0)) throw DegenerateInput("t path touches 0");
        if (i + 1 < t_path.size() &&
            point_segment_distance(Cx(0.0), t_path[i], t_path[i + 1]) < 1e-9)
            throw DegenerateInput("t path passes through 0");
    }
}

} // namespace

Cx degpv_rhs(Cx q, Cx dq, Cx t, const Theta& th) {
    check_q(q, t);
    const Cx th02 = th.theta0 * th.theta0;
    const Cx th12 = th.theta1 * th.theta1;
    const Cx t2 = t * t;
    return 0.5 * (1.0 / q + 1.0 / (q - 1.0)) * dq * dq - dq / t +
           2.0 * (q - 1.0) * th02 / (q * t2) - 2.0 * q * th12 / ((q - 1.0) * t2) +
           8.0 * q * (q - 1.0);
}

Cx hamiltonian(const PState& s) {
    check_q(s.q, s.t);
    const Cx w0 = s.theta.theta0 * s.theta.theta0 / 4.0;
    const Cx w1 = s.theta.theta1 * s.theta.theta1 / 4.0;
    return 2.0 * (s.p * s.p - w0) / (s.t * s.q) - 2.0 * (s.p * s.p - w1) / (s.t * (s.q - 1.0)) +
           2.0 * s.q * s.t;
}

std::pair<Cx, Cx> twisted_hamilton_rhs(const PState& s) {
    check_q(s.q, s.t);
    const Cx w0 = s.theta.theta0 * s.theta.theta0 / 4.0;
    const Cx w1 = s.theta.theta1 * s.theta.theta1 / 4.0;
    // q(1-q) dH/dp collapses to 4p/t
    const Cx dq = 4.0 * s.p / s.t;
    const Cx dp = 2.0 * (1.0 - s.q) * (s.p * s.p - w0) / (s.t * s.q) +
                  2.0 * s.q * (s.p * s.p - w1) / (s.t * (s.q - 1.0)) +
                  2.0 * s.t * s.q * (s.q - 1.0);
    return {dq, dp};
}

PState chart_to_qp(const Chart1Point& p1, const Theta& th) {
    return {-p1.b0, p1.a0, p1.t, th};
}

Chart1Point qp_to_chart(const PState& s) {
    check_q(s.q, s.t);
    const Cx a0 = s.p;
    const Cx b0 = -s.q;
    const Cx w0 = s.theta.theta0 * s.theta.theta0 / 4.0;
    const Cx w1 = s.theta.theta1 * s.theta.theta1 / 4.0;
    const Cx c1 =
        (a0 * a0 + b0 * (-w0 + w1) - b0 * s.t * s.t * (1.0 + b0) - w0) / (b0 * (1.0 + b0));
    return Chart1Point(a0, b0, c1, s.t);
}

std::vector<Cx> path_samples(const std::vector<Cx>& t_path, int n_samples) {
    validate_path(t_path);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < t_path.size(); ++i)
        total += std::abs(t_path[i + 1] - t_path[i]);
    if (total == 0.0 || n_samples <= 1) return {t_path.front()};

    std::vector<Cx> out;
    out.reserve(static_cast<std::size_t>(n_samples) + t_path.size());
    double seg_start = 0.0;
    std::size_t next = 0;  // next equally spaced mark to emit
    for (std::size_t i = 0; i + 1 < t_path.size(); ++i) {
        const Cx za = t_path[i], zb = t_path[i + 1];
        const double len = std::abs(zb - za);
        out.push_back(za);
        if (len == 0.0) continue;
        while (next < static_cast<std::size_t>(n_samples)) {
            const double mark = total * double(next) / double(n_samples - 1);
            if (mark >= seg_start + len) break;
            if (mark > seg_start) {
                const double u = (mark - seg_start) / len;
                const Cx z = za + u * (zb - za);
                if (std::abs(z - out.back()) > 1e-14 * std::abs(z)) out.push_back(z);
            }
            ++next;
        }
        seg_start += len;
    }
    if (std::abs(t_path.back() - out.back()) > 1e-14 * std::abs(t_path.back()))
        out.push_back(t_path.back());
    // branch record: consecutive grid points stay closer together than to 0
    for (std::size_t i = 0; i + 1 < out.size(); ++i) {
        if (std::abs(out[i + 1] - out[i]) >= std::abs(out[i]))
            throw DegenerateInput(
                "t path sampling too coarse near 0; increase n_samples");
    }
    return out;
}

Trajectory integrate_flow(const PState& s0, const std::vector<Cx>& t_path, double tol,
                          int n_samples) {
    validate_path(t_path);
    if (t_path.front() != s0.t) throw DegenerateInput("t path must start at the initial t");
    const Theta th = s0.theta;
    auto rhs = [&th](Cx t, const std::array<Cx, 2>& y, std::array<Cx, 2>& dy) {
        const auto [dq, dp] = twisted_hamilton_rhs({y[0], y[1], t, th});
        dy[0] = dq;
        dy[1] = dp;
    };
    OdeOptions opt;
    opt.rel_tol = tol;
    opt.abs_tol = std::min(tol, 1e-12);

    Trajectory traj;
    traj.theta = th;
    traj.t_path = t_path;
    std::array<Cx, 2> y{s0.q, s0.p};
    const std::vector<Cx> grid = path_samples(t_path, n_samples);
    traj.samples.push_back({grid.front(), y[0], y[1]});
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        rk45_segment(rhs, grid[i], grid[i + 1], y, opt);
        traj.samples.push_back({grid[i + 1], y[0], y[1]});
    }
    return traj;
}

std::vector<std::pair<Cx, Chart1Point>> integrate_chart_flow(const Chart1Point& p0,
                                                             const Theta& th,
                                                             const std::vector<Cx>& t_path,
                                                             double tol, int n_samples) {
    validate_path(t_path);
    if (t_path.front() != p0.t) throw DegenerateInput("t path must start at the initial t");
    auto rhs = [&th](Cx t, const std::array<Cx, 3>& y, std::array<Cx, 3>& dy) {
        const Chart1Velocity v = vector_field(Chart1Point(y[0], y[1], y[2], t), th);
        dy[0] = v.da0;
        dy[1] = v.db0;
        dy[2] = v.dc1;
    };
    OdeOptions opt;
    opt.rel_tol = tol;
    opt.abs_tol = std::min(tol, 1e-12);

    std::vector<std::pair<Cx, Chart1Point>> out;
    std::array<Cx, 3> y{p0.a0, p0.b0, p0.c1};
    const std::vector<Cx> grid = path_samples(t_path, n_samples);
    out.emplace_back(grid.front(), Chart1Point(y[0], y[1], y[2], grid.front()));
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        rk45_segment(rhs, grid[i], grid[i + 1], y, opt);
        out.emplace_back(grid[i + 1], Chart1Point(y[0], y[1], y[2], grid[i + 1]));
    }
    return out;
}

std::vector<ScalarSample> integrate_scalar(Cx q0, Cx dq0, const Theta& th,
                                           const std::vector<Cx>& t_path, double tol,
                                           int n_samples) {
    validate_path(t_path);
    auto rhs = [&th](Cx t, const std::array<Cx, 2>& y, std::array<Cx, 2>& dy) {
        dy[0] = y[1];
        dy[1] = degpv_rhs(y[0], y[1], t, th);
    };
    OdeOptions opt;
    opt.rel_tol = tol;
    opt.abs_tol = std::min(tol, 1e-12);

    std::vector<ScalarSample> out;
    std::array<Cx, 2> y{q0, dq0};
    const std::vector<Cx> grid = path_samples(t_path, n_samples);
    out.push_back({grid.front(), y[0], y[1]});
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        rk45_segment(rhs, grid[i], grid[i + 1], y, opt);
        out.push_back({grid[i + 1], y[0], y[1]});
    }
    return out;
}

Cx even_q_residual(const EvenJet& Qj, const Theta& th) {
    const Cx Q = Qj.value, dQ = Qj.d1, s = Qj.at;
    check_q(Q, s);
    const Cx th02 = th.theta0 * th.theta0;
    const Cx th12 = th.theta1 * th.theta1;
    const Cx rhs = 0.5 * (1.0 / Q + 1.0 / (Q - 1.0)) * dQ * dQ - dQ / s +
                   (Q - 1.0) * (th02 / 2.0) / (Q * s * s) -
                   Q * (th12 / 2.0) / ((Q - 1.0) * s * s) + 2.0 * Q * (Q - 1.0) / s;
    return Qj.d2 - rhs;
}

Cx classical_y_residual(const EvenJet& yj, const Theta& th) {
    const Cx y = yj.value, dy = yj.d1, s = yj.at;
    check_q(y, s);
    const Cx th02 = th.theta0 * th.theta0;
    const Cx th12 = th.theta1 * th.theta1;
    const Cx rhs = 0.5 * (3.0 * y - 1.0) / (y * (y - 1.0)) * dy * dy - dy / s +
                   y * (y - 1.0) * (y - 1.0) * th12 / (2.0 * s * s) -
                   (y - 1.0) * (y - 1.0) * th02 / (2.0 * s * s * y) - 2.0 * y / s;
    return yj.d2 - rhs;
}

EvenJet q_jet_to_y_jet(const EvenJet& Qj) {
    const Cx Q = Qj.value, d = Q - 1.0;
    if (std::abs(d) < kGuardBand) throw FixedSingularity("Q = 1 in jet substitution");
    EvenJet y;
    y.value = Q / d;
    y.d1 = -Qj.d1 / (d * d);
    y.d2 = -Qj.d2 / (d * d) + 2.0 * Qj.d1 * Qj.d1 / (d * d * d);
    y.at = Qj.at;
    return y;
}

namespace {

std::string fmt17(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
    os << "t_re,t_im,q_re,q_im,p_re,p_im,H_re,H_im,residual\n";
    for (const auto& s : traj.samples) {
        const PState st{s.q, s.p, s.t, traj.theta};
        const Cx H = hamiltonian(st);
        const double resid = std::abs(chart1_residual(qp_to_chart(st), traj.theta));
        os << fmt17(s.t.real()) << ',' << fmt17(s.t.imag()) << ',' << fmt17(s.q.real()) << ','
           << fmt17(s.q.imag()) << ',' << fmt17(s.p.real()) << ',' << fmt17(s.p.imag()) << ','
           << fmt17(H.real()) << ',' << fmt17(H.imag()) << ',' << fmt17(resid) << '\n';
    }
}

Trajectory read_trajectory_csv(std::istream& is, const Theta& th) {
    Trajectory traj;
    traj.theta = th;
    std::string line;
    if (!std::getline(is, line)) throw DegenerateInput("trajectory csv: missing header");
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        double v[9];
        std::string cell;
        for (int i = 0; i < 9; ++i) {
            if (!std::getline(row, cell, ','))
                throw DegenerateInput("trajectory csv: short row");
            v[i] = std::stod(cell);
        }
        traj.samples.push_back({Cx(v[0], v[1]), Cx(v[2], v[3]), Cx(v[4], v[5])});
    }
    for (const auto& s : traj.samples) traj.t_path.push_back(s.t);
    return traj;
}

} // namespace degpv

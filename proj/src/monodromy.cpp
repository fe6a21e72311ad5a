#include "degpv/monodromy.hpp"

#include <algorithm>
#include <cmath>

#include "degpv/errors.hpp"
#include "degpv/pathgeom.hpp"

namespace degpv {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kMinPoleDistance = 0.05;

} // namespace

std::vector<Cx> make_loop(const Contour& c, int circle_segments) {
    if (c.radius <= 0.0) throw DegenerateInput("make_loop: radius <= 0");
    if (circle_segments < 3) throw DegenerateInput("make_loop: need >= 3 segments");
    // enter the circle at the point closest to the base
    const Cx dir = (c.base - c.center) / std::abs(c.base - c.center);
    const double phi0 = std::arg(dir);
    std::vector<Cx> path;
    path.reserve(static_cast<std::size_t>(circle_segments) + 3);
    path.push_back(c.base);
    for (int k = 0; k <= circle_segments; ++k) {
        const double phi = phi0 + c.orientation * 2.0 * kPi * double(k) / circle_segments;
        path.push_back(c.center + c.radius * Cx(std::cos(phi), std::sin(phi)));
    }
    path.push_back(c.base);
    // circle and connecting segment must clear both poles by 0.1 radius
    const double clearance = 0.1 * c.radius;
    for (const Cx pole : {Cx(0.0), Cx(1.0)}) {
        if (pole == c.center) continue;
        if (std::abs(pole - c.center) - c.radius < clearance)
            throw PathTooClose("make_loop: circle within 0.1 radius of a pole");
        if (point_segment_distance(pole, c.base, path[1]) < clearance)
            throw PathTooClose("make_loop: connecting segment within 0.1 radius of a pole");
    }
    return path;
}

Mat2 transport(const ConnectionA& A, const std::vector<Cx>& path, double tol) {
    if (path.size() < 2) return Mat2::identity();
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        for (const Cx pole : {Cx(0.0), Cx(1.0)}) {
            if (point_segment_distance(pole, path[i], path[i + 1]) < kMinPoleDistance)
                throw PathTooClose("transport: path within 0.05 of a pole");
        }
    }
    const RatMat2& m = A.matrix;
    auto rhs = [&m](Cx z, const std::array<Cx, 4>& y, std::array<Cx, 4>& dy) {
        const Mat2 a = m.eval(z);
        // dY/dz = -A Y, Y stored row major
        dy[0] = -(a(0, 0) * y[0] + a(0, 1) * y[2]);
        dy[1] = -(a(0, 0) * y[1] + a(0, 1) * y[3]);
        dy[2] = -(a(1, 0) * y[0] + a(1, 1) * y[2]);
        dy[3] = -(a(1, 0) * y[1] + a(1, 1) * y[3]);
    };
    OdeOptions opt;
    opt.rel_tol = tol;
    opt.abs_tol = std::min(tol, 1e-12);
    std::array<Cx, 4> y{1.0, 0.0, 0.0, 1.0};
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        rk45_segment(rhs, path[i], path[i + 1], y, opt);
    return Mat2(y[0], y[1], y[2], y[3]);
}

MonodromyInvariants monodromy_invariants(const Chart1Point& p, const Theta& th,
                                         const ContourConfig& cfg, double tol) {
    const ConnectionA A = build_A_chart1(p, th);
    const Contour loop0{cfg.base, Cx(0.0), cfg.radius0, +1};
    const Contour loop1{cfg.base, Cx(1.0), cfg.radius1, +1};
    const Mat2 m0 = transport(A, make_loop(loop0, cfg.circle_segments), tol);
    const Mat2 m1 = transport(A, make_loop(loop1, cfg.circle_segments), tol);
    return {m0.trace(), m1.trace(), (m0 * m1).trace()};
}

std::pair<Cx, Cx> expected_s(const Theta& th) {
    const Cx i(0.0, 1.0);
    const Cx s0 = std::exp(i * kPi * th.theta0) + std::exp(-i * kPi * th.theta0);
    const Cx s1 = std::exp(i * kPi * th.theta1) + std::exp(-i * kPi * th.theta1);
    return {s0, s1};
}

Cx cubic_residual(const CubicPoint& pt, Cx s0, Cx s1) {
    return pt.x1 * pt.x2 * pt.x3 + pt.x1 * pt.x1 + pt.x2 * pt.x2 + s0 * pt.x1 + s1 * pt.x2 +
           Cx(1.0);
}

std::array<Cx, 3> cubic_gradient(const CubicPoint& pt, Cx s0, Cx s1) {
    return {pt.x2 * pt.x3 + 2.0 * pt.x1 + s0, pt.x1 * pt.x3 + 2.0 * pt.x2 + s1,
            pt.x1 * pt.x2};
}

std::vector<CubicPoint> cubic_singular_points(Cx s0, Cx s1) {
    std::vector<CubicPoint> out;
    if (s1 == Cx(2.0)) out.push_back({0.0, -1.0, s0});
    if (s1 == Cx(-2.0)) out.push_back({0.0, 1.0, -s0});
    if (s0 == Cx(2.0)) out.push_back({-1.0, 0.0, s1});
    if (s0 == Cx(-2.0)) out.push_back({1.0, 0.0, -s1});
    return out;
}

std::array<Cx, 3> rplus_residuals(const RPlusPoint& pt, Cx s0) {
    const Cx cubic = cubic_residual({pt.x1, pt.x2, pt.x3}, s0, Cx(2.0));
    const Cx eig = (pt.x2 + 1.0) + pt.x1 * pt.y1;
    const Cx third = (1.0 + pt.x2) * pt.y1 - pt.x2 * pt.x3 - pt.x1 - s0;
    return {cubic, eig, third};
}

std::vector<RPlusPoint> rplus_fiber(Cx s0, int samples) {
    if (s0 == Cx(2.0) || s0 == Cx(-2.0))
        throw DegenerateInput("rplus_fiber: s0 = +-2 not covered by the y0=1 chart");
    std::vector<RPlusPoint> out;
    out.reserve(static_cast<std::size_t>(std::max(samples, 0)));
    for (int k = 0; k < samples; ++k) {
        const double a = samples == 1 ? 0.0 : -1.0 + 2.0 * double(k) / double(samples - 1);
        out.push_back({0.0, -1.0, s0, a});
    }
    return out;
}

double isomonodromy_drift(const Trajectory& traj, int n_checks, const ContourConfig& cfg,
                          double tol) {
    if (traj.samples.empty()) throw DegenerateInput("isomonodromy_drift: empty trajectory");
    n_checks = std::min<int>(n_checks, static_cast<int>(traj.samples.size()));
    if (n_checks <= 1 && traj.samples.size() == 1) n_checks = 1;
    std::vector<MonodromyInvariants> inv;
    for (int k = 0; k < n_checks; ++k) {
        const std::size_t idx =
            n_checks == 1 ? 0
                          : (static_cast<std::size_t>(k) * (traj.samples.size() - 1)) /
                                static_cast<std::size_t>(n_checks - 1);
        const auto& s = traj.samples[idx];
        const Chart1Point p = qp_to_chart({s.q, s.p, s.t, traj.theta});
        inv.push_back(monodromy_invariants(p, traj.theta, cfg, tol));
    }
    double drift = 0.0;
    for (std::size_t i = 0; i < inv.size(); ++i) {
        for (std::size_t j = i + 1; j < inv.size(); ++j) {
            drift = std::max(drift, std::abs(inv[i].tr_m0 - inv[j].tr_m0));
            drift = std::max(drift, std::abs(inv[i].tr_m1 - inv[j].tr_m1));
            drift = std::max(drift, std::abs(inv[i].tr_m0m1 - inv[j].tr_m0m1));
        }
    }
    return drift;
}

} // namespace degpv

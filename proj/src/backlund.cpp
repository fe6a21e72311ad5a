#include "degpv/backlund.hpp"

#include <algorithm>
#include <cmath>

#include "degpv/errors.hpp"

namespace degpv {

namespace {

constexpr Cx kI(0.0, 1.0);

// source jet of the integrated solution at a sample: q' = 4p/t and
// q'' = 4 p'/t - 4p/t^2 with p' from the twisted system
std::array<Cx, 3> solution_jet(const Trajectory::Sample& s, const Theta& th) {
    const auto [dq, dp] = twisted_hamilton_rhs({s.q, s.p, s.t, th});
    const Cx d2q = 4.0 * dp / s.t - 4.0 * s.p / (s.t * s.t);
    return {s.q, dq, d2q};
}

} // namespace

Theta bt_param_map(BTKind kind, const Theta& th) {
    switch (kind) {
        case BTKind::NegateT: return th;
        case BTKind::FlipTheta0: return {-th.theta0, th.theta1};
        case BTKind::FlipTheta1: return {th.theta0, -th.theta1};
        case BTKind::Swap: return {th.theta1, th.theta0};
        case BTKind::Shift: return {th.theta0 + 1.0, th.theta1};
    }
    return th;
}

Trajectory bt_negate_t(const Trajectory& traj) {
    Trajectory out;
    out.theta = traj.theta;
    out.samples.reserve(traj.samples.size());
    for (const auto& s : traj.samples) out.samples.push_back({-s.t, s.q, s.p});
    out.t_path.reserve(traj.t_path.size());
    for (const Cx& t : traj.t_path) out.t_path.push_back(-t);
    return out;
}

Trajectory bt_theta_flip(const Trajectory& traj, int which) {
    Trajectory out = traj;
    out.theta = bt_param_map(which == 0 ? BTKind::FlipTheta0 : BTKind::FlipTheta1, traj.theta);
    return out;
}

SwapJet bt_swap_jet(Cx q, Cx dq, Cx d2q, Cx t) {
    if (t == Cx(0.0)) throw DegenerateInput("bt_swap_jet: t = 0");
    return {1.0 - q, -kI * dq, d2q, -kI * t};
}

Trajectory bt_swap(const Trajectory& traj) {
    Trajectory out;
    out.theta = bt_param_map(BTKind::Swap, traj.theta);
    out.samples.reserve(traj.samples.size());
    for (const auto& s : traj.samples) out.samples.push_back({-kI * s.t, 1.0 - s.q, -s.p});
    out.t_path.reserve(traj.t_path.size());
    for (const Cx& t : traj.t_path) out.t_path.push_back(-kI * t);
    return out;
}

PState bt_shift_point(const PState& s) {
    const Cx q = s.q, a = s.p, t = s.t;
    const Cx th0 = s.theta.theta0, th1 = s.theta.theta1;
    if (std::abs(q) < 1e-8 || std::abs(q - Cx(1.0)) < 1e-8)
        throw FixedSingularity("bt_shift_point: q in {0,1}");
    if (t == Cx(0.0)) throw FixedSingularity("bt_shift_point: t = 0");
    const Cx q2 = q * q, q3 = q2 * q, t2 = t * t;
    const Cx qt = 1.0 - th0 * th0 * (q - 1.0) / (4.0 * q2 * t2) + a * th0 / (q2 * t2) +
                  th1 * th1 / (4.0 * t2 * (q - 1.0)) - a * a / (q2 * t2 * (q - 1.0));
    const Cx at = (q - 1.0) * th0 * th0 * th0 / (8.0 * q3 * t2) +
                  (q2 + 2.0 * a * q - q - 6.0 * a) * th0 * th0 / (8.0 * q3 * t2) +
                  (q - 1.0) * th0 / (2.0 * q) -
                  a * (q2 + 2.0 * a * q - q - 3.0 * a) * th0 / (2.0 * (q - 1.0) * q3 * t2) -
                  th0 * th1 * th1 / (8.0 * q * t2 * (q - 1.0)) - a / q -
                  (q + 2.0 * a) * th1 * th1 / (8.0 * q * (q - 1.0) * t2) +
                  a * a * (2.0 * a + q) / (2.0 * q3 * t2 * (q - 1.0));
    return {qt, at, t, bt_param_map(BTKind::Shift, s.theta)};
}

double verify_bt(const Trajectory& traj, BTKind kind, double tol) {
    if (traj.samples.size() < 5)
        throw DegenerateInput("verify_bt: need at least 5 samples");
    const Theta target = bt_param_map(kind, traj.theta);
    double worst = 0.0;

    if (kind == BTKind::Shift) {
        // transform-then-integrate against pointwise transformation
        std::vector<Cx> grid;
        grid.reserve(traj.samples.size());
        for (const auto& s : traj.samples) grid.push_back(s.t);
        const PState start = bt_shift_point({traj.samples.front().q, traj.samples.front().p,
                                             traj.samples.front().t, traj.theta});
        const Trajectory reint = integrate_flow(start, grid, tol, 2);
        if (reint.samples.size() != traj.samples.size())
            throw DegenerateInput("verify_bt: sample grids disagree");
        for (std::size_t k = 0; k < traj.samples.size(); ++k) {
            const auto& s = traj.samples[k];
            const PState mapped = bt_shift_point({s.q, s.p, s.t, traj.theta});
            worst = std::max(worst, std::abs(reint.samples[k].q - mapped.q));
            worst = std::max(worst, std::abs(reint.samples[k].p - mapped.p));
        }
        return worst;
    }

    for (const auto& s : traj.samples) {
        const auto [q, dq, d2q] = solution_jet(s, traj.theta);
        Cx qi = q, dqi = dq, d2qi = d2q, ti = s.t;
        switch (kind) {
            case BTKind::NegateT:
                dqi = -dq;
                ti = -s.t;
                break;
            case BTKind::Swap: {
                const SwapJet j = bt_swap_jet(q, dq, d2q, s.t);
                qi = j.q;
                dqi = j.dq;
                d2qi = j.d2q;
                ti = j.t;
                break;
            }
            case BTKind::FlipTheta0:
            case BTKind::FlipTheta1:
                break;
            case BTKind::Shift:
                break;  // handled above
        }
        worst = std::max(worst, std::abs(d2qi - degpv_rhs(qi, dqi, ti, target)));
    }
    return worst;
}

} // namespace degpv

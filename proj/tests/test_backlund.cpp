#include <doctest.h>

#include "degpv/backlund.hpp"
#include "degpv/monodromy.hpp"
#include "degpv/sampling.hpp"
#include "testutil.hpp"

using namespace degpv;
using degpv::testutil::dist;

namespace {

Trajectory make_traj(const Theta& th, Cx q0, Cx p0, Cx t0, Cx t1, int n = 17) {
    return integrate_flow({q0, p0, t0, th}, {t0, t1}, 1e-10, n);
}

} // namespace

TEST_CASE("parameter maps and group relations") {
    const Theta th{0.7, 1.2};
    CHECK(bt_param_map(BTKind::Swap, th).theta0 == th.theta1);
    CHECK(bt_param_map(BTKind::Shift, th).theta0 == th.theta0 + 1.0);

    // flips and negation are involutions on parameters
    for (const BTKind k : {BTKind::FlipTheta0, BTKind::FlipTheta1, BTKind::NegateT}) {
        const Theta twice = bt_param_map(k, bt_param_map(k, th));
        CHECK(twice.theta0 == th.theta0);
        CHECK(twice.theta1 == th.theta1);
    }
    // Shift and FlipTheta0 do not commute on parameters
    const Theta sf = bt_param_map(BTKind::Shift, bt_param_map(BTKind::FlipTheta0, th));
    const Theta fs = bt_param_map(BTKind::FlipTheta0, bt_param_map(BTKind::Shift, th));
    CHECK(sf.theta0 != fs.theta0);
}

TEST_CASE("negate-t is an involution and maps solutions to solutions") {
    const Theta th{0.8, 0.5};
    const Trajectory traj = make_traj(th, Cx(2.1, 0.1), Cx(0.2), Cx(1.0), Cx(1.5));
    const Trajectory img = bt_negate_t(traj);
    REQUIRE(img.samples.size() == traj.samples.size());
    CHECK(dist(img.samples[3].t, -traj.samples[3].t) == 0.0);
    CHECK(dist(img.samples[3].q, traj.samples[3].q) == 0.0);

    const Trajectory twice = bt_negate_t(img);
    for (std::size_t k = 0; k < traj.samples.size(); ++k) {
        CHECK(twice.samples[k].t == traj.samples[k].t);
        CHECK(twice.samples[k].q == traj.samples[k].q);
        CHECK(twice.samples[k].p == traj.samples[k].p);
    }

    CHECK(verify_bt(traj, BTKind::NegateT, 1e-10) < 1e-8);

    // H(-t) = -H(t) at p = 0
    const PState at{Cx(1.7), Cx(0.0), Cx(1.2), th};
    const PState neg{Cx(1.7), Cx(0.0), Cx(-1.2), th};
    CHECK(dist(hamiltonian(neg), -hamiltonian(at)) < 1e-15);
}

TEST_CASE("theta flips act trivially on samples") {
    const Theta th{0.8, 0.5};
    const Trajectory traj = make_traj(th, Cx(1.8, -0.1), Cx(0.3), Cx(1.0), Cx(1.4));
    const Trajectory img = bt_theta_flip(traj, 0);
    for (std::size_t k = 0; k < traj.samples.size(); ++k) {
        CHECK(img.samples[k].q == traj.samples[k].q);
        CHECK(img.samples[k].p == traj.samples[k].p);
    }
    CHECK(img.theta.theta0 == -th.theta0);
    const Trajectory twice = bt_theta_flip(img, 0);
    CHECK(twice.theta.theta0 == th.theta0);
    CHECK(verify_bt(traj, BTKind::FlipTheta0, 1e-10) < 1e-8);
    CHECK(verify_bt(traj, BTKind::FlipTheta1, 1e-10) < 1e-8);
}

TEST_CASE("swap jet: worked values and the square law") {
    // symmetry point q = 1/2
    const SwapJet j = bt_swap_jet(Cx(0.5), Cx(0.0), Cx(0.7), Cx(1.0));
    CHECK(dist(j.q, Cx(0.5)) == 0.0);
    CHECK(dist(j.dq, Cx(0.0)) == 0.0);

    // applying the jet map twice gives the negate-t jet map
    const Cx q(1.7, 0.2), dq(0.4, -0.1), d2q(0.9), t(1.3, 0.4);
    const SwapJet once = bt_swap_jet(q, dq, d2q, t);
    const SwapJet twice = bt_swap_jet(once.q, once.dq, once.d2q, once.t);
    CHECK(dist(twice.q, q) < 1e-15);
    CHECK(dist(twice.dq, -dq) < 1e-15);
    CHECK(dist(twice.d2q, d2q) == 0.0);
    CHECK(dist(twice.t, -t) < 1e-15);
}

TEST_CASE("swap maps degPV(th0,th1) jets to degPV(th1,th0) jets") {
    Sampler smp(51);
    for (int i = 0; i < 50; ++i) {
        const Theta th = smp.theta(3.0);
        const Cx q = smp.admissible_q(), dq = smp.box(-1, 1), t = smp.annulus(0.5, 2.0);
        const Cx d2q = degpv_rhs(q, dq, t, th);
        const SwapJet j = bt_swap_jet(q, dq, d2q, t);
        const Theta swapped{th.theta1, th.theta0};
        CHECK(dist(j.d2q, degpv_rhs(j.q, j.dq, j.t, swapped)) < 1e-10);
    }
}

TEST_CASE("swap on trajectories verifies against the target equation") {
    const Theta th{0.9, 0.4};
    const Trajectory traj = make_traj(th, Cx(2.0, 0.15), Cx(0.25), Cx(1.0), Cx(1.4));
    CHECK(verify_bt(traj, BTKind::Swap, 1e-10) < 1e-8);
}

TEST_CASE("shift worked value") {
    const PState s{Cx(2.0), Cx(0.5), Cx(1.0), Theta{1.0, 1.0}};
    const PState img = bt_shift_point(s);
    // the corrected closed form gives exactly 5/4 here (the display in the
    // source text drops the p^2 term; see the gauge-kernel cross-check)
    CHECK(img.q == Cx(1.25));
    CHECK(img.p == Cx(-0.25));
    CHECK(img.theta.theta0 == Cx(2.0));

    // theta0 = 0 specialization: the two theta0 terms drop
    const PState s2{Cx(2.0), Cx(0.0), Cx(1.0), Theta{0.0, 1.0}};
    const PState img2 = bt_shift_point(s2);
    CHECK(dist(img2.q, Cx(1.0 + 1.0 / 4.0)) == 0.0);

    CHECK_THROWS_AS(bt_shift_point({Cx(0.0), Cx(0.5), Cx(1.0), Theta{1.0, 1.0}}),
                    FixedSingularity);
}

TEST_CASE("q~ is independent of the chart lift") {
    // two on-variety chart points with the same (q,p,t) give identical images
    const Theta th{1.0, 1.0};
    const PState s{Cx(1.8, 0.3), Cx(0.4, -0.2), Cx(1.1), th};
    const Chart1Point lift = qp_to_chart(s);
    const PState via_lift = chart_to_qp(lift, th);
    CHECK(bt_shift_point(s).q == bt_shift_point(via_lift).q);
}

TEST_CASE("shift flow compatibility") {
    const Theta th{1.0, 1.0};
    const Trajectory traj = make_traj(th, Cx(2.0, 0.2), Cx(0.3, 0.1), Cx(1.0), Cx(1.5), 17);
    CHECK(verify_bt(traj, BTKind::Shift, 1e-10) < 1e-6);
}

TEST_CASE("shift negative control: corrupted trajectory") {
    const Theta th{1.0, 1.0};
    Trajectory traj = make_traj(th, Cx(2.0, 0.2), Cx(0.3, 0.1), Cx(1.0), Cx(1.5), 17);
    for (std::size_t k = 1; k < traj.samples.size(); ++k) traj.samples[k].q += Cx(1e-3);
    CHECK(verify_bt(traj, BTKind::Shift, 1e-10) > 1e-4);
}

TEST_CASE("shifted family has tr M0 = -2cos(pi theta0)") {
    const Theta th{0.4, 0.7};
    const PState s{Cx(2.2, 0.1), Cx(0.2), Cx(1.0), th};
    const PState img = bt_shift_point(s);
    const Chart1Point p = qp_to_chart(img);
    const ContourConfig cfg;
    const MonodromyInvariants inv = monodromy_invariants(p, img.theta, cfg, 1e-11);
    const Cx expected = -expected_s(th).first;
    CHECK(dist(inv.tr_m0, expected) < 1e-5);
}

TEST_CASE("verify_bt needs enough samples") {
    const Theta th{1.0, 1.0};
    Trajectory tiny;
    tiny.theta = th;
    tiny.samples = {{Cx(1.0), Cx(2.0), Cx(0.5)}};
    tiny.t_path = {Cx(1.0)};
    CHECK_THROWS_AS(verify_bt(tiny, BTKind::Swap, 1e-10), DegenerateInput);
}

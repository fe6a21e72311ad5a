#ifndef DEGPV_PAINLEVE_HPP
#define DEGPV_PAINLEVE_HPP

#include <iosfwd>
#include <utility>
#include <vector>

#include "degpv/laxpair.hpp"
#include "degpv/ode.hpp"

namespace degpv {

// Painleve phase point.
struct PState {
    Cx q, p, t;
    Theta theta;
};

// Integrated flow samples along a piecewise-linear path in C*. The path
// records the branch of log t implicitly through its winding.
struct Trajectory {
    struct Sample {
        Cx t, q, p;
    };
    std::vector<Sample> samples;
    Theta theta;
    std::vector<Cx> t_path;
};

// Function value plus two derivatives at a point (jet of order 2).
struct EvenJet {
    Cx value, d1, d2;
    Cx at;
};

// q'' of degP_V(theta0, theta1).
Cx degpv_rhs(Cx q, Cx dq, Cx t, const Theta& th);

// H = 2(p^2 - th0^2/4)/(tq) - 2(p^2 - th1^2/4)/(t(q-1)) + 2qt
Cx hamiltonian(const PState& s);

// Twisted system q' = q(1-q) dH/dp, p' = -q(1-q) dH/dq, in closed form.
std::pair<Cx, Cx> twisted_hamilton_rhs(const PState& s);

// Dictionary between the first chart and the phase space: q = -b0, p = a0.
PState chart_to_qp(const Chart1Point& p1, const Theta& th);

// Inverse dictionary; c1 is solved from the defining equation, so the result
// lies on the variety identically. Requires q not in {0,1}.
Chart1Point qp_to_chart(const PState& s);

// Sample abscissae for a piecewise-linear path: n points spread by arc length,
// waypoints always included. A zero-length path yields the single start point.
std::vector<Cx> path_samples(const std::vector<Cx>& t_path, int n_samples);

// Adaptive RK5(4) integration of the twisted Hamiltonian system along t_path.
// Samples land exactly on the returned grid of path_samples(t_path, n_samples).
Trajectory integrate_flow(const PState& s0, const std::vector<Cx>& t_path, double tol,
                          int n_samples = 33);

// Same flow expressed through the moduli coordinates (equations (3),(4),(6)).
std::vector<std::pair<Cx, Chart1Point>> integrate_chart_flow(const Chart1Point& p0,
                                                             const Theta& th,
                                                             const std::vector<Cx>& t_path,
                                                             double tol, int n_samples = 33);

// First-order reduction of the scalar equation: state (q, q').
struct ScalarSample {
    Cx t, q, dq;
};
std::vector<ScalarSample> integrate_scalar(Cx q0, Cx dq0, const Theta& th,
                                           const std::vector<Cx>& t_path, double tol,
                                           int n_samples = 33);

// d2 minus the right-hand side of the even-reduction equation for Q(s).
Cx even_q_residual(const EvenJet& Qj, const Theta& th);

// d2 minus the right-hand side of the classical degenerate P_V equation for y(s).
Cx classical_y_residual(const EvenJet& yj, const Theta& th);

// Jet-level substitution y = Q/(Q-1).
EvenJet q_jet_to_y_jet(const EvenJet& Qj);

// CSV with header t_re,t_im,q_re,q_im,p_re,p_im,H_re,H_im,residual
// (17 significant digits, round-trip safe).
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);
Trajectory read_trajectory_csv(std::istream& is, const Theta& th);

} // namespace degpv

#endif

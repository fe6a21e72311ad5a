#ifndef DEGPV_BACKLUND_HPP
#define DEGPV_BACKLUND_HPP

#include <array>

#include "degpv/painleve.hpp"

namespace degpv {

enum class BTKind { NegateT, FlipTheta0, FlipTheta1, Swap, Shift };

// Parameter action of each transformation.
Theta bt_param_map(BTKind kind, const Theta& th);

// (M,theta0,theta1,t) -> (M,theta0,theta1,-t): samples move from t to -t with
// q and p unchanged (q~(t~) = q(-t~) gives p~ = (t~/4) q~' = p).
Trajectory bt_negate_t(const Trajectory& traj);

// Sign flip of theta0 (which = 0) or theta1 (which = 1); identity on samples.
Trajectory bt_theta_flip(const Trajectory& traj, int which);

// Jet-level realization of q(t) -> 1 - q(it), swapping (theta0, theta1):
// given the q-jet at t, returns the q~-jet (1-q, -i dq, d2q) at t~ = -i t.
struct SwapJet {
    Cx q, dq, d2q, t;
};
SwapJet bt_swap_jet(Cx q, Cx dq, Cx d2q, Cx t);

// Trajectory realization of the swap: (t,q,p) -> (-i t, 1-q, -p).
Trajectory bt_swap(const Trajectory& traj);

// Shift (theta0, theta1) -> (theta0+1, theta1) at fixed t.
PState bt_shift_point(const PState& s);

// Applies the transformation and evaluates the target-equation residual along
// the image: jet maps directly, Shift via re-integration comparison.
double verify_bt(const Trajectory& traj, BTKind kind, double tol);

} // namespace degpv

#endif

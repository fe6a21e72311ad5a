#ifndef DEGPV_MONODROMY_HPP
#define DEGPV_MONODROMY_HPP

#include <utility>
#include <vector>

#include "degpv/painleve.hpp"

namespace degpv {

// Conjugation invariants of the monodromy representation.
struct MonodromyInvariants {
    Cx tr_m0, tr_m1, tr_m0m1;
};

// Point on the cubic surface R(s0,s1).
struct CubicPoint {
    Cx x1, x2, x3;
};

// Point on the y0=1 chart of the resolution R+(s0,2).
struct RPlusPoint {
    Cx x1, x2, x3, y1;
};

// Base-pointed loop around one singular point, realized as a polygon.
struct Contour {
    Cx base;
    Cx center;
    double radius;
    int orientation = +1;  // +1 counterclockwise
};

// Contour configuration for the two finite singular points.
struct ContourConfig {
    Cx base = Cx(0.5, 0.75);
    double radius0 = 0.3;
    double radius1 = 0.3;
    int circle_segments = 24;
};

// Polygonal loop base -> circle (counterclockwise for orientation +1) -> base.
std::vector<Cx> make_loop(const Contour& c, int circle_segments = 24);

// Transport matrix of Y' = -A(z) Y along the piecewise-linear path; the
// result has determinant 1 up to integration error for trace-free A.
// The path must stay at distance >= 0.05 from the poles {0, 1}.
Mat2 transport(const ConnectionA& A, const std::vector<Cx>& path, double tol);

// (tr M0, tr M1, tr M0 M1) from base-pointed loop transports around 0 and 1.
MonodromyInvariants monodromy_invariants(const Chart1Point& p, const Theta& th,
                                         const ContourConfig& cfg, double tol);

// s = (2cos(pi theta0), 2cos(pi theta1)) via the exponential formula.
std::pair<Cx, Cx> expected_s(const Theta& th);

// x1 x2 x3 + x1^2 + x2^2 + s0 x1 + s1 x2 + 1
Cx cubic_residual(const CubicPoint& pt, Cx s0, Cx s1);

// Gradient of the cubic at pt.
std::array<Cx, 3> cubic_gradient(const CubicPoint& pt, Cx s0, Cx s1);

// The singular points of R(s0,s1); empty unless s0 = +-2 or s1 = +-2
// (tested exactly).
std::vector<CubicPoint> cubic_singular_points(Cx s0, Cx s1);

// The three relations of the y0=1 chart of R+(s0,2).
std::array<Cx, 3> rplus_residuals(const RPlusPoint& pt, Cx s0);

// Points (0,-1,s0,a_k) on the exceptional fiber, a_k on a fixed grid.
std::vector<RPlusPoint> rplus_fiber(Cx s0, int samples);

// Max pairwise deviation of the three invariants over n_checks points of the
// trajectory.
double isomonodromy_drift(const Trajectory& traj, int n_checks, const ContourConfig& cfg,
                          double tol);

} // namespace degpv

#endif

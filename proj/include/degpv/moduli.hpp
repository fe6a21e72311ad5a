#ifndef DEGPV_MODULI_HPP
#define DEGPV_MODULI_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "degpv/ratmat.hpp"

namespace degpv {

// Local exponent parameters: eigenvalues of the residues at z=0 and z=1 are
// +-theta0/2 and +-theta1/2.
struct Theta {
    Cx theta0{0.0};
    Cx theta1{0.0};
};

// Point on the first affine chart M1(theta0,theta1); c0 is eliminated.
struct Chart1Point {
    Cx a0, b0, c1, t;
    Chart1Point(Cx a0_, Cx b0_, Cx c1_, Cx t_);
};

// Point on the second affine chart M2(theta0,theta1); c2, c3 are eliminated.
struct Chart2Point {
    Cx a2, b1, c1, t;
    Chart2Point(Cx a2_, Cx b1_, Cx c1_, Cx t_);
};

// Basis change e1 -> lambda e1, e2 -> e2 + (x0 + x1 z) e1.
struct GaugeTransform {
    Cx lambda{1.0};
    Cx x0{0.0};
    Cx x1{0.0};
};

// c0 recovered from the z=1 lattice equation.
Cx chart1_c0(const Chart1Point& p, const Theta& th);

// Defining equation of M1: zero iff p lies on the variety.
Cx chart1_residual(const Chart1Point& p, const Theta& th);

// (c2, c3) recovered from the chart-2 eliminations.
std::pair<Cx, Cx> chart2_c2_c3(const Chart2Point& p, const Theta& th);

// Defining equation of M2.
Cx chart2_residual(const Chart2Point& p, const Theta& th);

bool on_variety(const Chart1Point& p, const Theta& th, double tol = 1e-9);
bool on_variety(const Chart2Point& p, const Theta& th, double tol = 1e-9);

// A singular point of M(theta0,theta1) at fixed t, tagged by chart.
struct SingularPoint {
    int chart;  // 1 or 2
    Cx a, b, c1;  // (a0,b0,c1) for chart 1, (a2,b1,c1) for chart 2
};

// The singular locus at fixed t != 0. Empty when theta0 != 0 and theta1 != 0;
// equality with zero is tested exactly on the input values.
std::vector<SingularPoint> singular_locus(const Theta& th, Cx t);

// Connection matrix in the new basis encoded by g:
//   A~ = U^{-1} A U + U^{-1} U'   with U = [[lambda, x0 + x1 z], [0, 1]].
RatMat2 apply_gauge(const GaugeTransform& g, const RatMat2& op_matrix);

// Chart transition on the overlap b0 != 0; the returned gauge certifies it.
Chart2Point transition_1to2(const Chart1Point& p, const Theta& th, GaugeTransform* gauge = nullptr);
Chart1Point transition_2to1(const Chart2Point& p, const Theta& th, GaugeTransform* gauge = nullptr);

// Max of |apply_gauge(g, A1)(z) - A2(z)| over `samples` random z off the poles.
double certify_equivalence(const RatMat2& A1, const RatMat2& A2, const GaugeTransform& g,
                           int samples, std::uint64_t seed = 0x5eed);

// Truncated power-series solution x = sum_{n>=1} a_n z^n of
//   z dx/dz + (beta - alpha) x + b - c x^2 = 0,
// the unique-direct-summand recursion. b and c must lie in z C[[z]].
PolyZ invariant_line_series(Cx alpha, Cx beta, const PolyZ& b, const PolyZ& c, int n_terms);

} // namespace degpv

#endif

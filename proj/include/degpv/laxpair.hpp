#ifndef DEGPV_LAXPAIR_HPP
#define DEGPV_LAXPAIR_HPP

#include "degpv/moduli.hpp"

namespace degpv {

// Connection d/dz + A with A trace-free, poles at z in {0,1} and the t^2 z^2
// irregular term at infinity.
struct ConnectionA {
    RatMat2 matrix;
    Theta theta;
    int chart;  // chart the source point lives on
};

// Deformation matrix B(z) = [[0, b10 + b11 z], [b20, 0]]; the H-components and
// the z-coefficient of the E2-row vanish identically in the derivation.
struct DeformationB {
    Cx bh0{0.0}, bh1{0.0};
    Cx b10{0.0}, b11{0.0};
    Cx b20{0.0}, b21{0.0};

    RatMat2 as_matrix() const;
};

// A = (1/(z(z-1))) [[a0, c0 + c1 z + t^2 z^2], [z + b0, -a0]]
ConnectionA build_A_chart1(const Chart1Point& p, const Theta& th);

// A = (1/(z(z-1))) [[a2 z^2, th0^2/4 + c1 z + c2 z^2 + c3 z^3], [1 + b1 z, -a2 z^2]]
ConnectionA build_A_chart2(const Chart2Point& p, const Theta& th);

// B20 = 2/t, B11 = 2t, B10 = 2 c1/t - 2 t b0.
DeformationB build_B(const Chart1Point& p);

// t-derivatives of the chart-1 coordinates along the isomonodromic flow.
struct Chart1Velocity {
    Cx da0, db0, dc1;
};

Chart1Velocity vector_field(const Chart1Point& p, const Theta& th);

// dA/dt - dB/dz - [A, B], as a rational matrix in z (identically small for
// points evolving by vector_field).
RatMat2 zero_curvature_residual(const Chart1Point& p, const Theta& th);

// d/dt of the defining equation a0^2 + b0 c0 - th0^2/4 along the flow.
Cx constraint_drift(const Chart1Point& p, const Theta& th);

} // namespace degpv

#endif

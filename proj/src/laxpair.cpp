#include "degpv/laxpair.hpp"

#include "degpv/errors.hpp"

namespace degpv {

namespace {

// z(z-1) = -z + z^2
const PolyZ& pole_den() {
    static const PolyZ d({0.0, -1.0, 1.0});
    return d;
}

} // namespace

RatMat2 DeformationB::as_matrix() const {
    return RatMat2::from_poly({PolyZ({bh0, bh1}), PolyZ({b10, b11}),
                               PolyZ({b20, b21}), -PolyZ({bh0, bh1})});
}

ConnectionA build_A_chart1(const Chart1Point& p, const Theta& th) {
    if (p.t == Cx(0.0)) throw DegenerateInput("build_A_chart1: t = 0");
    const Cx c0 = chart1_c0(p, th);
    RatMat2 m({PolyZ({p.a0}), PolyZ({c0, p.c1, p.t * p.t}),
               PolyZ({p.b0, 1.0}), PolyZ({-p.a0})},
              pole_den());
    return {std::move(m), th, 1};
}

ConnectionA build_A_chart2(const Chart2Point& p, const Theta& th) {
    if (p.t == Cx(0.0)) throw DegenerateInput("build_A_chart2: t = 0");
    const auto [c2, c3] = chart2_c2_c3(p, th);
    const Cx c0 = th.theta0 * th.theta0 / 4.0;
    RatMat2 m({PolyZ({0.0, 0.0, p.a2}), PolyZ({c0, p.c1, c2, c3}),
               PolyZ({1.0, p.b1}), PolyZ({0.0, 0.0, -p.a2})},
              pole_den());
    return {std::move(m), th, 2};
}

DeformationB build_B(const Chart1Point& p) {
    if (p.t == Cx(0.0)) throw DegenerateInput("build_B: t = 0");
    DeformationB b;
    b.b20 = 2.0 / p.t;
    b.b11 = 2.0 * p.t;
    b.b10 = 2.0 * p.c1 / p.t - 2.0 * p.t * p.b0;
    return b;
}

Chart1Velocity vector_field(const Chart1Point& p, const Theta& th) {
    if (p.t == Cx(0.0)) throw DegenerateInput("vector_field: t = 0");
    const Cx c0 = chart1_c0(p, th);
    const Cx b10 = 2.0 * p.c1 / p.t - 2.0 * p.t * p.b0;
    Chart1Velocity v;
    v.da0 = 2.0 * c0 / p.t - p.b0 * b10;           // (3)
    v.dc1 = -2.0 * p.t + 4.0 * p.a0 * p.t;         // (4)
    v.db0 = -4.0 * p.a0 / p.t;                     // (6)
    return v;
}

RatMat2 zero_curvature_residual(const Chart1Point& p, const Theta& th) {
    const ConnectionA A = build_A_chart1(p, th);
    const RatMat2 B = build_B(p).as_matrix();
    const Chart1Velocity v = vector_field(p, th);

    // total t-derivative of c0 through (2) and the flow
    const Cx t2term = 2.0 * p.t;
    const Cx dc0 = -v.dc1 - t2term - v.db0 * p.c1 - p.b0 * v.dc1 - v.db0 * p.t * p.t -
                   t2term * p.b0;

    RatMat2 dA_dt({PolyZ({v.da0}), PolyZ({dc0, v.dc1, 2.0 * p.t}),
                   PolyZ({v.db0}), PolyZ({-v.da0})},
                  pole_den());

    RatMat2 dB_dz = RatMat2::from_poly({PolyZ(), PolyZ::constant(2.0 * p.t), PolyZ(), PolyZ()});

    return dA_dt - dB_dz - commutator(A.matrix, B);
}

Cx constraint_drift(const Chart1Point& p, const Theta& th) {
    const Chart1Velocity v = vector_field(p, th);
    const Cx c0 = chart1_c0(p, th);
    const Cx dc0 = -v.dc1 - 2.0 * p.t - v.db0 * p.c1 - p.b0 * v.dc1 - v.db0 * p.t * p.t -
                   2.0 * p.t * p.b0;
    return 2.0 * p.a0 * v.da0 + v.db0 * c0 + p.b0 * dc0;
}

} // namespace degpv

#include <doctest.h>

#include <functional>

#include "degpv/errors.hpp"
#include "degpv/laxpair.hpp"
#include "degpv/moduli.hpp"
#include "degpv/sampling.hpp"
#include "testutil.hpp"

using namespace degpv;
using degpv::testutil::dist;

TEST_CASE("chart1_c0 hand values") {
    const Theta th0{0.0, 0.0};
    CHECK(dist(chart1_c0(Chart1Point(0.0, 0.0, 0.0, 1.0), th0), Cx(-1.0)) == 0.0);
    CHECK(dist(chart1_c0(Chart1Point(0.3, -1.0, 0.7, 1.3), th0), Cx(0.0)) < 1e-15);
    CHECK(dist(chart1_c0(Chart1Point(0.0, 1.0, 2.0, 1.0), Theta{0.0, 2.0}), Cx(-5.0)) == 0.0);
}

TEST_CASE("chart1_residual hand values") {
    const Theta th{0.4, 0.9};
    CHECK(dist(chart1_residual(Chart1Point(0.2, 0.0, 0.77, 1.1), th), Cx(0.0)) < 1e-16);
    // singular-locus point lies on the variety
    const Theta th01{0.0, 1.0};
    CHECK(dist(chart1_residual(Chart1Point(0.0, 0.0, -1.0 + 0.25, 1.0), th01), Cx(0.0)) == 0.0);
    CHECK(dist(chart1_residual(Chart1Point(1.0, 0.0, 0.0, 1.0), Theta{0.0, 0.0}), Cx(1.0)) ==
          0.0);
}

TEST_CASE("chart2 eliminations hand values") {
    const Theta z{0.0, 0.0};
    auto [c2, c3] = chart2_c2_c3(Chart2Point(0.0, 0.0, 0.0, 1.0), z);
    CHECK(dist(c2, Cx(-1.0)) == 0.0);
    CHECK(dist(c3, Cx(1.0)) == 0.0);
    std::tie(c2, c3) = chart2_c2_c3(Chart2Point(1.0, 0.0, 0.0, 1.0), z);
    CHECK(dist(c2, Cx(0.0)) == 0.0);
    CHECK(dist(c3, Cx(0.0)) == 0.0);
    std::tie(c2, c3) = chart2_c2_c3(Chart2Point(0.0, 1.0, 0.0, 1.0), Theta{2.0, 2.0});
    CHECK(dist(c2, Cx(-2.0)) == 0.0);
    CHECK(dist(c3, Cx(3.0)) == 0.0);
}

TEST_CASE("chart2_residual hand values") {
    CHECK(dist(chart2_residual(Chart2Point(0.0, 0.0, 0.31, 1.7), Theta{0.2, 0.4}), Cx(0.0)) ==
          0.0);
    // chart-2 singular point is on the variety
    CHECK(dist(chart2_residual(Chart2Point(0.0, -1.0, 1.0, 1.0), Theta{0.0, 0.0}), Cx(0.0)) ==
          0.0);
    CHECK(dist(chart2_residual(Chart2Point(1.0, 0.0, 0.0, 1.0), Theta{0.0, 0.0}), Cx(1.0)) ==
          0.0);
}

TEST_CASE("residuals depend on theta only through its square") {
    Sampler smp(99);
    for (int i = 0; i < 10; ++i) {
        const Theta th = smp.theta(3.0);
        const Chart1Point p(smp.box(-1, 1), smp.box(-1, 1), smp.box(-1, 1), smp.annulus(0.5, 2));
        const Cx r = chart1_residual(p, th);
        CHECK(r == chart1_residual(p, Theta{-th.theta0, th.theta1}));
        CHECK(r == chart1_residual(p, Theta{th.theta0, -th.theta1}));
        const Chart2Point q(smp.box(-1, 1), smp.box(-1, 1), smp.box(-1, 1), smp.annulus(0.5, 2));
        const Cx r2 = chart2_residual(q, th);
        CHECK(r2 == chart2_residual(q, Theta{-th.theta0, -th.theta1}));
    }
}

TEST_CASE("singular_locus enumerates the four cases") {
    CHECK(singular_locus(Theta{1.0, 1.0}, Cx(1.0)).empty());

    const auto l1 = singular_locus(Theta{0.0, 1.0}, Cx(1.0));
    REQUIRE(l1.size() == 1);
    CHECK(l1[0].chart == 1);
    CHECK(dist(l1[0].a, Cx(0.0)) == 0.0);
    CHECK(dist(l1[0].b, Cx(0.0)) == 0.0);
    CHECK(dist(l1[0].c1, Cx(-0.75)) == 0.0);

    const auto l2 = singular_locus(Theta{1.0, 0.0}, Cx(1.0));
    REQUIRE(l2.size() == 2);
    CHECK(l2[0].chart == 1);
    CHECK(dist(l2[0].b, Cx(-1.0)) == 0.0);
    CHECK(dist(l2[0].c1, Cx(-0.75)) == 0.0);
    CHECK(l2[1].chart == 2);
    CHECK(dist(l2[1].b, Cx(-1.0)) == 0.0);
    CHECK(dist(l2[1].c1, Cx(0.75)) == 0.0);

    const auto l3 = singular_locus(Theta{0.0, 0.0}, Cx(1.0));
    REQUIRE(l3.size() == 3);
    CHECK(dist(l3[0].b, Cx(0.0)) == 0.0);
    CHECK(dist(l3[0].c1, Cx(-1.0)) == 0.0);
    CHECK(dist(l3[1].b, Cx(-1.0)) == 0.0);
    CHECK(dist(l3[1].c1, Cx(-1.0)) == 0.0);
    CHECK(l3[2].chart == 2);
    CHECK(dist(l3[2].c1, Cx(1.0)) == 0.0);

    CHECK_THROWS_AS(singular_locus(Theta{0.0, 0.0}, Cx(0.0)), DegenerateInput);
}

namespace {

// five-point stencil; exact for the cubic residuals up to roundoff
Cx stencil_derivative(const std::function<Cx(Cx)>& f, Cx x, double h = 0.5) {
    return (-f(x + 2 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2 * h)) / (12.0 * h);
}

} // namespace

TEST_CASE("residual gradient vanishes at every singular point (finite differences)") {
    for (const Theta& th : {Theta{0.0, 1.3}, Theta{0.8, 0.0}, Theta{0.0, 0.0}}) {
        const Cx t(1.2, 0.1);
        for (const SingularPoint& sp : singular_locus(th, t)) {
            std::array<std::function<Cx(Cx)>, 3> partials;
            if (sp.chart == 1) {
                partials = {
                    [&](Cx x) { return chart1_residual(Chart1Point(x, sp.b, sp.c1, t), th); },
                    [&](Cx x) { return chart1_residual(Chart1Point(sp.a, x, sp.c1, t), th); },
                    [&](Cx x) { return chart1_residual(Chart1Point(sp.a, sp.b, x, t), th); }};
            } else {
                partials = {
                    [&](Cx x) { return chart2_residual(Chart2Point(x, sp.b, sp.c1, t), th); },
                    [&](Cx x) { return chart2_residual(Chart2Point(sp.a, x, sp.c1, t), th); },
                    [&](Cx x) { return chart2_residual(Chart2Point(sp.a, sp.b, x, t), th); }};
            }
            double norm2 = 0.0;
            const std::array<Cx, 3> at{sp.a, sp.b, sp.c1};
            for (int k = 0; k < 3; ++k) norm2 += std::norm(stencil_derivative(partials[k], at[k]));
            CHECK(std::sqrt(norm2) < 1e-12);
            // and the point itself is on the variety
            if (sp.chart == 1)
                CHECK(dist(chart1_residual(Chart1Point(sp.a, sp.b, sp.c1, t), th), Cx(0.0)) <
                      1e-14);
            else
                CHECK(dist(chart2_residual(Chart2Point(sp.a, sp.b, sp.c1, t), th), Cx(0.0)) <
                      1e-14);
        }
    }
}

TEST_CASE("apply_gauge: identity and constant diagonal") {
    Sampler smp(5);
    const Theta th = smp.theta();
    const Chart1Point p = smp.chart1_on_variety(th, Cx(1.1, 0.2));
    const RatMat2 A = build_A_chart1(p, th).matrix;

    const RatMat2 same = apply_gauge(GaugeTransform{1.0, 0.0, 0.0}, A);
    CHECK((same - A).max_abs_num_coeff() < 1e-14);

    // constant scaling on a constant matrix: pure similarity
    const Mat2 c(1.0, 2.0, 3.0, 4.0);
    const GaugeTransform g{2.0, 0.0, 0.0};
    const RatMat2 out = apply_gauge(g, RatMat2::from_const(c));
    const Mat2 u(2.0, 0.0, 0.0, 1.0);
    const Mat2 expected = inverse(u) * c * u;
    CHECK((out - RatMat2::from_const(expected)).max_abs_num_coeff() < 1e-14);
}

TEST_CASE("apply_gauge with lambda = 1/b0 normalizes the lower-left constant term") {
    Sampler smp(6);
    const Theta th = smp.theta();
    const Chart1Point p = smp.chart1_on_variety(th, Cx(0.9, -0.1));
    REQUIRE(std::abs(p.b0) > 1e-6);
    const RatMat2 A = build_A_chart1(p, th).matrix;
    const RatMat2 out = apply_gauge(GaugeTransform{1.0 / p.b0, 0.0, 0.0}, A);
    CHECK(dist(out.num(1, 0).coeff(0), Cx(1.0)) < 1e-13);
}

TEST_CASE("transition 1 -> 2: variety to variety, certified, round trip") {
    Sampler smp(17);
    for (int i = 0; i < 20; ++i) {
        const Theta th = smp.theta(3.0);
        const Cx t = smp.annulus(0.5, 2.0);
        const Chart1Point p1 = smp.chart1_on_variety(th, t);
        CAPTURE(i);
        REQUIRE(std::abs(chart1_residual(p1, th)) < 1e-12);

        GaugeTransform g;
        const Chart2Point p2 = transition_1to2(p1, th, &g);
        CHECK(std::abs(chart2_residual(p2, th)) < 1e-12);

        const double resid = certify_equivalence(build_A_chart1(p1, th).matrix,
                                                 build_A_chart2(p2, th).matrix, g, 25);
        CHECK(resid < 1e-10);

        const Chart1Point back = transition_2to1(p2, th);
        CHECK(dist(back.a0, p1.a0) < 1e-10);
        CHECK(dist(back.b0, p1.b0) < 1e-10);
        CHECK(dist(back.c1, p1.c1) < 1e-10);
    }
}

TEST_CASE("transition with b0 = 1 gives b1 = 1") {
    const Theta th{1.0, 1.0};
    // b0 = 1 means q = -1; build the on-variety point from (q,p) = (-1, 0.3)
    const Chart1Point p1 = qp_to_chart({Cx(-1.0), Cx(0.3), Cx(1.0), th});
    REQUIRE(dist(p1.b0, Cx(1.0)) == 0.0);
    const Chart2Point p2 = transition_1to2(p1, th);
    CHECK(dist(p2.b1, Cx(1.0)) == 0.0);
}

TEST_CASE("transition requires the overlap") {
    CHECK_THROWS_AS(transition_1to2(Chart1Point(0.5, 0.0, 1.0, 1.0), Theta{1.0, 1.0}, nullptr),
                    NotInOverlap);
    CHECK_THROWS_AS(transition_2to1(Chart2Point(0.5, 0.0, 1.0, 1.0), Theta{1.0, 1.0}, nullptr),
                    NotInOverlap);
}

TEST_CASE("certify_equivalence negative control") {
    Sampler smp(23);
    const Theta th = smp.theta();
    const Cx t(1.3, 0.0);
    const RatMat2 A1 = build_A_chart1(smp.chart1_on_variety(th, t), th).matrix;
    const RatMat2 A2 = build_A_chart1(smp.chart1_on_variety(th, t), th).matrix;
    CHECK(certify_equivalence(A1, A1, GaugeTransform{}, 10) < 1e-15);
    CHECK(certify_equivalence(A1, A2, GaugeTransform{}, 10) > 1e-3);
}

TEST_CASE("invariant_line_series worked cases") {
    // b = c = 0 -> x = 0
    CHECK(invariant_line_series(0.0, 1.0, PolyZ(), PolyZ(), 8).is_zero());

    // alpha=0, beta=1, b=z, c=0: x = -z/2
    const PolyZ x1 = invariant_line_series(0.0, 1.0, PolyZ({0.0, 1.0}), PolyZ(), 8);
    CHECK(dist(x1.coeff(1), Cx(-0.5)) == 0.0);
    CHECK(x1.degree() == 1);

    // alpha=0, beta=1, b=z, c=z: a1 = -1/2, a2 = 0, a3 = 1/16
    const PolyZ x2 = invariant_line_series(0.0, 1.0, PolyZ({0.0, 1.0}), PolyZ({0.0, 1.0}), 8);
    CHECK(dist(x2.coeff(1), Cx(-0.5)) == 0.0);
    CHECK(dist(x2.coeff(2), Cx(0.0)) == 0.0);
    CHECK(dist(x2.coeff(3), Cx(1.0 / 16.0)) == 0.0);
}

TEST_CASE("invariant_line_series satisfies its ODE to the truncation order") {
    Sampler smp(31);
    for (int trial = 0; trial < 10; ++trial) {
        const Cx alpha = smp.box(-1, 1);
        const Cx beta = alpha + smp.annulus(0.3, 2.0, 2.5);
        std::vector<Cx> bc(6, Cx(0.0)), cc(6, Cx(0.0));
        for (std::size_t k = 1; k < 6; ++k) {
            bc[k] = smp.box(-1, 1);
            cc[k] = smp.box(-1, 1);
        }
        const PolyZ b(bc), c(cc);
        const int order = 12;
        const PolyZ x = invariant_line_series(alpha, beta, b, c, order);
        const PolyZ resid = shift_up(x.derivative(), 1) + (beta - alpha) * x + b - c * (x * x);
        for (int k = 0; k <= order; ++k)
            CHECK(std::abs(resid.coeff(static_cast<std::size_t>(k))) < 1e-12);
    }
}

TEST_CASE("invariant_line_series error paths") {
    CHECK_THROWS_AS(invariant_line_series(1.0, -1.0, PolyZ({0.0, 1.0}), PolyZ(), 5),
                    ResonantExponents);
    CHECK_THROWS_AS(invariant_line_series(0.0, 1.0, PolyZ({1.0}), PolyZ(), 5), DegenerateInput);
    CHECK_THROWS_AS(invariant_line_series(0.0, 1.0, PolyZ(), PolyZ({2.0, 1.0}), 5),
                    DegenerateInput);
}

#include "degpv/moduli.hpp"

#include <cmath>
#include <random>

#include "degpv/errors.hpp"

namespace degpv {

Chart1Point::Chart1Point(Cx a0_, Cx b0_, Cx c1_, Cx t_) : a0(a0_), b0(b0_), c1(c1_), t(t_) {
    if (t == Cx(0.0)) throw DegenerateInput("Chart1Point: t = 0");
}

Chart2Point::Chart2Point(Cx a2_, Cx b1_, Cx c1_, Cx t_) : a2(a2_), b1(b1_), c1(c1_), t(t_) {
    if (t == Cx(0.0)) throw DegenerateInput("Chart2Point: t = 0");
}

Cx chart1_c0(const Chart1Point& p, const Theta& th) {
    const Cx w0 = th.theta0 * th.theta0 / 4.0;
    const Cx w1 = th.theta1 * th.theta1 / 4.0;
    const Cx t2 = p.t * p.t;
    return -w0 + w1 - p.c1 - t2 - p.b0 * p.c1 - p.b0 * t2;
}

Cx chart1_residual(const Chart1Point& p, const Theta& th) {
    const Cx w0 = th.theta0 * th.theta0 / 4.0;
    return p.a0 * p.a0 + p.b0 * chart1_c0(p, th) - w0;
}

std::pair<Cx, Cx> chart2_c2_c3(const Chart2Point& p, const Theta& th) {
    const Cx w0 = th.theta0 * th.theta0 / 4.0;
    const Cx w1 = th.theta1 * th.theta1 / 4.0;
    const Cx t2 = p.t * p.t;
    const Cx c2 = -p.c1 - t2 - p.b1 * w0 - p.b1 * p.c1 + p.a2 - w0 + w1;
    const Cx c3 = t2 - p.b1 * c2 - p.a2;
    return {c2, c3};
}

Cx chart2_residual(const Chart2Point& p, const Theta& th) {
    const Cx c2 = chart2_c2_c3(p, th).first;
    return p.a2 * p.a2 + p.b1 * (-p.a2 - p.b1 * c2 + p.t * p.t);
}

bool on_variety(const Chart1Point& p, const Theta& th, double tol) {
    return std::abs(chart1_residual(p, th)) <= tol;
}

bool on_variety(const Chart2Point& p, const Theta& th, double tol) {
    return std::abs(chart2_residual(p, th)) <= tol;
}

std::vector<SingularPoint> singular_locus(const Theta& th, Cx t) {
    if (t == Cx(0.0)) throw DegenerateInput("singular_locus: t = 0");
    const Cx t2 = t * t;
    const Cx w0 = th.theta0 * th.theta0 / 4.0;
    const Cx w1 = th.theta1 * th.theta1 / 4.0;
    const bool z0 = th.theta0 == Cx(0.0);
    const bool z1 = th.theta1 == Cx(0.0);
    std::vector<SingularPoint> out;
    if (z0 && !z1) {
        out.push_back({1, 0.0, 0.0, -t2 + w1});
    } else if (!z0 && z1) {
        out.push_back({1, 0.0, -1.0, -t2 + w0});
    } else if (z0 && z1) {
        out.push_back({1, 0.0, 0.0, -t2});
        out.push_back({1, 0.0, -1.0, -t2});
    }
    if (z1) out.push_back({2, 0.0, -1.0, t2 - w0});
    return out;
}

RatMat2 apply_gauge(const GaugeTransform& g, const RatMat2& op_matrix) {
    if (g.lambda == Cx(0.0)) throw DegenerateInput("apply_gauge: lambda = 0");
    const PolyZ p({g.x0, g.x1});
    const PolyZ lam = PolyZ::constant(g.lambda);
    const PolyZ one = PolyZ::constant(1.0);
    // U = [[lambda, p],[0,1]], U^{-1} = (1/lambda) [[1, -p],[0, lambda]]
    RatMat2 U = RatMat2::from_poly({lam, p, PolyZ(), one});
    RatMat2 Uinv = (1.0 / g.lambda) * RatMat2::from_poly({one, -p, PolyZ(), lam});
    RatMat2 Uprime = RatMat2::from_poly({PolyZ(), PolyZ::constant(g.x1), PolyZ(), PolyZ()});
    return matmul(Uinv, matmul(op_matrix, U)) + matmul(Uinv, Uprime);
}

Chart2Point transition_1to2(const Chart1Point& p, const Theta& /*th*/, GaugeTransform* gauge) {
    if (p.b0 == Cx(0.0)) throw NotInOverlap("transition_1to2: b0 = 0");
    // lambda normalizes the lower-left constant term to 1; x0, x1 kill the
    // constant and linear coefficients of the (1,1) entry
    const Cx lambda = 1.0 / p.b0;
    const Cx x0 = p.a0 / p.b0;
    const Cx x1 = -p.a0 / (p.b0 * p.b0);
    if (gauge) *gauge = {lambda, x0, x1};
    const Cx a2 = p.a0 / (p.b0 * p.b0);
    const Cx b1 = 1.0 / p.b0;
    const Cx c1 = p.b0 * p.c1 + (p.a0 - p.a0 * p.a0) / p.b0;
    return Chart2Point(a2, b1, c1, p.t);
}

Chart1Point transition_2to1(const Chart2Point& p, const Theta& /*th*/, GaugeTransform* gauge) {
    if (p.b1 == Cx(0.0)) throw NotInOverlap("transition_2to1: b1 = 0");
    const Cx b0 = 1.0 / p.b1;
    const Cx a0 = p.a2 / (p.b1 * p.b1);
    const Cx c1 = p.b1 * (p.c1 - p.b1 * (a0 - a0 * a0));
    if (gauge) *gauge = {1.0 / p.b1, -p.a2 / (p.b1 * p.b1), p.a2 / p.b1};
    return Chart1Point(a0, b0, c1, p.t);
}

double certify_equivalence(const RatMat2& A1, const RatMat2& A2, const GaugeTransform& g,
                           int samples, std::uint64_t seed) {
    if (samples < 1) throw DegenerateInput("certify_equivalence: samples < 1");
    const RatMat2 transformed = apply_gauge(g, A1);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> box(-2.0, 2.0);
    double worst = 0.0;
    int done = 0;
    while (done < samples) {
        const Cx z(box(rng), box(rng));
        if (std::abs(z) < 0.15 || std::abs(z - Cx(1.0)) < 0.15) continue;
        const Mat2 d = transformed.eval(z) - A2.eval(z);
        worst = std::max(worst, d.max_abs());
        ++done;
    }
    return worst;
}

PolyZ invariant_line_series(Cx alpha, Cx beta, const PolyZ& b, const PolyZ& c, int n_terms) {
    const Cx nu = beta - alpha;
    const double nr = nu.real();
    if (nu.imag() == 0.0 && nr < 0.0 && nr == std::floor(nr))
        throw ResonantExponents("invariant_line_series: beta - alpha is a negative integer");
    if (b.coeff(0) != Cx(0.0) || c.coeff(0) != Cx(0.0))
        throw DegenerateInput("invariant_line_series: b, c must have zero constant term");
    if (n_terms < 0) throw DegenerateInput("invariant_line_series: n_terms < 0");

    std::vector<Cx> a(static_cast<std::size_t>(n_terms) + 1, Cx(0.0));  // a[0] unused
    for (int n = 1; n <= n_terms; ++n) {
        // [c x^2]_n depends only on a_1 .. a_{n-2}
        Cx conv(0.0);
        for (int m = 1; m <= n - 2; ++m) {
            const Cx cm = c.coeff(static_cast<std::size_t>(m));
            if (cm == Cx(0.0)) continue;
            Cx x2(0.0);  // coefficient of z^{n-m} in x^2
            for (int i = 1; i <= n - m - 1; ++i) x2 += a[i] * a[n - m - i];
            conv += cm * x2;
        }
        a[n] = (conv - b.coeff(static_cast<std::size_t>(n))) / (double(n) + nu);
    }
    return PolyZ(std::move(a));
}

} // namespace degpv

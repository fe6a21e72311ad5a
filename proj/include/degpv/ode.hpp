#ifndef DEGPV_ODE_HPP
#define DEGPV_ODE_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <string>

#include "degpv/errors.hpp"
#include "degpv/poly.hpp"

namespace degpv {

struct OdeOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double min_step = 1e-12;  // in units of the segment parameter
    double safety = 0.9;
};

// Dormand-Prince 5(4) along the straight segment za -> zb, parametrized by
// u in [0,1]: dy/du = (zb - za) * f(z(u), y). The state is advanced in place.
// f has signature void(Cx z, const std::array<Cx,N>& y, std::array<Cx,N>& dy).
// Throws StepFailure when the step size underflows; a FixedSingularity thrown
// by f shrinks the step first and resurfaces only when shrinking cannot help.
template <std::size_t N, class F>
void rk45_segment(F&& f, Cx za, Cx zb, std::array<Cx, N>& y, const OdeOptions& opt) {
    using State = std::array<Cx, N>;
    const Cx dz = zb - za;
    if (dz == Cx(0.0)) return;

    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                            a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                            a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                            e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                            e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

    State k1, k2, k3, k4, k5, k6, k7, ytmp, y5;
    double u = 0.0;
    double h = 0.1;
    bool have_k1 = false;

    auto eval = [&](double uu, const State& yy, State& k) {
        f(za + uu * dz, yy, k);
        for (auto& v : k) v *= dz;
    };

    while (u < 1.0) {
        if (u + h > 1.0) h = 1.0 - u;
        bool stage_ok = true;
        double err = 0.0;
        try {
            if (!have_k1) {
                eval(u, y, k1);
                have_k1 = true;
            }
            for (std::size_t i = 0; i < N; ++i) ytmp[i] = y[i] + h * a21 * k1[i];
            eval(u + c2 * h, ytmp, k2);
            for (std::size_t i = 0; i < N; ++i)
                ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
            eval(u + c3 * h, ytmp, k3);
            for (std::size_t i = 0; i < N; ++i)
                ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
            eval(u + c4 * h, ytmp, k4);
            for (std::size_t i = 0; i < N; ++i)
                ytmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
            eval(u + c5 * h, ytmp, k5);
            for (std::size_t i = 0; i < N; ++i)
                ytmp[i] = y[i] +
                          h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
            eval(u + h, ytmp, k6);
            for (std::size_t i = 0; i < N; ++i)
                y5[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
            eval(u + h, y5, k7);

            for (std::size_t i = 0; i < N; ++i) {
                const Cx ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                                   e6 * k6[i] + e7 * k7[i]);
                const double sc =
                    opt.abs_tol + opt.rel_tol * std::max(std::abs(y[i]), std::abs(y5[i]));
                const double r = std::abs(ei) / sc;
                err += r * r;
            }
            err = std::sqrt(err / double(N));
            if (!std::isfinite(err)) stage_ok = false;
        } catch (const FixedSingularity&) {
            stage_ok = false;
            if (h / 4.0 < opt.min_step) throw;
        }

        if (stage_ok && err <= 1.0) {
            u += h;
            y = y5;
            k1 = k7;  // FSAL
            const double grow = err > 0.0 ? opt.safety * std::pow(err, -0.2) : 5.0;
            h *= std::min(5.0, std::max(0.2, grow));
        } else {
            const double shrink =
                stage_ok ? std::max(0.1, opt.safety * std::pow(err, -0.2)) : 0.25;
            h *= shrink;
            if (h < opt.min_step) {
                const Cx zc = za + u * dz;
                throw StepFailure("rk45: step size underflow near z = (" +
                                  std::to_string(zc.real()) + ", " + std::to_string(zc.imag()) +
                                  ")");
            }
        }
    }
}

} // namespace degpv

#endif

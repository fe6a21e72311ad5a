#ifndef DEGPV_SAMPLING_HPP
#define DEGPV_SAMPLING_HPP

#include <random>

#include "degpv/painleve.hpp"

namespace degpv {

// Deterministic draws for the randomized identity suites.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng_);
    }

    Cx box(double lo, double hi) { return Cx(uniform(lo, hi), uniform(lo, hi)); }

    // magnitude in [rmin, rmax], phase in [-phase_max, phase_max]
    Cx annulus(double rmin, double rmax, double phase_max = 3.141592653589793) {
        const double r = uniform(rmin, rmax);
        const double ph = uniform(-phase_max, phase_max);
        return r * Cx(std::cos(ph), std::sin(ph));
    }

    Cx theta_component(double max_abs, bool real_only) {
        if (real_only) return Cx(uniform(0.05, max_abs), 0.0);
        return annulus(0.05, max_abs);
    }

    Theta theta(double max_abs = 3.0, bool real_only = false) {
        return {theta_component(max_abs, real_only), theta_component(max_abs, real_only)};
    }

    // q bounded away from the fixed singularities {0, 1}
    Cx admissible_q(double spread = 1.5) {
        while (true) {
            const Cx q = box(-spread, spread) + Cx(0.5, 0.0);
            if (std::abs(q) > 0.25 && std::abs(q - Cx(1.0)) > 0.25) return q;
        }
    }

    // on-variety chart-1 point: c1 is solved from the defining equation
    Chart1Point chart1_on_variety(const Theta& th, Cx t, double spread = 1.5) {
        const Cx q = admissible_q(spread);
        const Cx p = box(-0.75, 0.75);
        return qp_to_chart({q, p, t, th});
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace degpv

#endif

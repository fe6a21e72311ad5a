#ifndef DEGPV_PATHGEOM_HPP
#define DEGPV_PATHGEOM_HPP

#include <algorithm>
#include <cmath>

#include "degpv/poly.hpp"

namespace degpv {

inline double point_segment_distance(Cx p, Cx a, Cx b) {
    const Cx ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(p - a);
    double u = ((p - a).real() * ab.real() + (p - a).imag() * ab.imag()) / len2;
    u = std::clamp(u, 0.0, 1.0);
    return std::abs(p - (a + u * ab));
}

} // namespace degpv

#endif

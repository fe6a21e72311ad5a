#include "degpv/ratmat.hpp"

#include <algorithm>
#include <cmath>

#include "degpv/errors.hpp"

namespace degpv {

double Mat2::max_abs() const {
    double r = 0.0;
    for (const Cx& v : m) r = std::max(r, std::abs(v));
    return r;
}

std::pair<Cx, Cx> Mat2::eigenvalues() const {
    const Cx tr = trace();
    const Cx disc = std::sqrt(tr * tr - 4.0 * det());
    return {(tr + disc) / 2.0, (tr - disc) / 2.0};
}

Mat2 operator+(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 4; ++i) r.m[i] = a.m[i] + b.m[i];
    return r;
}

Mat2 operator-(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 4; ++i) r.m[i] = a.m[i] - b.m[i];
    return r;
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
    return Mat2(a.m[0] * b.m[0] + a.m[1] * b.m[2], a.m[0] * b.m[1] + a.m[1] * b.m[3],
                a.m[2] * b.m[0] + a.m[3] * b.m[2], a.m[2] * b.m[1] + a.m[3] * b.m[3]);
}

Mat2 operator*(Cx s, const Mat2& a) {
    Mat2 r;
    for (int i = 0; i < 4; ++i) r.m[i] = s * a.m[i];
    return r;
}

Mat2 inverse(const Mat2& a) {
    const Cx d = a.det();
    if (std::abs(d) == 0.0) throw DegenerateInput("inverse: singular matrix");
    return (1.0 / d) * Mat2(a.m[3], -a.m[1], -a.m[2], a.m[0]);
}

RatMat2::RatMat2() : den_(PolyZ::constant(1.0)) {}

RatMat2::RatMat2(std::array<PolyZ, 4> num, PolyZ den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DegenerateInput("RatMat2: zero denominator");
    canonicalize();
}

RatMat2 RatMat2::identity() {
    return from_const(Mat2::identity());
}

RatMat2 RatMat2::from_poly(std::array<PolyZ, 4> entries) {
    return RatMat2(std::move(entries), PolyZ::constant(1.0));
}

RatMat2 RatMat2::from_const(const Mat2& m) {
    return from_poly({PolyZ::constant(m.m[0]), PolyZ::constant(m.m[1]),
                      PolyZ::constant(m.m[2]), PolyZ::constant(m.m[3])});
}

RatMat2& RatMat2::canonicalize() {
    den_.canonicalize();
    if (den_.is_zero()) throw DegenerateInput("RatMat2: zero denominator");
    const Cx lead = den_.coeffs().back();
    const Cx s = 1.0 / lead;
    den_ = s * den_;
    for (PolyZ& n : num_) {
        n = s * n;
        n.canonicalize();
    }
    return *this;
}

PolyZ RatMat2::trace_num() const { return num_[0] + num_[3]; }

double RatMat2::max_abs_num_coeff() const {
    double r = 0.0;
    for (const PolyZ& n : num_) r = std::max(r, n.max_abs_coeff());
    return r;
}

bool RatMat2::den_is_one() const {
    return den_.degree() == 0 && den_.coeff(0) == Cx(1.0);
}

Mat2 RatMat2::eval(Cx z) const {
    const Cx d = poly_eval(den_, z);
    if (std::abs(d) == 0.0) throw DegenerateInput("RatMat2::eval at a pole");
    return Mat2(poly_eval(num_[0], z) / d, poly_eval(num_[1], z) / d,
                poly_eval(num_[2], z) / d, poly_eval(num_[3], z) / d);
}

RatMat2 operator+(const RatMat2& a, const RatMat2& b) {
    if (a.den_ == b.den_)
        return RatMat2({a.num_[0] + b.num_[0], a.num_[1] + b.num_[1],
                        a.num_[2] + b.num_[2], a.num_[3] + b.num_[3]},
                       a.den_);
    std::array<PolyZ, 4> n;
    for (int i = 0; i < 4; ++i) n[i] = a.num_[i] * b.den_ + b.num_[i] * a.den_;
    return RatMat2(std::move(n), a.den_ * b.den_);
}

RatMat2 operator-(const RatMat2& a, const RatMat2& b) { return a + Cx(-1.0) * b; }

RatMat2 operator*(Cx s, const RatMat2& a) {
    return RatMat2({s * a.num_[0], s * a.num_[1], s * a.num_[2], s * a.num_[3]}, a.den_);
}

RatMat2 matmul(const RatMat2& a, const RatMat2& b) {
    std::array<PolyZ, 4> n;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            n[2 * i + j] = a.num(i, 0) * b.num(0, j) + a.num(i, 1) * b.num(1, j);
    PolyZ den = a.den_is_one() ? b.den() : (b.den_is_one() ? a.den() : a.den() * b.den());
    return RatMat2(std::move(n), std::move(den));
}

RatMat2 commutator(const RatMat2& a, const RatMat2& b) {
    return matmul(a, b) - matmul(b, a);
}

namespace {

// multiplicity of `pole` as a root of p, deflating while the remainder is
// negligible against the polynomial scale at the pole
int root_multiplicity(PolyZ p, Cx pole, std::vector<PolyZ>* chain = nullptr) {
    double scale = 0.0;
    double zk = 1.0;
    for (const Cx& c : p.coeffs()) {
        scale += std::abs(c) * zk;
        zk *= std::max(1.0, std::abs(pole));
    }
    if (scale == 0.0) return 0;
    int mult = 0;
    while (!p.is_zero()) {
        Cx rem;
        PolyZ q = deflate(p, pole, &rem);
        if (std::abs(rem) > 1e-10 * scale) break;
        p = std::move(q);
        if (chain) chain->push_back(p);
        ++mult;
    }
    return mult;
}

} // namespace

Mat2 residue_at(const RatMat2& m, Cx pole) {
    std::vector<PolyZ> den_chain;
    const int dm = root_multiplicity(m.den(), pole, &den_chain);
    if (dm == 0) return Mat2();  // regular point
    Mat2 res;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            PolyZ n = m.num(i, j);
            if (n.is_zero()) continue;
            // cancel common (z - pole) factors between entry and denominator
            int k = 0;
            while (k < dm - 1 && !n.is_zero()) {
                Cx rem;
                PolyZ q = deflate(n, pole, &rem);
                if (std::abs(rem) > 1e-10 * n.max_abs_coeff()) break;
                n = std::move(q);
                ++k;
            }
            if (n.is_zero()) continue;
            if (dm - k > 1)
                throw HigherOrderPole("residue_at: pole of order >= 2 after cancellation");
            // order exactly 1: residue = n(pole) / d~(pole), d = (z-pole)^dm d~
            const PolyZ& dred = den_chain[static_cast<std::size_t>(dm - 1)];
            res(i, j) = poly_eval(n, pole) / poly_eval(dred, pole);
        }
    }
    return res;
}

} // namespace degpv

#ifndef DEGPV_RATMAT_HPP
#define DEGPV_RATMAT_HPP

#include <array>
#include <utility>

#include "degpv/poly.hpp"

namespace degpv {

// Constant complex 2x2 matrix (row major).
struct Mat2 {
    std::array<Cx, 4> m{Cx(0.0), Cx(0.0), Cx(0.0), Cx(0.0)};

    Mat2() = default;
    Mat2(Cx a, Cx b, Cx c, Cx d) : m{a, b, c, d} {}

    static Mat2 identity() { return Mat2(1.0, 0.0, 0.0, 1.0); }

    Cx& operator()(int i, int j) { return m[2 * i + j]; }
    Cx operator()(int i, int j) const { return m[2 * i + j]; }

    Cx trace() const { return m[0] + m[3]; }
    Cx det() const { return m[0] * m[3] - m[1] * m[2]; }
    double max_abs() const;

    // eigenvalues (tr +- sqrt(tr^2 - 4 det))/2
    std::pair<Cx, Cx> eigenvalues() const;
};

Mat2 operator+(const Mat2& a, const Mat2& b);
Mat2 operator-(const Mat2& a, const Mat2& b);
Mat2 operator*(const Mat2& a, const Mat2& b);
Mat2 operator*(Cx s, const Mat2& a);
Mat2 inverse(const Mat2& a);

// 2x2 matrix of rational functions in z: a 2x2 array of polynomial numerators
// over one shared denominator. Canonical form has a monic denominator.
class RatMat2 {
public:
    RatMat2();  // zero matrix over denominator 1
    RatMat2(std::array<PolyZ, 4> num, PolyZ den);

    static RatMat2 identity();
    static RatMat2 from_poly(std::array<PolyZ, 4> entries);
    static RatMat2 from_const(const Mat2& m);

    const PolyZ& num(int i, int j) const { return num_[2 * i + j]; }
    const PolyZ& den() const { return den_; }

    RatMat2& canonicalize();

    // numerator of the trace over den()
    PolyZ trace_num() const;
    double max_abs_num_coeff() const;
    bool den_is_one() const;

    // pointwise value at z (z must not be a zero of the denominator)
    Mat2 eval(Cx z) const;

    friend RatMat2 operator+(const RatMat2& a, const RatMat2& b);
    friend RatMat2 operator-(const RatMat2& a, const RatMat2& b);
    friend RatMat2 operator*(Cx s, const RatMat2& a);
    friend RatMat2 matmul(const RatMat2& a, const RatMat2& b);

private:
    std::array<PolyZ, 4> num_;
    PolyZ den_;
};

// ab - ba; the trace of the result vanishes identically.
RatMat2 commutator(const RatMat2& a, const RatMat2& b);

// Entrywise residue of m at a pole of multiplicity <= 1 (after cancellation).
// Throws HigherOrderPole if some entry keeps a pole of order >= 2.
Mat2 residue_at(const RatMat2& m, Cx pole);

} // namespace degpv

#endif

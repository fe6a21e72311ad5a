#ifndef DEGPV_POLY_HPP
#define DEGPV_POLY_HPP

#include <complex>
#include <initializer_list>
#include <vector>

namespace degpv {

using Cx = std::complex<double>;

// Univariate polynomial in z with complex coefficients, lowest degree first.
// Canonical form strips trailing coefficients smaller than 1e-13 times the
// largest coefficient magnitude; the zero polynomial has an empty list.
class PolyZ {
public:
    PolyZ() = default;
    explicit PolyZ(std::vector<Cx> coeffs);
    PolyZ(std::initializer_list<Cx> coeffs);

    static PolyZ constant(Cx c);
    // c0 + c1 z + c2 z^2 + ...
    static PolyZ zero() { return PolyZ(); }

    const std::vector<Cx>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1 by convention
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Cx coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Cx(0.0); }
    double max_abs_coeff() const;

    PolyZ& canonicalize();

    friend PolyZ operator+(const PolyZ& a, const PolyZ& b);
    friend PolyZ operator-(const PolyZ& a, const PolyZ& b);
    friend PolyZ operator*(const PolyZ& a, const PolyZ& b);
    friend PolyZ operator*(Cx s, const PolyZ& p);
    friend PolyZ operator-(const PolyZ& p);
    friend bool operator==(const PolyZ& a, const PolyZ& b);

    PolyZ derivative() const;

    static constexpr double kStripTol = 1e-13;

private:
    std::vector<Cx> c_;
};

// Horner evaluation of p at z.
Cx poly_eval(const PolyZ& p, Cx z);

// p shifted by z^k (multiplication by z^k).
PolyZ shift_up(const PolyZ& p, int k);

// Synthetic division by (z - root): returns quotient, sets remainder = p(root).
PolyZ deflate(const PolyZ& p, Cx root, Cx* remainder = nullptr);

} // namespace degpv

#endif

#include "degpv/poly.hpp"

#include <algorithm>
#include <cmath>

namespace degpv {

PolyZ::PolyZ(std::vector<Cx> coeffs) : c_(std::move(coeffs)) { canonicalize(); }

PolyZ::PolyZ(std::initializer_list<Cx> coeffs) : c_(coeffs) { canonicalize(); }

PolyZ PolyZ::constant(Cx c) { return PolyZ({c}); }

double PolyZ::max_abs_coeff() const {
    double m = 0.0;
    for (const Cx& v : c_) m = std::max(m, std::abs(v));
    return m;
}

PolyZ& PolyZ::canonicalize() {
    const double m = max_abs_coeff();
    if (m == 0.0) {
        c_.clear();
        return *this;
    }
    const double tol = kStripTol * m;
    while (!c_.empty() && std::abs(c_.back()) <= tol) c_.pop_back();
    return *this;
}

PolyZ operator+(const PolyZ& a, const PolyZ& b) {
    std::vector<Cx> r(std::max(a.c_.size(), b.c_.size()), Cx(0.0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return PolyZ(std::move(r));
}

PolyZ operator-(const PolyZ& a, const PolyZ& b) {
    std::vector<Cx> r(std::max(a.c_.size(), b.c_.size()), Cx(0.0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return PolyZ(std::move(r));
}

PolyZ operator*(const PolyZ& a, const PolyZ& b) {
    if (a.is_zero() || b.is_zero()) return PolyZ();
    std::vector<Cx> r(a.c_.size() + b.c_.size() - 1, Cx(0.0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r[i + j] += a.c_[i] * b.c_[j];
    return PolyZ(std::move(r));
}

PolyZ operator*(Cx s, const PolyZ& p) {
    std::vector<Cx> r(p.c_);
    for (Cx& v : r) v *= s;
    return PolyZ(std::move(r));
}

PolyZ operator-(const PolyZ& p) { return Cx(-1.0) * p; }

bool operator==(const PolyZ& a, const PolyZ& b) { return a.c_ == b.c_; }

PolyZ PolyZ::derivative() const {
    if (c_.size() <= 1) return PolyZ();
    std::vector<Cx> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = double(i) * c_[i];
    return PolyZ(std::move(r));
}

Cx poly_eval(const PolyZ& p, Cx z) {
    const auto& c = p.coeffs();
    Cx acc(0.0);
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return acc;
}

PolyZ shift_up(const PolyZ& p, int k) {
    if (p.is_zero()) return PolyZ();
    std::vector<Cx> r(p.coeffs().size() + static_cast<std::size_t>(k), Cx(0.0));
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) r[i + k] = p.coeffs()[i];
    return PolyZ(std::move(r));
}

PolyZ deflate(const PolyZ& p, Cx root, Cx* remainder) {
    const auto& c = p.coeffs();
    if (c.empty()) {
        if (remainder) *remainder = Cx(0.0);
        return PolyZ();
    }
    std::vector<Cx> q(c.size() > 1 ? c.size() - 1 : 0, Cx(0.0));
    Cx acc = c.back();
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        if (i < q.size()) q[i] = acc;
        acc = c[i] + root * acc;
    }
    if (remainder) *remainder = acc;
    return PolyZ(std::move(q));
}

} // namespace degpv

#include <doctest.h>

#include <random>

#include "degpv/errors.hpp"
#include "degpv/ratmat.hpp"
#include "testutil.hpp"

using namespace degpv;
using degpv::testutil::dist;

namespace {

RatMat2 random_ratmat(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    std::array<PolyZ, 4> n;
    for (auto& e : n) {
        std::vector<Cx> c(3);
        for (Cx& v : c) v = Cx(u(rng), u(rng));
        e = PolyZ(std::move(c));
    }
    return RatMat2(std::move(n), PolyZ({0.0, -1.0, 1.0}));  // over z(z-1)
}

const Mat2 H(1.0, 0.0, 0.0, -1.0);
const Mat2 E1(0.0, 1.0, 0.0, 0.0);
const Mat2 E2(0.0, 0.0, 1.0, 0.0);

} // namespace

TEST_CASE("matmul identity and inverse laws") {
    std::mt19937_64 rng(7);
    const RatMat2 m = random_ratmat(rng);
    const RatMat2 im = matmul(RatMat2::identity(), m);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK((im.num(i, j) - m.num(i, j)).max_abs_coeff() < 1e-13);

    const Mat2 c(2.0, 1.0, 1.0, 1.0);  // det 1
    const RatMat2 prod = matmul(RatMat2::from_const(c), RatMat2::from_const(inverse(c)));
    CHECK((prod - RatMat2::identity()).max_abs_num_coeff() < 1e-14);
}

TEST_CASE("matmul hand value: [[0,z],[1,0]]^2 = z I") {
    const RatMat2 m = RatMat2::from_poly({PolyZ(), PolyZ({0.0, 1.0}), PolyZ({1.0}), PolyZ()});
    const RatMat2 sq = matmul(m, m);
    CHECK(sq.num(0, 0) == PolyZ({0.0, 1.0}));
    CHECK(sq.num(1, 1) == PolyZ({0.0, 1.0}));
    CHECK(sq.num(0, 1).is_zero());
    CHECK(sq.num(1, 0).is_zero());
}

TEST_CASE("matmul agrees with pointwise evaluation") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    const RatMat2 a = random_ratmat(rng), b = random_ratmat(rng);
    const RatMat2 ab = matmul(a, b);
    int done = 0;
    while (done < 20) {
        const Cx z(u(rng), u(rng));
        if (std::abs(z) < 0.2 || std::abs(z - Cx(1.0)) < 0.2) continue;
        const Mat2 lhs = ab.eval(z), rhs = a.eval(z) * b.eval(z);
        CHECK((lhs - rhs).max_abs() < 1e-10);
        ++done;
    }
}

TEST_CASE("commutator") {
    std::mt19937_64 rng(3);
    const RatMat2 m = random_ratmat(rng);
    CHECK(commutator(m, m).max_abs_num_coeff() < 1e-13);

    // [H,E1] = 2E1, [E1,E2] = H
    const RatMat2 rH = RatMat2::from_const(H), rE1 = RatMat2::from_const(E1),
                  rE2 = RatMat2::from_const(E2);
    CHECK((commutator(rH, rE1) - Cx(2.0) * rE1).max_abs_num_coeff() == 0.0);
    CHECK((commutator(rE1, rE2) - rH).max_abs_num_coeff() == 0.0);
    CHECK((commutator(rH, rE2) - Cx(-2.0) * rE2).max_abs_num_coeff() == 0.0);

    // trace of a commutator is the zero rational function
    const RatMat2 n = random_ratmat(rng);
    CHECK(commutator(m, n).trace_num().max_abs_coeff() < 1e-13);
}

TEST_CASE("canonicalization is idempotent and makes the denominator monic") {
    RatMat2 m({PolyZ({2.0}), PolyZ(), PolyZ(), PolyZ({2.0})}, PolyZ({0.0, 2.0}));
    CHECK(m.den() == PolyZ({0.0, 1.0}));
    CHECK(dist(m.num(0, 0).coeff(0), Cx(1.0)) == 0.0);
    RatMat2 again = m;
    again.canonicalize();
    CHECK((again - m).max_abs_num_coeff() == 0.0);
}

TEST_CASE("residue_at") {
    // [[1/(z(z-1)), 0],[0,0]] at 0: partial fractions give -1/z + 1/(z-1)
    const RatMat2 m({PolyZ({1.0}), PolyZ(), PolyZ(), PolyZ()}, PolyZ({0.0, -1.0, 1.0}));
    const Mat2 r0 = residue_at(m, Cx(0.0));
    CHECK(dist(r0(0, 0), Cx(-1.0)) < 1e-14);
    CHECK(r0(0, 1) == Cx(0.0));

    // no pole at 2
    CHECK(residue_at(m, Cx(2.0)).max_abs() == 0.0);

    // [[z/(z-1),0],[0,0]] at 1: numerator value at the pole
    const RatMat2 m2({PolyZ({0.0, 1.0}), PolyZ(), PolyZ(), PolyZ()}, PolyZ({-1.0, 1.0}));
    CHECK(dist(residue_at(m2, Cx(1.0))(0, 0), Cx(1.0)) < 1e-14);

    // double pole raises
    const RatMat2 bad({PolyZ({1.0}), PolyZ(), PolyZ(), PolyZ()}, PolyZ({0.0, 0.0, 1.0}));
    CHECK_THROWS_AS(residue_at(bad, Cx(0.0)), HigherOrderPole);

    // cancellation: z/z^2 has a simple pole
    const RatMat2 ok({PolyZ({0.0, 1.0}), PolyZ(), PolyZ(), PolyZ()}, PolyZ({0.0, 0.0, 1.0}));
    CHECK(dist(residue_at(ok, Cx(0.0))(0, 0), Cx(1.0)) < 1e-14);
}

TEST_CASE("eigenvalues of a 2x2") {
    const Mat2 m(0.0, 4.0, 1.0, 0.0);
    const auto [l1, l2] = m.eigenvalues();
    CHECK(dist(l1, Cx(2.0)) < 1e-14);
    CHECK(dist(l2, Cx(-2.0)) < 1e-14);
}

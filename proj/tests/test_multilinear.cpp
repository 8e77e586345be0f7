#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "holderlie/multilinear.hpp"

using namespace holderlie;

TEST_CASE("identity matrix has operator norm 1") {
    SymMultilinearMap t(1, 2, 2);
    t.coeff({0}, 0) = 1.0;
    t.coeff({1}, 1) = 1.0;
    auto b = multilinear_op_norm(t);
    CHECK(b.lower == doctest::Approx(1.0));
    CHECK(b.upper >= 1.0 - 1e-12);
}

TEST_CASE("rank-one bilinear form attains Cauchy-Schwarz equality") {
    Vec a(2);
    a << 2.0, 0.0;  // ||a|| = 2
    Vec f(1);
    f << 1.0;
    auto t = SymMultilinearMap::rank_one(a, f, 2);  // T(u,v) = <a,u><a,v>
    auto b = multilinear_op_norm(t);
    CHECK(b.lower == doctest::Approx(4.0));
    CHECK(b.upper >= 4.0 - 1e-10);
}

TEST_CASE("zero tensor has zero bracket") {
    auto t = SymMultilinearMap::zero(2, 3, 2);
    auto b = multilinear_op_norm(t);
    CHECK(b.lower == 0.0);
    CHECK(b.upper == 0.0);
}

TEST_CASE("symmetrized tensors are symmetric and permutation invariant") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> raw(3 * 3 * 3 * 2);
    for (auto& c : raw) c = u(rng);
    auto t = SymMultilinearMap::symmetrized(3, 3, 2, raw);
    CHECK(t.is_symmetric());
    Vec v1(3), v2(3), v3(3);
    v1 << 0.3, -0.2, 0.9;
    v2 << -1.0, 0.4, 0.1;
    v3 << 0.5, 0.5, -0.7;
    Vec e123 = t.eval({v1, v2, v3});
    CHECK(e123.isApprox(t.eval({v3, v1, v2}), 1e-12));
    CHECK(e123.isApprox(t.eval({v2, v3, v1}), 1e-12));
}

TEST_CASE("evaluation is multilinear in each slot") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> raw(2 * 2 * 3);
    for (auto& c : raw) c = u(rng);
    auto t = SymMultilinearMap::symmetrized(2, 2, 3, raw);
    Vec a(2), b(2), w(2);
    a << 1.0, -0.5;
    b << 0.2, 0.8;
    w << -0.3, 0.6;
    Vec lhs = t.eval({2.0 * a + 3.0 * b, w});
    Vec rhs = 2.0 * t.eval({a, w}) + 3.0 * t.eval({b, w});
    CHECK(lhs.isApprox(rhs, 1e-12));
}

TEST_CASE("diagonal evaluation matches full contraction") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> raw(2 * 2 * 2 * 1);
    for (auto& c : raw) c = u(rng);
    auto t = SymMultilinearMap::symmetrized(3, 2, 1, raw);
    Vec x(2);
    x << 0.4, -0.9;
    CHECK(t.eval_diag(x).isApprox(t.eval({x, x, x}), 1e-12));
    auto contracted = t.contract(x, 3);
    CHECK(contracted.order() == 0);
    Vec cv(1);
    cv << contracted.data()[0];
    CHECK(cv.isApprox(t.eval_diag(x), 1e-12));
}

TEST_CASE("lower bound converges to the spectral norm for matrices") {
    // 3x3 matrix with known largest singular value
    SymMultilinearMap t(1, 3, 3);
    t.coeff({0}, 0) = 3.0;
    t.coeff({1}, 1) = -2.0;
    t.coeff({2}, 2) = 0.5;
    auto b = multilinear_op_norm(t);
    CHECK(b.lower == doctest::Approx(3.0));
    CHECK(b.upper >= 3.0 - 1e-12);
}

TEST_CASE("upper bound dominates the lower bound") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int order = 0; order <= 3; ++order) {
        std::size_t count = 2;
        for (int i = 0; i < order; ++i) count *= 3;
        std::vector<double> raw(count);
        for (auto& c : raw) c = u(rng);
        auto t = SymMultilinearMap::symmetrized(order, 3, 2, raw);
        auto b = multilinear_op_norm(t);
        CHECK(b.lower <= b.upper + 1e-12);
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "holderlie/lie.hpp"

using namespace holderlie;

TEST_CASE("matrix exponential basics") {
    CHECK((matrix_exp(Mat::Zero(3, 3)) - Mat::Identity(3, 3)).norm() ==
          doctest::Approx(0.0));
    Mat d = Mat::Zero(2, 2);
    d(0, 0) = 0.3;
    d(1, 1) = -0.7;
    Mat e = matrix_exp(d);
    CHECK(e(0, 0) == doctest::Approx(std::exp(0.3)).epsilon(1e-13));
    CHECK(e(1, 1) == doctest::Approx(std::exp(-0.7)).epsilon(1e-13));
    CHECK(e(0, 1) == doctest::Approx(0.0));
}

TEST_CASE("rotation generator exponentiates to the rotation matrix") {
    const double th = 0.1;
    Mat g = Mat::Zero(2, 2);
    g(0, 1) = -th;
    g(1, 0) = th;
    Mat r = matrix_exp(g);
    CHECK(std::abs(r(0, 0) - std::cos(th)) < 1e-12);
    CHECK(std::abs(r(0, 1) + std::sin(th)) < 1e-12);
    CHECK(std::abs(r(1, 0) - std::sin(th)) < 1e-12);
    CHECK(std::abs(r(1, 1) - std::cos(th)) < 1e-12);
}

TEST_CASE("matrix logarithm inverts the exponential") {
    CHECK(matrix_log(Mat::Identity(3, 3)).norm() == doctest::Approx(0.0));
    std::mt19937_64 rng(59);
    auto alg = LieAlgebra::so3();
    for (int i = 0; i < 20; ++i) {
        Mat x = alg.random_element(rng, 0.2);
        CHECK((matrix_log(matrix_exp(x)) - x).norm() < 1e-12);
    }
    Mat far = 3.0 * Mat::Identity(2, 2);
    CHECK_THROWS_AS(matrix_log(far), LogDomain);
}

TEST_CASE("built-in algebras close under the bracket") {
    std::mt19937_64 rng(61);
    for (const auto& alg : {LieAlgebra::so3(), LieAlgebra::sl2(),
                            LieAlgebra::heisenberg()}) {
        // [basis_i, basis_j] must lie in the span of the basis
        for (const auto& a : alg.basis)
            for (const auto& b : alg.basis) {
                Mat br = alg.bracket(a, b);
                // project onto the basis (orthogonal for these algebras is not
                // guaranteed; use least squares against flattened basis)
                Eigen::MatrixXd bs(alg.matrix_dim * alg.matrix_dim, alg.basis.size());
                for (std::size_t c = 0; c < alg.basis.size(); ++c)
                    bs.col(c) = flatten(alg.basis[c]);
                Eigen::VectorXd rhs = flatten(br);
                Eigen::VectorXd sol = bs.colPivHouseholderQr().solve(rhs);
                CHECK((bs * sol - rhs).norm() < 1e-12);
            }
        Mat x = alg.random_element(rng, 0.5);
        CHECK(x.norm() == doctest::Approx(0.5));
    }
}

TEST_CASE("bch degenerate cases") {
    BCHConfig cfg;
    auto so3 = LieAlgebra::so3();
    std::mt19937_64 rng(67);
    Mat x = so3.random_element(rng, 0.2);
    Mat y = so3.random_element(rng, 0.2);
    CHECK((bch_truncated(x, Mat::Zero(3, 3), so3, cfg) - x).norm() < 1e-14);
    CHECK((bch_truncated(Mat::Zero(3, 3), y, so3, cfg) - y).norm() < 1e-14);
    // commuting elements: x and 2x
    CHECK((bch_truncated(x, 2.0 * x, so3, cfg) - 3.0 * x).norm() < 1e-13);
}

TEST_CASE("degree-2 truncation is x + y + half the bracket") {
    BCHConfig cfg;
    cfg.truncation_order = 2;
    auto so3 = LieAlgebra::so3();
    std::mt19937_64 rng(71);
    Mat x = so3.random_element(rng, 0.1);
    Mat y = so3.random_element(rng, 0.1);
    Mat expect = x + y + 0.5 * so3.bracket(x, y);
    CHECK((bch_truncated(x, y, so3, cfg) - expect).norm() < 1e-14);
    // cross-check against the exponential product to third order
    const double eps = (matrix_exp(x) * matrix_exp(y) - matrix_exp(expect)).norm();
    const double scale = std::pow(x.norm() + y.norm(), 3);
    CHECK(eps < 5.0 * scale);
}

TEST_CASE("bch refuses inputs outside the convergence domain") {
    BCHConfig cfg;
    auto so3 = LieAlgebra::so3();
    std::mt19937_64 rng(73);
    Mat x = so3.random_element(rng, 0.4);
    Mat y = so3.random_element(rng, 0.4);  // 0.8 > log 2
    CHECK_THROWS_AS(bch_truncated(x, y, so3, cfg), OutsideConvergenceDomain);
}

TEST_CASE("compatible rescaling") {
    auto so3 = LieAlgebra::so3();
    auto r = rescale_compatible(so3, 2.0);
    CHECK(r.scale == doctest::Approx(4.0));
    std::mt19937_64 rng(79);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        Mat x = so3.random_element(rng, u(rng));
        Mat y = so3.random_element(rng, u(rng));
        CHECK(r.norm(r.bracket(x, y)) <= r.norm(x) * r.norm(y) / 2.0 + 1e-12);
    }
    // abelian: any constant works, the same scale is still returned
    auto ab = rescale_compatible(LieAlgebra::abelian(2), 5.0);
    CHECK(ab.scale == doctest::Approx(10.0));
}

TEST_CASE("group words evaluate as ordered exponential products") {
    auto so3 = LieAlgebra::so3();
    const Vec x0 = Vec::Zero(2);

    // gamma = 0: identity everywhere
    auto zero = constant_jet(Vec::Zero(9), 2);
    auto wz = exp_map(zero, 3);
    CHECK((evaluate(wz, x0) - Mat::Identity(3, 3)).norm() < 1e-14);

    // constant gamma: constant group element exp(c)
    std::mt19937_64 rng(83);
    Mat c = so3.random_element(rng, 0.3);
    auto wc = exp_map(constant_jet(flatten(c), 2), 3);
    CHECK((evaluate(wc, x0) - matrix_exp(c)).norm() < 1e-13);

    // word times inverse is the identity
    Mat c2 = so3.random_element(rng, 0.2);
    auto w2 = group_mul(wc, exp_map(constant_jet(flatten(c2), 2), 3));
    auto prod = group_mul(w2, group_inv(w2));
    CHECK((evaluate(prod, x0) - Mat::Identity(3, 3)).norm() < 1e-13);

    // empty word is the identity of the word monoid
    GroupElementWord empty;
    empty.matrix_dim = 3;
    CHECK((evaluate(empty, x0) - Mat::Identity(3, 3)).norm() == doctest::Approx(0.0));
    CHECK(group_mul(empty, wc).factors.size() == wc.factors.size());

    // mismatched shapes are rejected
    CHECK_THROWS_AS(exp_map(constant_jet(Vec::Zero(4), 2), 3), DimensionMismatch);
}

TEST_CASE("normal form of commuting factors is the sum") {
    auto so3 = LieAlgebra::so3();
    auto d = Domain::ball(Vec::Zero(2), 0.5);
    auto p = SamplePlan::grid(4);
    BCHConfig cfg;
    std::mt19937_64 rng(89);
    Mat c = so3.random_element(rng, 0.1);
    auto w1 = exp_map(constant_jet(flatten(c), 2), 3);
    auto w2 = exp_map(constant_jet(flatten(2.0 * c), 2), 3);
    auto nf = local_normal_form(group_mul(w1, w2), so3, {0, 0.5}, cfg, d, p);
    for (const auto& val : nf.values) CHECK((val - 3.0 * c).norm() < 1e-12);
    CHECK(nf.sup_part == doctest::Approx(so3.norm(3.0 * c)).epsilon(1e-10));
    CHECK(nf.seminorm_part == doctest::Approx(0.0));
}

TEST_CASE("chain norms of a constant are flat") {
    auto d = Domain::box(Vec::Zero(1), Vec::Ones(1));
    auto p = SamplePlan::grid(20);
    Vec c(1);
    c << 2.5;
    auto j = constant_jet(c, 1);
    auto norms = chain_norms(*j, 0, 0.25, 8, d, p);
    REQUIRE(norms.size() == 8);
    for (double n : norms) CHECK(n == doctest::Approx(2.5));
}

TEST_CASE("chain norms are nonincreasing for gamma(t) = t") {
    auto d = Domain::box(Vec::Zero(1), Vec::Ones(1));
    auto p = SamplePlan::grid(60);
    Polynomial lin;
    lin.parts.push_back(SymMultilinearMap::zero(0, 1, 1));
    SymMultilinearMap l(1, 1, 1);
    l.coeff({0}, 0) = 1.0;
    lin.parts.push_back(l);
    auto j = poly_jet(std::move(lin));
    auto norms = chain_norms(*j, 0, 0.0, 10, d, p);
    for (std::size_t n = 1; n < norms.size(); ++n) CHECK(norms[n] <= norms[n - 1] + 1e-14);
}

TEST_CASE("flatten and unflatten are inverse") {
    std::mt19937_64 rng(97);
    auto sl2 = LieAlgebra::sl2();
    Mat x = sl2.random_element(rng, 1.0);
    CHECK((unflatten(flatten(x), 2) - x).norm() == doctest::Approx(0.0));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "holderlie/corpus.hpp"
#include "holderlie/product.hpp"

using namespace holderlie;

namespace {
Vec v1(double a) {
    Vec v(1);
    v[0] = a;
    return v;
}

// Expand the product of two polynomials under a bilinear form into a
// Polynomial; serves as the oracle for the Leibniz jets.
Polynomial expand_product(const Polynomial& p1, const Polynomial& p2,
                          const BilinearForm& form) {
    const int n = p1.in_dim();
    const int deg = p1.degree() + p2.degree();
    Polynomial out;
    for (int j = 0; j <= deg; ++j) {
        std::size_t slots = 1;
        for (int i = 0; i < j; ++i) slots *= n;
        std::vector<double> raw(slots * form.out(), 0.0);
        for (int i = 0; i <= j; ++i) {
            if (i > p1.degree() || j - i > p2.degree()) continue;
            const auto& a = p1.parts[i];
            const auto& b = p2.parts[j - i];
            std::size_t na = 1, nb = 1;
            for (int q = 0; q < i; ++q) na *= n;
            for (int q = 0; q < j - i; ++q) nb *= n;
            for (std::size_t ia = 0; ia < na; ++ia)
                for (std::size_t ib = 0; ib < nb; ++ib)
                    for (int c = 0; c < form.out(); ++c) {
                        double acc = 0.0;
                        for (int za = 0; za < form.in1(); ++za)
                            for (int zb = 0; zb < form.in2(); ++zb)
                                acc += form.coeff(za, zb, c) *
                                       a.data()[ia * form.in1() + za] *
                                       b.data()[ib * form.in2() + zb];
                        raw[(ia * nb + ib) * form.out() + c] += acc;
                    }
        }
        out.parts.push_back(SymMultilinearMap::symmetrized(j, n, form.out(), raw));
    }
    return out;
}

}  // namespace

TEST_CASE("product of constants is the constant product") {
    auto form = BilinearForm::scalar_multiplication();
    auto j = pointwise_product(constant_jet(v1(3.0), 1), constant_jet(v1(-2.0), 1), form);
    CHECK(j->value(v1(0.2))[0] == doctest::Approx(-6.0));
    CHECK(j->derivative(v1(0.2), 1).eval_diag(v1(1.0)).norm() == doctest::Approx(0.0));
    CHECK(j->derivative(v1(0.2), 2).eval_diag(v1(1.0)).norm() == doctest::Approx(0.0));
}

TEST_CASE("derivative of t * t is 2t") {
    Polynomial lin;
    lin.parts.push_back(SymMultilinearMap::zero(0, 1, 1));
    SymMultilinearMap l(1, 1, 1);
    l.coeff({0}, 0) = 1.0;
    lin.parts.push_back(l);
    auto t = poly_jet(lin);
    auto j = pointwise_product(t, t, BilinearForm::scalar_multiplication());
    CHECK(j->derivative(v1(0.3), 1).eval_diag(v1(1.0))[0] == doctest::Approx(0.6));
    CHECK(j->derivative(v1(0.3), 2).eval_diag(v1(1.0))[0] == doctest::Approx(2.0));
}

TEST_CASE("Leibniz jets agree with the expanded polynomial") {
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> bc(2 * 2 * 2);
    for (auto& c : bc) c = u(rng);
    BilinearForm form(2, 2, 2, bc);
    for (int trial = 0; trial < 5; ++trial) {
        Polynomial p1 = random_polynomial(rng, 3, 2, 2);
        Polynomial p2 = random_polynomial(rng, 3, 2, 2);
        auto prod = pointwise_product(poly_jet(p1), poly_jet(p2), form);
        auto oracle = poly_jet(expand_product(p1, p2, form));
        Vec x(2);
        x << 0.2 * u(rng), 0.2 * u(rng);
        CHECK((prod->value(x) - oracle->value(x)).norm() < 1e-10);
        for (int r = 1; r <= 4; ++r) {
            auto da = prod->derivative(x, r);
            auto db = oracle->derivative(x, r);
            double err = 0.0;
            for (std::size_t i = 0; i < da.data().size(); ++i)
                err = std::max(err, std::abs(da.data()[i] - db.data()[i]));
            CHECK(err < 1e-10);
        }
    }
}

TEST_CASE("product constants follow the recursion") {
    auto d = Domain::ball(Vec::Zero(2), 0.5);
    CHECK(product_constant(0, d) == doctest::Approx(2.0));
    const double d0 = inclusion_constant_Dk(0, d);
    CHECK(product_constant(1, d) == doctest::Approx((2.0 * d0 + 2.0) * 2.0));
    auto table = product_constants(3, d);
    REQUIRE(table.product_ck.size() == 4);
    for (int k = 0; k < 3; ++k) {
        CHECK(table.product_ck[k + 1] > table.product_ck[k]);  // 2 D_k + 2 >= 4
        CHECK(table.product_ck[k + 1] ==
              doctest::Approx((2.0 * table.inclusion_dk[k] + 2.0) * table.product_ck[k]));
    }
}

TEST_CASE("constant factors satisfy the k = 0 inequality") {
    auto d = Domain::ball(v1(0.0), 0.5);
    auto p = SamplePlan::grid(10);
    auto form = BilinearForm::scalar_multiplication();
    auto v = product_inequality_check(constant_jet(v1(3.0), 1), constant_jet(v1(-2.0), 1),
                                      form, {0, 0.0}, d, p);
    CHECK(v.pass);
    CHECK(v.lhs == doctest::Approx(6.0));
    CHECK(v.rhs == doctest::Approx(2.0 * 3.0 * 2.0));
}

TEST_CASE("random polynomial pairs satisfy the product inequality") {
    auto d = Domain::ball(Vec::Zero(2), 0.5);
    auto p = SamplePlan::grid(5);
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> bc(2 * 2 * 2);
    for (auto& c : bc) c = u(rng);
    BilinearForm form(2, 2, 2, bc);
    for (int trial = 0; trial < 10; ++trial) {
        auto g1 = poly_jet(random_polynomial(rng, 3, 2, 2));
        auto g2 = poly_jet(random_polynomial(rng, 3, 2, 2));
        for (int k : {0, 1, 2})
            for (double s : {0.0, 0.5, 1.0})
                CHECK(product_inequality_check(g1, g2, form, {k, s}, d, p).pass);
    }
}

TEST_CASE("commutator form is antisymmetric") {
    auto form = BilinearForm::commutator(2);
    Vec a(4), b(4);
    a << 1.0, 2.0, 3.0, 4.0;
    b << 0.5, -1.0, 2.0, 0.0;
    Vec ab = form.apply(a, b);
    Vec ba = form.apply(b, a);
    CHECK((ab + ba).norm() == doctest::Approx(0.0));
    Vec aa = form.apply(a, a);
    CHECK(aa.norm() == doctest::Approx(0.0));
}

TEST_CASE("bilinear form dimension checks") {
    auto form = BilinearForm::scalar_multiplication();
    Vec bad(2);
    bad << 1.0, 2.0;
    CHECK_THROWS_AS(form.apply(bad, v1(1.0)), DimensionMismatch);
    CHECK_THROWS_AS(BilinearForm(2, 2, 2, std::vector<double>(3, 0.0)), SizeMismatch);
}

#include "holderlie/product.hpp"

#include <cmath>
#include <random>

namespace holderlie {

BilinearForm::BilinearForm(int m1, int m2, int m, std::vector<double> coeffs)
    : m1_(m1), m2_(m2), m_(m), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != static_cast<std::size_t>(m1) * m2 * m)
        throw SizeMismatch("BilinearForm: coefficient count mismatch");
}

BilinearForm BilinearForm::scalar_multiplication() {
    return BilinearForm(1, 1, 1, {1.0});
}

BilinearForm BilinearForm::commutator(int d) {
    const int m = d * d;
    std::vector<double> coeffs(static_cast<std::size_t>(m) * m * m, 0.0);
    auto at = [&](int a, int b, int c) -> double& {
        return coeffs[(static_cast<std::size_t>(a) * m + b) * m + c];
    };
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                const int c = i * d + j;
                at(i * d + k, k * d + j, c) += 1.0;  // (xy)_{ij}
                at(k * d + j, i * d + k, c) -= 1.0;  // (yx)_{ij}
            }
    return BilinearForm(m, m, m, std::move(coeffs));
}

Vec BilinearForm::apply(const Vec& z1, const Vec& z2) const {
    if (z1.size() != m1_ || z2.size() != m2_)
        throw DimensionMismatch("BilinearForm::apply: input dimensions");
    Vec out = Vec::Zero(m_);
    for (int a = 0; a < m1_; ++a) {
        if (z1[a] == 0.0) continue;
        for (int b = 0; b < m2_; ++b) {
            const double w = z1[a] * z2[b];
            if (w == 0.0) continue;
            for (int c = 0; c < m_; ++c) out[c] += w * coeff(a, b, c);
        }
    }
    return out;
}

OpNormBracket BilinearForm::op_norm_bracket() const {
    OpNormBracket br;
    Vec rowsum = Vec::Zero(m_);
    for (int a = 0; a < m1_; ++a)
        for (int b = 0; b < m2_; ++b)
            for (int c = 0; c < m_; ++c) rowsum[c] += std::abs(coeff(a, b, c));
    br.upper = rowsum.norm();

    // probe + alternating refinement; every probe is a valid lower bound
    std::mt19937_64 rng(0x42);
    std::normal_distribution<double> g(0.0, 1.0);
    auto random_unit = [&](int dim) {
        Vec v(dim);
        for (int i = 0; i < dim; ++i) v[i] = g(rng);
        double nv = v.norm();
        return nv > 1e-12 ? Vec(v / nv) : Vec(Vec::Unit(dim, 0));
    };
    double best = 0.0;
    for (int trial = 0; trial < 16; ++trial) {
        Vec z1 = trial < m1_ ? Vec(Vec::Unit(m1_, trial)) : random_unit(m1_);
        Vec z2 = random_unit(m2_);
        for (int it = 0; it < 8; ++it) {
            // fixed z1: z2 -> B(z1, z2) is linear; take its top right-singular dir
            Eigen::MatrixXd mat(m_, m2_);
            for (int b = 0; b < m2_; ++b)
                mat.col(b) = apply(z1, Vec(Vec::Unit(m2_, b)));
            Eigen::JacobiSVD<Eigen::MatrixXd> svd(mat, Eigen::ComputeThinV);
            z2 = svd.matrixV().col(0);
            Eigen::MatrixXd mat1(m_, m1_);
            for (int a = 0; a < m1_; ++a)
                mat1.col(a) = apply(Vec(Vec::Unit(m1_, a)), z2);
            Eigen::JacobiSVD<Eigen::MatrixXd> svd1(mat1, Eigen::ComputeThinV);
            z1 = svd1.matrixV().col(0);
        }
        best = std::max(best, apply(z1, z2).norm());
    }
    br.lower = best;
    br.upper = std::max(br.upper, br.lower);
    return br;
}

namespace {

double binomial(int n, int k) {
    double b = 1.0;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

class ProductJet final : public JetFunction {
public:
    ProductJet(JetPtr g1, JetPtr g2, BilinearForm form)
        : g1_(std::move(g1)), g2_(std::move(g2)), form_(std::move(form)) {
        if (g1_->in_dim() != g2_->in_dim())
            throw DimensionMismatch("pointwise_product: input dimensions");
        if (g1_->out_dim() != form_.in1() || g2_->out_dim() != form_.in2())
            throw DimensionMismatch("pointwise_product: codomain vs bilinear form");
        n_ = g1_->in_dim();
        order_ = std::min(g1_->max_order(), g2_->max_order());
    }
    int in_dim() const override { return n_; }
    int out_dim() const override { return form_.out(); }
    int max_order() const override { return order_; }
    Vec value(const Vec& x) const override {
        return form_.apply(g1_->value(x), g2_->value(x));
    }
    SymMultilinearMap derivative(const Vec& x, int r) const override {
        check_order(r);
        if (r == 0) return SymMultilinearMap::constant(value(x));
        const int m = form_.out();
        std::vector<double> raw(static_cast<std::size_t>(std::pow(n_, r)) * m, 0.0);
        for (int i = 0; i <= r; ++i) {
            const SymMultilinearMap a = g1_->derivative(x, i);
            const SymMultilinearMap b = g2_->derivative(x, r - i);
            const double w = binomial(r, i);
            // first i slots feed gamma1^(i), the rest feed gamma2^(r-i)
            const std::size_t na = static_cast<std::size_t>(std::pow(n_, i));
            const std::size_t nb = static_cast<std::size_t>(std::pow(n_, r - i));
            for (std::size_t ia = 0; ia < na; ++ia)
                for (std::size_t ib = 0; ib < nb; ++ib) {
                    const std::size_t slot = ia * nb + ib;
                    for (int ca = 0; ca < form_.in1(); ++ca) {
                        const double va = a.data()[ia * form_.in1() + ca];
                        if (va == 0.0) continue;
                        for (int cb = 0; cb < form_.in2(); ++cb) {
                            const double vb = b.data()[ib * form_.in2() + cb];
                            if (vb == 0.0) continue;
                            for (int c = 0; c < m; ++c)
                                raw[slot * m + c] += w * va * vb * form_.coeff(ca, cb, c);
                        }
                    }
                }
        }
        return SymMultilinearMap::symmetrized(r, n_, m, raw);
    }

private:
    JetPtr g1_, g2_;
    BilinearForm form_;
    int n_, order_;
};

}  // namespace

JetPtr pointwise_product(JetPtr g1, JetPtr g2, BilinearForm form) {
    return std::make_shared<ProductJet>(std::move(g1), std::move(g2), std::move(form));
}

double product_constant(int k, const Domain& d) {
    double ck = 2.0;
    for (int i = 0; i < k; ++i) ck *= 2.0 * inclusion_constant_Dk(i, d) + 2.0;
    return ck;
}

ProductConstants product_constants(int kmax, const Domain& d) {
    ProductConstants pc;
    pc.product_ck.push_back(2.0);
    for (int k = 0; k < kmax; ++k) {
        pc.inclusion_dk.push_back(inclusion_constant_Dk(k, d));
        pc.product_ck.push_back((2.0 * pc.inclusion_dk[k] + 2.0) * pc.product_ck[k]);
    }
    return pc;
}

InequalityVerdict product_inequality_check(JetPtr g1, JetPtr g2, const BilinearForm& form,
                                           HolderIndex idx, const Domain& d,
                                           const SamplePlan& p, double tol) {
    if (d.diameter() > 1.0 + 1e-15)
        throw DiameterExceeded("product_inequality_check: diam > 1");
    InequalityVerdict v;
    JetPtr prod = pointwise_product(g1, g2, form);
    v.lhs = holder_norm_estimate(*prod, idx, d, p).total;
    const double n1 = holder_norm_estimate(*g1, idx, d, p).total;
    const double n2 = holder_norm_estimate(*g2, idx, d, p).total;
    v.rhs = product_constant(idx.k, d) * form.op_norm_bracket().upper * n1 * n2;
    v.pass = v.lhs <= v.rhs * (1.0 + tol);
    return v;
}

}  // namespace holderlie

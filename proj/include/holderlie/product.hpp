#pragma once

#include "holderlie/norms.hpp"

namespace holderlie {

/// Continuous bilinear map R^{m1} x R^{m2} -> R^m given by a coefficient
/// tensor B[a][b][c], (z1 * z2)_c = sum_{a,b} B[a][b][c] z1_a z2_b.
class BilinearForm {
public:
    BilinearForm(int m1, int m2, int m, std::vector<double> coeffs);
    /// Scalar multiplication R x R -> R.
    static BilinearForm scalar_multiplication();
    /// Matrix commutator on flattened d x d matrices.
    static BilinearForm commutator(int d);

    int in1() const { return m1_; }
    int in2() const { return m2_; }
    int out() const { return m_; }

    Vec apply(const Vec& z1, const Vec& z2) const;
    OpNormBracket op_norm_bracket() const;

    double coeff(int a, int b, int c) const { return coeffs_[(a * m2_ + b) * m_ + c]; }

private:
    int m1_, m2_, m_;
    std::vector<double> coeffs_;
};

struct ProductConstants {
    std::vector<double> inclusion_dk;   // D_0..D_{kmax-1}
    std::vector<double> product_ck;     // C_0..C_kmax
};

/// Pointwise product with Leibniz jets; max_order is the minimum of the
/// factors'.
JetPtr pointwise_product(JetPtr g1, JetPtr g2, BilinearForm form);

/// C_0 = 2, C_{k+1} = (2 D_k + 2) C_k with D_k from inclusion_constant_Dk.
double product_constant(int k, const Domain& d);
ProductConstants product_constants(int kmax, const Domain& d);

struct InequalityVerdict {
    double lhs = 0.0;
    double rhs = 0.0;
    bool pass = false;
    double margin() const { return rhs - lhs; }
};

/// ||g1 * g2||_{(k,s)} <= C_k ||*||_op ||g1||_{(k,s)} ||g2||_{(k,s)}, with
/// the upper op-norm bracket on the right so a pass is sound.
InequalityVerdict product_inequality_check(JetPtr g1, JetPtr g2, const BilinearForm& form,
                                           HolderIndex idx, const Domain& d,
                                           const SamplePlan& p, double tol = 1e-9);

}  // namespace holderlie

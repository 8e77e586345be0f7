#pragma once

#include <Eigen/Dense>
#include <random>
#include <string>
#include <vector>

#include "holderlie/norms.hpp"

namespace holderlie {

using Mat = Eigen::MatrixXd;

/// Matrix Lie algebra with commutator bracket and a rescaled Frobenius norm
/// ||x|| = scale * ||x||_F.
struct LieAlgebra {
    std::string name;
    int matrix_dim = 0;
    std::vector<Mat> basis;
    double scale = 1.0;

    static LieAlgebra so3();
    static LieAlgebra sl2();
    static LieAlgebra heisenberg();
    static LieAlgebra abelian(int d);

    Mat bracket(const Mat& x, const Mat& y) const { return x * y - y * x; }
    double norm(const Mat& x) const { return scale * x.norm(); }
    Mat random_element(std::mt19937_64& rng, double frobenius_norm) const;
};

/// Rescale so that ||[x,y]|| <= (1/C_k) ||x|| ||y||. The Frobenius norm is
/// submultiplicative, so ||xy - yx||_F <= 2 ||x||_F ||y||_F and scale = 2 C_k
/// suffices.
LieAlgebra rescale_compatible(const LieAlgebra& alg, double ck);

struct BCHConfig {
    int truncation_order = 8;
    double domain_margin = 0.999;  // accept ||x|| + ||y|| <= margin * log 2
};

/// Truncated Baker-Campbell-Hausdorff sum through total degree
/// truncation_order, built from iterated commutators (Dynkin expansion,
/// term table cached per order).
Mat bch_truncated(const Mat& x, const Mat& y, const LieAlgebra& alg,
                  const BCHConfig& cfg);

/// Scaling-and-squaring exponential with truncated series.
Mat matrix_exp(const Mat& x, double tol = 1e-14);
/// Principal logarithm by inverse scaling; requires ||g - I||_F < 1.
Mat matrix_log(const Mat& g, double tol = 1e-14);

/// Finite word of exponentials of algebra-valued functions; evaluation at x
/// is the ordered product of exp(sign_i * gamma_i(x)). The empty word is the
/// identity. gamma_i maps into flattened d x d matrices (row-major).
struct GroupElementWord {
    struct Factor {
        int sign = +1;
        JetPtr gamma;
    };
    std::vector<Factor> factors;
    int matrix_dim = 0;
};

GroupElementWord exp_map(JetPtr gamma, int matrix_dim);
GroupElementWord group_mul(const GroupElementWord& w1, const GroupElementWord& w2);
GroupElementWord group_inv(const GroupElementWord& w);
Mat evaluate(const GroupElementWord& w, const Vec& x, double tol = 1e-14);

Mat unflatten(const Vec& v, int d);
Vec flatten(const Mat& m);

struct LocalNormalForm {
    std::vector<Vec> points;
    std::vector<Mat> values;  // gamma_tilde(x) = log(evaluate(w, x))
    double sup_part = 0.0;       // sup of the algebra norm of gamma_tilde
    double seminorm_part = 0.0;  // (0, s) seminorm estimate
    double total = 0.0;
};

/// Pointwise collapse of a word into a single algebra-valued function via the
/// matrix logarithm, with its sampled (0, s) norm estimate.
LocalNormalForm local_normal_form(const GroupElementWord& w, const LieAlgebra& alg,
                                  HolderIndex idx, const BCHConfig& cfg,
                                  const Domain& d, const SamplePlan& p);

/// ||gamma||_{(k, t_n)} estimates along the cofinal chain t_n = s + (1-s)/n,
/// n = 1..N, on shared samples; nonincreasing in n since diam <= 1.
std::vector<double> chain_norms(const JetFunction& gamma, int k, double s, int N,
                                const Domain& d, const SamplePlan& p);

}  // namespace holderlie

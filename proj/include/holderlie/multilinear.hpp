#pragma once

#include <Eigen/Dense>
#include <vector>

#include "holderlie/errors.hpp"

namespace holderlie {

using Vec = Eigen::VectorXd;

struct OpNormBracket {
    double lower = 0.0;
    double upper = 0.0;
};

/// Symmetric j-linear map R^n x ... x R^n -> R^m, stored as a dense
/// coefficient tensor of shape n^j x m (order 0 is a vector in R^m).
/// Index layout: ((i1*n + i2)*n + ...)*m + c.
class SymMultilinearMap {
public:
    SymMultilinearMap(int order, int in_dim, int out_dim);
    static SymMultilinearMap zero(int order, int in_dim, int out_dim);
    static SymMultilinearMap constant(const Vec& value);  // order 0
    /// Rank-one symmetric map v -> f * <a,v1>...<a,vj>.
    static SymMultilinearMap rank_one(const Vec& a, const Vec& factor, int order);
    /// Symmetrize an arbitrary coefficient tensor over the input slots.
    static SymMultilinearMap symmetrized(int order, int in_dim, int out_dim,
                                         const std::vector<double>& raw);

    int order() const { return order_; }
    int in_dim() const { return n_; }
    int out_dim() const { return m_; }

    double& coeff(const std::vector<int>& idx, int c);
    double coeff(const std::vector<int>& idx, int c) const;
    const std::vector<double>& data() const { return coeffs_; }
    std::vector<double>& data() { return coeffs_; }

    /// Full multilinear evaluation T(v_1, ..., v_j).
    Vec eval(const std::vector<Vec>& vs) const;
    /// Diagonal evaluation T(v, ..., v).
    Vec eval_diag(const Vec& v) const;

    /// Plug x into `times` slots, lowering the order.
    SymMultilinearMap contract(const Vec& x, int times) const;

    SymMultilinearMap& operator+=(const SymMultilinearMap& o);
    SymMultilinearMap& operator*=(double a);
    friend SymMultilinearMap operator-(const SymMultilinearMap& a,
                                       const SymMultilinearMap& b);
    friend SymMultilinearMap operator+(const SymMultilinearMap& a,
                                       const SymMultilinearMap& b);
    friend SymMultilinearMap operator*(double a, SymMultilinearMap t);

    bool is_symmetric(double tol = 1e-12) const;

private:
    int order_, n_, m_;
    std::vector<double> coeffs_;

    std::size_t flat(const std::vector<int>& idx) const;
};

/// Bracket around the multilinear operator norm sup ||T(v1..vj)|| over unit
/// vectors. Lower: best diagonal probe over a deterministic direction set
/// with power-iteration refinement (exact for n = 1 and for order <= 1).
/// Upper: Euclidean norm of per-component absolute coefficient sums.
OpNormBracket multilinear_op_norm(const SymMultilinearMap& t);

double op_norm_lower(const SymMultilinearMap& t);

}  // namespace holderlie

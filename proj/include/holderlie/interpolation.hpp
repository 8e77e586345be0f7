#pragma once

#include <Eigen/Dense>
#include <vector>

#include "holderlie/domain.hpp"
#include "holderlie/jet.hpp"
#include "holderlie/quadrature.hpp"

namespace holderlie {

/// Lagrange interpolation data for k+1 distinct nodes in (0, 1).
/// Row mu of the coefficient matrix holds the monomial coefficients of the
/// Lagrange basis polynomial through node mu.
class InterpolationNodes {
public:
    explicit InterpolationNodes(std::vector<double> nodes);
    /// Uniform interior nodes {i/(k+2) : i = 1..k+1}.
    static InterpolationNodes uniform(int k);

    int degree() const { return static_cast<int>(nodes_.size()) - 1; }
    const std::vector<double>& nodes() const { return nodes_; }
    const Eigen::MatrixXd& lagrange_coefficients() const { return lambda_; }

    /// sum_mu |lambda_{mu,j}|, the coefficient-extraction bound.
    double interpolation_constant(int j) const;

    /// Coefficients (c_0..c_k) of the unique degree-<=k interpolant of the
    /// given values; values are vectors in R^m, one per node.
    std::vector<Vec> extract_homogeneous(const std::vector<Vec>& values) const;

private:
    std::vector<double> nodes_;
    Eigen::MatrixXd lambda_;  // (k+1) x (k+1), row = node, col = monomial power
};

/// Degree-k Taylor polynomial sum_{j<=k} gamma^(j)(x0)(v..v)/j!.
Vec taylor_polynomial(const JetFunction& gamma, const Vec& x0, const Vec& v, int k);

enum class RemainderForm { A, B };

/// Integral remainder of Taylor's formula. Form A pairs with the degree
/// k-1 polynomial, form B with the degree-k polynomial.
Vec taylor_remainder(const JetFunction& gamma, const Domain& d, const Vec& x0,
                     const Vec& v, int k, RemainderForm form, const Quadrature& q);

struct RemainderEstimate {
    double lhs;  // ||gamma(x+v) - gamma(x) - gamma'(x)v|| / ||v||
    double rhs;  // integral of ||gamma'(x+tv) - gamma'(x)||_op (upper bracket)
};

RemainderEstimate frechet_remainder_estimate(const JetFunction& gamma, const Domain& d,
                                             const Vec& x, const Vec& v,
                                             const Quadrature& q);

}  // namespace holderlie

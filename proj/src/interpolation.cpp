#include "holderlie/interpolation.hpp"

#include <cmath>

#include "holderlie/multilinear.hpp"

namespace holderlie {

InterpolationNodes::InterpolationNodes(std::vector<double> nodes)
    : nodes_(std::move(nodes)) {
    const int np = static_cast<int>(nodes_.size());
    if (np < 1) throw SizeMismatch("InterpolationNodes: need at least one node");
    for (int i = 0; i < np; ++i) {
        if (nodes_[i] <= 0.0 || nodes_[i] >= 1.0)
            throw NodeOutOfRange("InterpolationNodes: nodes must lie in (0,1)");
        for (int j = i + 1; j < np; ++j)
            if (nodes_[i] == nodes_[j])
                throw DuplicateNodes("InterpolationNodes: duplicate node");
    }
    // expand prod_{nu != mu} (t - nu)/(mu - nu) into monomial coefficients
    lambda_ = Eigen::MatrixXd::Zero(np, np);
    for (int mu = 0; mu < np; ++mu) {
        std::vector<double> poly = {1.0};  // running product, lowest power first
        double denom = 1.0;
        for (int nu = 0; nu < np; ++nu) {
            if (nu == mu) continue;
            denom *= nodes_[mu] - nodes_[nu];
            std::vector<double> next(poly.size() + 1, 0.0);
            for (std::size_t p = 0; p < poly.size(); ++p) {
                next[p] += poly[p] * (-nodes_[nu]);
                next[p + 1] += poly[p];
            }
            poly = std::move(next);
        }
        for (std::size_t p = 0; p < poly.size(); ++p) lambda_(mu, p) = poly[p] / denom;
    }
}

InterpolationNodes InterpolationNodes::uniform(int k) {
    std::vector<double> nodes(k + 1);
    for (int i = 1; i <= k + 1; ++i) nodes[i - 1] = static_cast<double>(i) / (k + 2);
    return InterpolationNodes(std::move(nodes));
}

double InterpolationNodes::interpolation_constant(int j) const {
    if (j < 0 || j > degree()) throw OrderExceeded("interpolation_constant: j out of range");
    double s = 0.0;
    for (int mu = 0; mu <= degree(); ++mu) s += std::abs(lambda_(mu, j));
    return s;
}

std::vector<Vec> InterpolationNodes::extract_homogeneous(
    const std::vector<Vec>& values) const {
    const int np = degree() + 1;
    if (static_cast<int>(values.size()) != np)
        throw SizeMismatch("extract_homogeneous: value count != node count");
    std::vector<Vec> coeffs(np, Vec::Zero(values.front().size()));
    for (int j = 0; j < np; ++j)
        for (int mu = 0; mu < np; ++mu) coeffs[j] += values[mu] * lambda_(mu, j);
    return coeffs;
}

Vec taylor_polynomial(const JetFunction& gamma, const Vec& x0, const Vec& v, int k) {
    if (k > gamma.max_order()) throw OrderExceeded("taylor_polynomial: order too high");
    Vec out = Vec::Zero(gamma.out_dim());
    double fact = 1.0;
    for (int j = 0; j <= k; ++j) {
        if (j > 0) fact *= j;
        out += gamma.derivative(x0, j).eval_diag(v) / fact;
    }
    return out;
}

namespace {

void check_segment(const Domain& d, const Vec& x0, const Vec& v) {
    // convexity: endpoints interior imply the whole segment is
    if (!d.contains(x0) || !d.contains(x0 + v))
        throw SegmentLeavesDomain("segment endpoint outside the domain");
}

}  // namespace

Vec taylor_remainder(const JetFunction& gamma, const Domain& d, const Vec& x0,
                     const Vec& v, int k, RemainderForm form, const Quadrature& q) {
    if (k < 1) throw OrderExceeded("taylor_remainder: k must be >= 1");
    if (k > gamma.max_order()) throw OrderExceeded("taylor_remainder: order too high");
    check_segment(d, x0, v);
    if (v.norm() == 0.0) return Vec::Zero(gamma.out_dim());
    double fact = 1.0;
    for (int j = 2; j < k; ++j) fact *= j;  // (k-1)!
    const SymMultilinearMap at_x0 = gamma.derivative(x0, k);
    Vec integral = q.integrate([&](double t) -> Vec {
        const double w = std::pow(1.0 - t, k - 1) / fact;
        SymMultilinearMap dk = gamma.derivative(x0 + t * v, k);
        if (form == RemainderForm::B) dk = dk - at_x0;
        return w * dk.eval_diag(v);
    });
    return integral;
}

RemainderEstimate frechet_remainder_estimate(const JetFunction& gamma, const Domain& d,
                                             const Vec& x, const Vec& v,
                                             const Quadrature& q) {
    if (gamma.max_order() < 1) throw OrderExceeded("frechet_remainder_estimate: need order 1");
    check_segment(d, x, v);
    RemainderEstimate r{};
    const double nv = v.norm();
    if (nv == 0.0) return r;
    Vec diff = gamma.value(x + v) - gamma.value(x) - gamma.derivative(x, 1).eval_diag(v);
    r.lhs = diff.norm() / nv;
    r.rhs = q.integrate([&](double t) {
        SymMultilinearMap delta = gamma.derivative(x + t * v, 1) - gamma.derivative(x, 1);
        return multilinear_op_norm(delta).upper;
    });
    return r;
}

}  // namespace holderlie

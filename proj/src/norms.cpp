#include "holderlie/norms.hpp"

#include <algorithm>
#include <cmath>

#include "holderlie/multilinear.hpp"

namespace holderlie {

double PairRatios::seminorm(double s) const {
    double best = 0.0;
    for (std::size_t i = 0; i < numerators.size(); ++i)
        best = std::max(best, numerators[i] / std::pow(distances[i], s));
    return best;
}

double sup_norm_estimate(const JetFunction& gamma, const Domain& d, const SamplePlan& p) {
    double best = 0.0;
    for (const auto& x : sample_points(d, p))
        best = std::max(best, gamma.value(x).norm());
    return best;
}

double sup_derivative_norm_estimate(const JetFunction& gamma, int r, const Domain& d,
                                    const SamplePlan& p) {
    if (r > gamma.max_order())
        throw OrderExceeded("sup_derivative_norm_estimate: derivative order");
    if (r == 0) return sup_norm_estimate(gamma, d, p);
    double best = 0.0;
    for (const auto& x : sample_points(d, p))
        best = std::max(best, op_norm_lower(gamma.derivative(x, r)));
    return best;
}

PairRatios pair_ratios(const JetFunction& gamma, int k,
                       const std::vector<std::pair<Vec, Vec>>& pairs) {
    if (k > gamma.max_order()) throw OrderExceeded("pair_ratios: derivative order");
    PairRatios r;
    r.numerators.reserve(pairs.size());
    r.distances.reserve(pairs.size());
    for (const auto& [x, y] : pairs) {
        double num;
        if (k == 0) {
            num = (gamma.value(x) - gamma.value(y)).norm();
        } else {
            num = op_norm_lower(gamma.derivative(x, k) - gamma.derivative(y, k));
        }
        r.numerators.push_back(num);
        r.distances.push_back((x - y).norm());
    }
    return r;
}

PairRatios pair_ratios(const JetFunction& gamma, int k, const Domain& d,
                       const SamplePlan& p) {
    return pair_ratios(gamma, k, sample_pairs(d, p));
}

double holder_seminorm_estimate(const JetFunction& gamma, HolderIndex idx,
                                const Domain& d, const SamplePlan& p) {
    if (idx.k > gamma.max_order())
        throw OrderExceeded("holder_seminorm_estimate: derivative order");
    if (idx.s > 0.0) return pair_ratios(gamma, idx.k, d, p).seminorm(idx.s);
    if (idx.k >= 1) return sup_derivative_norm_estimate(gamma, idx.k, d, p);
    return sup_norm_estimate(gamma, d, p);
}

NormEstimate holder_norm_estimate(const JetFunction& gamma, HolderIndex idx,
                                  const Domain& d, const SamplePlan& p) {
    NormEstimate e;
    e.index = idx;
    e.sup_part = sup_norm_estimate(gamma, d, p);
    if (idx.k == 0 && idx.s == 0.0) {
        e.seminorm_part = 0.0;
        e.total = e.sup_part;
    } else {
        e.seminorm_part = holder_seminorm_estimate(gamma, idx, d, p);
        e.total = e.sup_part + e.seminorm_part;
    }
    e.plan_desc = p.kind == SamplePlan::Kind::Grid
                      ? "grid:" + std::to_string(p.points_per_axis)
                      : "quasirandom:" + std::to_string(p.count) + ":" +
                            std::to_string(p.seed);
    return e;
}

namespace {

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

Lemma24Constants lemma24_constants(int k, double s, const Domain& d, const Vec& x0,
                                   double margin) {
    if (k < 1) throw OrderExceeded("lemma24_constants: k must be >= 1");
    if (!d.contains(x0)) throw BoundaryPoint("lemma24_constants: x0 not interior");
    Lemma24Constants c{};
    c.eps0 = d.boundary_distance(x0) * (1.0 - margin);
    // remainder bound with exponent k+s; valid since eps0 <= 1 and s <= 1
    c.c1 = std::pow(c.eps0, k + s) / factorial(k - 1);
    c.c2 = 1.0 + c.c1;
    c.c3 = c.c2 * InterpolationNodes::uniform(k).interpolation_constant(k);
    c.c4 = c.c3 * factorial(k) / std::pow(c.eps0, k);
    return c;
}

namespace {

// s-uniform version of the Lemma 2.4 constant chain for derivative order j:
// the remainder exponent j+s is bounded below by j since eps0 <= 1.
double c4_sup(int j, double eps0) {
    const double c1 = std::pow(eps0, j) / factorial(j - 1);
    const double c3 = (1.0 + c1) * InterpolationNodes::uniform(j).interpolation_constant(j);
    return c3 * factorial(j) / std::pow(eps0, j);
}

}  // namespace

double inclusion_constant_Dk(int k, const Domain& d) {
    const double eps0 = d.inradius();
    // chain: p_{(k,s)} <= p_{(k+1,0)} = ||gamma^(k+1)||_inf
    //        <= p_{(k+1,s)} + C4(k+1) ||gamma||_{(k+1,s)}
    // so ||gamma||_{(k,s)} <= (2 + C4(k+1)) ||gamma||_{(k+1,s)}; the s = 0
    // case routes through order k instead, covered by the max below.
    double c4 = c4_sup(k + 1, eps0);
    if (k >= 1) c4 = std::max(c4, c4_sup(k, eps0));
    return 2.0 + c4;
}

}  // namespace holderlie

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "holderlie/domain.hpp"
#include "holderlie/interpolation.hpp"
#include "holderlie/jet.hpp"

namespace holderlie {

/// Index (k, s) of the space BC^{k,s}; ordered by k + s.
struct HolderIndex {
    int k = 0;
    double s = 0.0;
    double order_key() const { return k + s; }
};

struct NormEstimate {
    double sup_part = 0.0;
    double seminorm_part = 0.0;
    double total = 0.0;
    HolderIndex index;
    std::string plan_desc;
};

/// Per-pair seminorm data, shared between inequality checks so that
/// algebraic per-pair identities hold exactly.
struct PairRatios {
    std::vector<double> numerators;  // op-norm lower of the derivative difference
    std::vector<double> distances;   // ||x - y||
    double seminorm(double s) const;
};

/// max over sampled points of ||gamma(x)||; lower bound of the sup norm.
double sup_norm_estimate(const JetFunction& gamma, const Domain& d, const SamplePlan& p);

/// max over sampled points of opnorm_lower(gamma^(r)(x)).
double sup_derivative_norm_estimate(const JetFunction& gamma, int r, const Domain& d,
                                    const SamplePlan& p);

PairRatios pair_ratios(const JetFunction& gamma, int k, const Domain& d,
                       const SamplePlan& p);
PairRatios pair_ratios(const JetFunction& gamma, int k,
                       const std::vector<std::pair<Vec, Vec>>& pairs);

/// p_{(k,s)} estimate via the unrolled recursion p_{(k,s)} = p_{(0,s)}(gamma^(k)).
/// s = 0, k >= 1 gives the sup of opnorm_lower(gamma^(k)); (0,0) is the sup norm.
double holder_seminorm_estimate(const JetFunction& gamma, HolderIndex idx,
                                const Domain& d, const SamplePlan& p);

NormEstimate holder_norm_estimate(const JetFunction& gamma, HolderIndex idx,
                                  const Domain& d, const SamplePlan& p);

/// Constants of the pointwise-derivative bound at an interior base point:
/// ||gamma^(k)(x0)||_op <= C4 * ||gamma||_{(k,s)}.
struct Lemma24Constants {
    double eps0;
    double c1, c2, c3, c4;
};

Lemma24Constants lemma24_constants(int k, double s, const Domain& d, const Vec& x0,
                                   double margin = 0.0);

/// Upper bound for the norm of the inclusion BC^{k+1,s} -> BC^{k,s},
/// valid for every s in [0,1] and independent of the codomain.
double inclusion_constant_Dk(int k, const Domain& d);

}  // namespace holderlie

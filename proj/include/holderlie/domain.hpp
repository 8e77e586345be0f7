#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <utility>
#include <vector>

#include "holderlie/errors.hpp"

namespace holderlie {

using Vec = Eigen::VectorXd;

/// Bounded convex open subset of R^n with diameter <= 1.
/// Only balls and boxes are supported; both make interiority and the
/// distance to the boundary cheap to certify.
class Domain {
public:
    static Domain ball(Vec center, double radius);
    static Domain box(Vec lower, Vec upper);

    int dim() const { return dim_; }
    double diameter() const { return diameter_; }

    bool contains(const Vec& x) const;
    double boundary_distance(const Vec& x) const;

    /// Deepest interior point (ball/box center).
    Vec incenter() const;
    /// Distance from the incenter to the boundary.
    double inradius() const;

    bool is_ball() const { return shape_ == Shape::Ball; }
    const Vec& center() const { return a_; }
    double radius() const { return r_; }
    const Vec& lower() const { return a_; }
    const Vec& upper() const { return b_; }

private:
    enum class Shape { Ball, Box };
    Shape shape_;
    Vec a_, b_;  // ball: center in a_; box: lower/upper
    double r_ = 0.0;
    int dim_;
    double diameter_;

    Domain(Shape s, Vec a, Vec b, double r);
};

/// Deterministic sampling plan for sup estimation.
struct SamplePlan {
    enum class Kind { Grid, Quasirandom };
    Kind kind = Kind::Grid;
    int points_per_axis = 8;     // Grid
    int count = 100;             // Quasirandom
    std::uint64_t seed = 0;      // Quasirandom
    double min_pair_separation = -1.0;  // <0: default 1e-6 * diam
    int max_pairs = 20000;

    static SamplePlan grid(int per_axis, double min_sep = -1.0);
    static SamplePlan quasirandom(int count, std::uint64_t seed, double min_sep = -1.0);
};

/// All points are strictly interior; same (domain, plan) gives the same list.
std::vector<Vec> sample_points(const Domain& d, const SamplePlan& p);

/// Ordered pairs (x, y), x != y, with ||x - y|| >= min_pair_separation.
/// For large point sets the pair set is thinned deterministically
/// (consecutive pairs plus geometric strides) to stay under max_pairs.
std::vector<std::pair<Vec, Vec>> sample_pairs(const Domain& d, const SamplePlan& p);

}  // namespace holderlie

#include "holderlie/domain.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace holderlie {

Domain::Domain(Shape s, Vec a, Vec b, double r)
    : shape_(s), a_(std::move(a)), b_(std::move(b)), r_(r) {
    dim_ = static_cast<int>(a_.size());
    if (shape_ == Shape::Ball) {
        diameter_ = 2.0 * r_;
    } else {
        diameter_ = (b_ - a_).norm();
    }
}

Domain Domain::ball(Vec center, double radius) {
    if (center.size() < 1) throw EmptyDomain("ball: dimension must be >= 1");
    if (radius <= 0.0) throw EmptyDomain("ball: radius must be positive");
    if (2.0 * radius > 1.0 + 1e-15)
        throw DiameterExceeded("ball: diameter 2*radius exceeds 1");
    return Domain(Shape::Ball, std::move(center), Vec(), radius);
}

Domain Domain::box(Vec lower, Vec upper) {
    if (lower.size() < 1) throw EmptyDomain("box: dimension must be >= 1");
    if (lower.size() != upper.size())
        throw DimensionMismatch("box: lower/upper dimension mismatch");
    for (int i = 0; i < lower.size(); ++i)
        if (lower[i] >= upper[i])
            throw EmptyDomain("box: lower >= upper on some axis");
    double diam = (upper - lower).norm();
    if (diam > 1.0 + 1e-15) throw DiameterExceeded("box: diagonal exceeds 1");
    return Domain(Shape::Box, std::move(lower), std::move(upper), 0.0);
}

bool Domain::contains(const Vec& x) const {
    if (x.size() != dim_) return false;
    if (shape_ == Shape::Ball) return (x - a_).norm() < r_;
    for (int i = 0; i < dim_; ++i)
        if (x[i] <= a_[i] || x[i] >= b_[i]) return false;
    return true;
}

double Domain::boundary_distance(const Vec& x) const {
    if (shape_ == Shape::Ball) return r_ - (x - a_).norm();
    double d = std::numeric_limits<double>::infinity();
    for (int i = 0; i < dim_; ++i)
        d = std::min(d, std::min(x[i] - a_[i], b_[i] - x[i]));
    return d;
}

Vec Domain::incenter() const {
    if (shape_ == Shape::Ball) return a_;
    return 0.5 * (a_ + b_);
}

double Domain::inradius() const { return boundary_distance(incenter()); }

SamplePlan SamplePlan::grid(int per_axis, double min_sep) {
    SamplePlan p;
    p.kind = Kind::Grid;
    p.points_per_axis = per_axis;
    p.min_pair_separation = min_sep;
    return p;
}

SamplePlan SamplePlan::quasirandom(int count, std::uint64_t seed, double min_sep) {
    SamplePlan p;
    p.kind = Kind::Quasirandom;
    p.count = count;
    p.seed = seed;
    p.min_pair_separation = min_sep;
    return p;
}

namespace {

// Per-axis interior grid: g points at lo + (i+1)*h with h = (hi-lo)/(g+1),
// so the margin to either end equals the spacing.
std::vector<double> axis_grid(double lo, double hi, int g) {
    std::vector<double> xs(g);
    const double h = (hi - lo) / (g + 1);
    for (int i = 0; i < g; ++i) xs[i] = lo + (i + 1) * h;
    return xs;
}

}  // namespace

std::vector<Vec> sample_points(const Domain& d, const SamplePlan& p) {
    const int n = d.dim();
    std::vector<Vec> out;
    if (p.kind == SamplePlan::Kind::Grid) {
        if (p.points_per_axis < 1) throw DegeneratePlan("grid: points_per_axis < 1");
        Vec lo(n), hi(n);
        if (d.is_ball()) {
            lo = d.center().array() - d.radius();
            hi = d.center().array() + d.radius();
        } else {
            lo = d.lower();
            hi = d.upper();
        }
        std::vector<std::vector<double>> axes(n);
        for (int i = 0; i < n; ++i) axes[i] = axis_grid(lo[i], hi[i], p.points_per_axis);
        std::vector<int> idx(n, 0);
        while (true) {
            Vec x(n);
            for (int i = 0; i < n; ++i) x[i] = axes[i][idx[i]];
            if (d.contains(x)) out.push_back(x);
            int i = n - 1;
            while (i >= 0 && ++idx[i] == p.points_per_axis) idx[i--] = 0;
            if (i < 0) break;
        }
    } else {
        if (p.count < 1) throw DegeneratePlan("quasirandom: count < 1");
        std::mt19937_64 rng(p.seed);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        Vec lo(n), hi(n);
        if (d.is_ball()) {
            lo = d.center().array() - d.radius();
            hi = d.center().array() + d.radius();
        } else {
            lo = d.lower();
            hi = d.upper();
        }
        // rejection sampling with a small interiority margin
        const double margin = 1e-9 * d.diameter();
        while (static_cast<int>(out.size()) < p.count) {
            Vec x(n);
            for (int i = 0; i < n; ++i) x[i] = lo[i] + u(rng) * (hi[i] - lo[i]);
            if (d.contains(x) && d.boundary_distance(x) > margin) out.push_back(x);
        }
    }
    return out;
}

std::vector<std::pair<Vec, Vec>> sample_pairs(const Domain& d, const SamplePlan& p) {
    auto pts = sample_points(d, p);
    const std::size_t npts = pts.size();
    if (npts < 2) throw DegeneratePlan("sample_pairs: fewer than 2 points");
    const double min_sep =
        p.min_pair_separation >= 0.0 ? p.min_pair_separation : 1e-6 * d.diameter();
    if (min_sep <= 0.0) throw DegeneratePlan("sample_pairs: min_pair_separation must be > 0");

    std::vector<std::pair<Vec, Vec>> pairs;
    auto push = [&](std::size_t i, std::size_t j) {
        if ((pts[i] - pts[j]).norm() >= min_sep) pairs.emplace_back(pts[i], pts[j]);
    };
    if (npts * (npts - 1) / 2 <= static_cast<std::size_t>(p.max_pairs)) {
        for (std::size_t i = 0; i < npts; ++i)
            for (std::size_t j = i + 1; j < npts; ++j) push(i, j);
    } else {
        // consecutive pairs plus geometric strides to cover all scales
        std::size_t budget = 0;
        for (std::size_t stride = 1; stride < npts; stride *= 2) budget += npts - stride;
        const std::size_t istep =
            std::max<std::size_t>(1, (budget + p.max_pairs - 1) / p.max_pairs);
        for (std::size_t stride = 1; stride < npts; stride *= 2)
            for (std::size_t i = 0; i + stride < npts; i += istep) push(i, i + stride);
    }
    if (pairs.empty()) throw DegeneratePlan("sample_pairs: no admissible pairs");
    return pairs;
}

}  // namespace holderlie

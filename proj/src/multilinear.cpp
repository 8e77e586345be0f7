#include "holderlie/multilinear.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <random>

namespace holderlie {

namespace {

std::size_t ipow(int base, int exp) {
    std::size_t r = 1;
    for (int i = 0; i < exp; ++i) r *= static_cast<std::size_t>(base);
    return r;
}

}  // namespace

SymMultilinearMap::SymMultilinearMap(int order, int in_dim, int out_dim)
    : order_(order), n_(in_dim), m_(out_dim),
      coeffs_(ipow(in_dim, order) * out_dim, 0.0) {
    if (order < 0 || in_dim < 1 || out_dim < 1)
        throw DimensionMismatch("SymMultilinearMap: invalid shape");
}

SymMultilinearMap SymMultilinearMap::zero(int order, int in_dim, int out_dim) {
    return SymMultilinearMap(order, in_dim, out_dim);
}

SymMultilinearMap SymMultilinearMap::constant(const Vec& value) {
    SymMultilinearMap t(0, 1, static_cast<int>(value.size()));
    for (int c = 0; c < value.size(); ++c) t.coeffs_[c] = value[c];
    return t;
}

SymMultilinearMap SymMultilinearMap::rank_one(const Vec& a, const Vec& factor, int order) {
    const int n = static_cast<int>(a.size());
    const int m = static_cast<int>(factor.size());
    SymMultilinearMap t(order, order == 0 ? std::max(n, 1) : n, m);
    const std::size_t nslots = ipow(n, order);
    if (order == 0) {
        for (int c = 0; c < m; ++c) t.coeffs_[c] = factor[c];
        return t;
    }
    std::vector<int> idx(order, 0);
    for (std::size_t f = 0; f < nslots; ++f) {
        double prod = 1.0;
        for (int s = 0; s < order; ++s) prod *= a[idx[s]];
        for (int c = 0; c < m; ++c) t.coeffs_[f * m + c] = prod * factor[c];
        int s = order - 1;
        while (s >= 0 && ++idx[s] == n) idx[s--] = 0;
    }
    return t;
}

SymMultilinearMap SymMultilinearMap::symmetrized(int order, int in_dim, int out_dim,
                                                 const std::vector<double>& raw) {
    SymMultilinearMap t(order, in_dim, out_dim);
    if (raw.size() != t.coeffs_.size())
        throw SizeMismatch("symmetrized: coefficient count mismatch");
    if (order <= 1) {
        t.coeffs_ = raw;
        return t;
    }
    std::vector<int> perm(order);
    std::iota(perm.begin(), perm.end(), 0);
    double nperm = 0.0;
    std::vector<int> idx(order, 0);
    do {
        ++nperm;
        const std::size_t nslots = ipow(in_dim, order);
        std::fill(idx.begin(), idx.end(), 0);
        for (std::size_t f = 0; f < nslots; ++f) {
            std::size_t src = 0;
            for (int s = 0; s < order; ++s) src = src * in_dim + idx[perm[s]];
            for (int c = 0; c < out_dim; ++c)
                t.coeffs_[f * out_dim + c] += raw[src * out_dim + c];
            int s = order - 1;
            while (s >= 0 && ++idx[s] == in_dim) idx[s--] = 0;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (auto& c : t.coeffs_) c /= nperm;
    return t;
}

std::size_t SymMultilinearMap::flat(const std::vector<int>& idx) const {
    std::size_t f = 0;
    for (int s = 0; s < order_; ++s) f = f * n_ + idx[s];
    return f;
}

double& SymMultilinearMap::coeff(const std::vector<int>& idx, int c) {
    return coeffs_[flat(idx) * m_ + c];
}
double SymMultilinearMap::coeff(const std::vector<int>& idx, int c) const {
    return coeffs_[flat(idx) * m_ + c];
}

Vec SymMultilinearMap::eval(const std::vector<Vec>& vs) const {
    if (static_cast<int>(vs.size()) != order_)
        throw SizeMismatch("eval: wrong number of input vectors");
    Vec out = Vec::Zero(m_);
    const std::size_t nslots = ipow(n_, order_);
    std::vector<int> idx(order_, 0);
    for (std::size_t f = 0; f < nslots; ++f) {
        double prod = 1.0;
        for (int s = 0; s < order_; ++s) prod *= vs[s][idx[s]];
        if (prod != 0.0)
            for (int c = 0; c < m_; ++c) out[c] += prod * coeffs_[f * m_ + c];
        int s = order_ - 1;
        while (s >= 0 && ++idx[s] == n_) idx[s--] = 0;
    }
    return out;
}

Vec SymMultilinearMap::eval_diag(const Vec& v) const {
    if (order_ == 0) return Eigen::Map<const Vec>(coeffs_.data(), m_);
    std::vector<Vec> vs(order_, v);
    return eval(vs);
}

SymMultilinearMap SymMultilinearMap::contract(const Vec& x, int times) const {
    if (times > order_) throw OrderExceeded("contract: times exceeds order");
    SymMultilinearMap cur = *this;
    for (int t = 0; t < times; ++t) {
        SymMultilinearMap next(cur.order_ - 1, n_, m_);
        const std::size_t nprefix = ipow(n_, cur.order_ - 1);
        for (std::size_t p = 0; p < nprefix; ++p)
            for (int i = 0; i < n_; ++i)
                for (int c = 0; c < m_; ++c)
                    next.coeffs_[p * m_ + c] +=
                        cur.coeffs_[(p * n_ + i) * m_ + c] * x[i];
        cur = std::move(next);
    }
    return cur;
}

SymMultilinearMap& SymMultilinearMap::operator+=(const SymMultilinearMap& o) {
    if (coeffs_.size() != o.coeffs_.size() || order_ != o.order_)
        throw DimensionMismatch("operator+=: shape mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

SymMultilinearMap& SymMultilinearMap::operator*=(double a) {
    for (auto& c : coeffs_) c *= a;
    return *this;
}

SymMultilinearMap operator+(const SymMultilinearMap& a, const SymMultilinearMap& b) {
    SymMultilinearMap r = a;
    r += b;
    return r;
}

SymMultilinearMap operator-(const SymMultilinearMap& a, const SymMultilinearMap& b) {
    SymMultilinearMap r = b;
    r *= -1.0;
    r += a;
    return r;
}

SymMultilinearMap operator*(double a, SymMultilinearMap t) {
    t *= a;
    return t;
}

bool SymMultilinearMap::is_symmetric(double tol) const {
    if (order_ <= 1) return true;
    auto sym = symmetrized(order_, n_, m_, coeffs_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (std::abs(coeffs_[i] - sym.coeffs_[i]) > tol) return false;
    return true;
}

namespace {

// Deterministic unit directions per dimension: coordinate axes plus seeded
// pseudo-random points on the sphere.
const std::vector<Vec>& direction_set(int n) {
    static std::map<int, std::vector<Vec>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Vec> dirs;
    for (int i = 0; i < n; ++i) {
        Vec e = Vec::Zero(n);
        e[i] = 1.0;
        dirs.push_back(e);
    }
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull + n);
    std::normal_distribution<double> g(0.0, 1.0);
    const int extra = 64;
    for (int i = 0; i < extra; ++i) {
        Vec v(n);
        for (int j = 0; j < n; ++j) v[j] = g(rng);
        double nv = v.norm();
        if (nv > 1e-12) dirs.push_back(v / nv);
    }
    return cache.emplace(n, std::move(dirs)).first->second;
}

}  // namespace

OpNormBracket multilinear_op_norm(const SymMultilinearMap& t) {
    OpNormBracket b;
    const int n = t.in_dim();
    const int m = t.out_dim();
    const int j = t.order();

    // upper bound: |T_c(v1..vj)| <= sum_idx |coeff| for unit Euclidean inputs
    Vec rowsum = Vec::Zero(m);
    const auto& data = t.data();
    for (std::size_t i = 0; i < data.size(); ++i)
        rowsum[static_cast<int>(i % m)] += std::abs(data[i]);
    b.upper = rowsum.norm();

    if (j == 0) {
        b.lower = t.eval_diag(Vec::Zero(n)).norm();
        b.upper = std::max(b.upper, b.lower);
        return b;
    }
    if (n == 1) {
        // single slot index: T(v..v) = v^j * coeff vector, |v| = 1
        Vec v = Vec::Ones(1);
        b.lower = t.eval_diag(v).norm();
        b.upper = b.lower;
        return b;
    }
    if (j == 1) {
        Eigen::MatrixXd mat(m, n);
        for (int i = 0; i < n; ++i)
            for (int c = 0; c < m; ++c) mat(c, i) = t.data()[i * m + c];
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(mat);
        b.lower = svd.singularValues()(0);
        b.upper = std::max(b.upper, b.lower);
        return b;
    }

    double best = 0.0;
    Vec best_v = Vec::Zero(n);
    for (const auto& v : direction_set(n)) {
        double val = t.eval_diag(v).norm();
        if (val > best) {
            best = val;
            best_v = v;
        }
    }
    // higher-order power iteration from the best probe; every evaluated
    // point is a certified lower bound, so we only ever tighten
    Vec v = best_v;
    for (int it = 0; it < 30 && best > 0.0; ++it) {
        Vec val = t.eval_diag(v);
        double nv = val.norm();
        if (nv > best) {
            best = nv;
            best_v = v;
        }
        if (nv < 1e-300) break;
        // gradient of ||T(v..v)|| on the sphere, up to the factor j
        SymMultilinearMap g1 = t.contract(v, j - 1);  // order 1 map
        Vec grad = Vec::Zero(n);
        for (int i = 0; i < n; ++i)
            for (int c = 0; c < m; ++c)
                grad[i] += g1.data()[i * m + c] * val[c] / nv;
        double gn = grad.norm();
        if (gn < 1e-14) break;
        v = grad / gn;
    }
    double val = t.eval_diag(v).norm();
    b.lower = std::max(best, val);
    b.upper = std::max(b.upper, b.lower);
    return b;
}

double op_norm_lower(const SymMultilinearMap& t) {
    return multilinear_op_norm(t).lower;
}

}  // namespace holderlie

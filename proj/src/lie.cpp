#include "holderlie/lie.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace holderlie {

LieAlgebra LieAlgebra::so3() {
    LieAlgebra a;
    a.name = "so3";
    a.matrix_dim = 3;
    Mat l1 = Mat::Zero(3, 3), l2 = Mat::Zero(3, 3), l3 = Mat::Zero(3, 3);
    l1(1, 2) = -1, l1(2, 1) = 1;
    l2(0, 2) = 1, l2(2, 0) = -1;
    l3(0, 1) = -1, l3(1, 0) = 1;
    a.basis = {l1, l2, l3};
    return a;
}

LieAlgebra LieAlgebra::sl2() {
    LieAlgebra a;
    a.name = "sl2";
    a.matrix_dim = 2;
    Mat e = Mat::Zero(2, 2), f = Mat::Zero(2, 2), h = Mat::Zero(2, 2);
    e(0, 1) = 1;
    f(1, 0) = 1;
    h(0, 0) = 1, h(1, 1) = -1;
    a.basis = {e, f, h};
    return a;
}

LieAlgebra LieAlgebra::heisenberg() {
    LieAlgebra a;
    a.name = "heisenberg";
    a.matrix_dim = 3;
    Mat p = Mat::Zero(3, 3), q = Mat::Zero(3, 3), z = Mat::Zero(3, 3);
    p(0, 1) = 1;
    q(1, 2) = 1;
    z(0, 2) = 1;
    a.basis = {p, q, z};
    return a;
}

LieAlgebra LieAlgebra::abelian(int d) {
    LieAlgebra a;
    a.name = "abelian" + std::to_string(d);
    a.matrix_dim = d;
    for (int i = 0; i < d; ++i) {
        Mat e = Mat::Zero(d, d);
        e(i, i) = 1.0;
        a.basis.push_back(e);
    }
    return a;
}

Mat LieAlgebra::random_element(std::mt19937_64& rng, double frobenius_norm) const {
    std::normal_distribution<double> g(0.0, 1.0);
    Mat x = Mat::Zero(matrix_dim, matrix_dim);
    for (const auto& b : basis) x += g(rng) * b;
    double nx = x.norm();
    if (nx < 1e-300) return x;
    return x * (frobenius_norm / nx);
}

LieAlgebra rescale_compatible(const LieAlgebra& alg, double ck) {
    if (ck <= 0.0) throw Error("rescale_compatible: C_k must be positive");
    LieAlgebra out = alg;
    out.scale = 2.0 * ck;
    return out;
}

namespace {

// Dynkin expansion term table: words over {x, y} with rational coefficients,
// bracketed right-to-left. A parse splits the word into blocks x^p y^q with
// p + q >= 1; the coefficient of a word of length m is
//   sum over parses  (-1)^(n-1)/n * 1/(m * prod p_i! q_i!).
struct BchTerm {
    std::vector<int> word;  // 0 = x, 1 = y
    double coeff;
};

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

void parse_rec(const std::vector<int>& w, std::size_t pos, int nblocks, double acc,
               double& total) {
    const std::size_t m = w.size();
    if (pos == m) {
        total += ((nblocks % 2 == 1) ? 1.0 : -1.0) / nblocks * acc / static_cast<double>(m);
        return;
    }
    std::size_t xrun = 0;
    while (pos + xrun < m && w[pos + xrun] == 0) ++xrun;
    for (std::size_t p = 0; p <= xrun; ++p) {
        if (p < xrun) {
            // next char is still x, so the block must stop with q = 0
            if (p >= 1)
                parse_rec(w, pos + p, nblocks + 1, acc / factorial(static_cast<int>(p)),
                          total);
            continue;
        }
        std::size_t yrun = 0;
        while (pos + p + yrun < m && w[pos + p + yrun] == 1) ++yrun;
        for (std::size_t q = (p == 0 ? 1 : 0); q <= yrun; ++q) {
            if (q < yrun && q == 0 && p == 0) continue;
            parse_rec(w, pos + p + q, nblocks + 1,
                      acc / (factorial(static_cast<int>(p)) * factorial(static_cast<int>(q))),
                      total);
        }
    }
}

const std::vector<BchTerm>& bch_table(int order) {
    static std::map<int, std::vector<BchTerm>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;
    std::vector<BchTerm> terms;
    for (int m = 1; m <= order; ++m) {
        for (std::uint64_t bits = 0; bits < (1ull << m); ++bits) {
            std::vector<int> w(m);
            for (int i = 0; i < m; ++i) w[i] = static_cast<int>((bits >> i) & 1u);
            double coeff = 0.0;
            parse_rec(w, 0, 0, 1.0, coeff);
            if (coeff != 0.0) terms.push_back({std::move(w), coeff});
        }
    }
    return cache.emplace(order, std::move(terms)).first->second;
}

}  // namespace

Mat bch_truncated(const Mat& x, const Mat& y, const LieAlgebra& alg,
                  const BCHConfig& cfg) {
    if (cfg.truncation_order < 2) throw Error("bch_truncated: truncation order < 2");
    const double budget = cfg.domain_margin * std::log(2.0);
    if (alg.norm(x) + alg.norm(y) > budget)
        throw OutsideConvergenceDomain("bch_truncated: ||x|| + ||y|| too large");
    Mat z = Mat::Zero(x.rows(), x.cols());
    for (const auto& term : bch_table(cfg.truncation_order)) {
        // right-nested bracket [w1,[w2,...[w_{m-1}, w_m]...]]
        const auto& w = term.word;
        Mat b = (w.back() == 0) ? x : y;
        for (std::size_t i = w.size() - 1; i-- > 0;) {
            const Mat& lhs = (w[i] == 0) ? x : y;
            b = alg.bracket(lhs, b);
        }
        z += term.coeff * b;
    }
    return z;
}

Mat matrix_exp(const Mat& x, double tol) {
    const int d = static_cast<int>(x.rows());
    int squarings = 0;
    double nx = x.norm();
    while (nx > 0.25) {
        nx /= 2.0;
        ++squarings;
    }
    const Mat y = x / std::pow(2.0, squarings);
    Mat out = Mat::Identity(d, d);
    Mat term = Mat::Identity(d, d);
    for (int k = 1; k <= 64; ++k) {
        term = term * y / static_cast<double>(k);
        out += term;
        if (term.norm() < tol * 1e-2) break;
    }
    for (int i = 0; i < squarings; ++i) out = out * out;
    return out;
}

namespace {

Mat matrix_sqrt(const Mat& g) {
    // Denman-Beavers iteration
    const int d = static_cast<int>(g.rows());
    Mat y = g, z = Mat::Identity(d, d);
    for (int it = 0; it < 60; ++it) {
        Mat yn = 0.5 * (y + z.inverse());
        Mat zn = 0.5 * (z + y.inverse());
        double delta = (yn - y).norm();
        y = yn;
        z = zn;
        if (delta < 1e-15) break;
    }
    return y;
}

}  // namespace

Mat matrix_log(const Mat& g, double tol) {
    const int d = static_cast<int>(g.rows());
    const Mat id = Mat::Identity(d, d);
    if ((g - id).norm() >= 1.0)
        throw LogDomain("matrix_log: ||g - I|| must be < 1");
    Mat h = g;
    int halvings = 0;
    while ((h - id).norm() > 0.25) {
        h = matrix_sqrt(h);
        ++halvings;
    }
    const Mat a = h - id;
    Mat out = Mat::Zero(d, d);
    Mat pow = id;
    for (int k = 1; k <= 64; ++k) {
        pow = pow * a;
        out += ((k % 2 == 1) ? 1.0 : -1.0) / k * pow;
        if (pow.norm() / k < tol * 1e-2) break;
    }
    return out * std::pow(2.0, halvings);
}

Mat unflatten(const Vec& v, int d) {
    if (v.size() != d * d) throw DimensionMismatch("unflatten: size != d*d");
    Mat m(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m(i, j) = v[i * d + j];
    return m;
}

Vec flatten(const Mat& m) {
    const int d = static_cast<int>(m.rows());
    Vec v(d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) v[i * d + j] = m(i, j);
    return v;
}

GroupElementWord exp_map(JetPtr gamma, int matrix_dim) {
    if (gamma->out_dim() != matrix_dim * matrix_dim)
        throw DimensionMismatch("exp_map: codomain is not d*d");
    GroupElementWord w;
    w.matrix_dim = matrix_dim;
    w.factors.push_back({+1, std::move(gamma)});
    return w;
}

GroupElementWord group_mul(const GroupElementWord& w1, const GroupElementWord& w2) {
    if (w1.factors.empty()) return w2;
    if (w2.factors.empty()) return w1;
    if (w1.matrix_dim != w2.matrix_dim)
        throw DimensionMismatch("group_mul: matrix dimensions differ");
    GroupElementWord out = w1;
    out.factors.insert(out.factors.end(), w2.factors.begin(), w2.factors.end());
    return out;
}

GroupElementWord group_inv(const GroupElementWord& w) {
    GroupElementWord out;
    out.matrix_dim = w.matrix_dim;
    for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it)
        out.factors.push_back({-it->sign, it->gamma});
    return out;
}

Mat evaluate(const GroupElementWord& w, const Vec& x, double tol) {
    const int d = w.matrix_dim;
    Mat g = Mat::Identity(d == 0 ? 1 : d, d == 0 ? 1 : d);
    for (const auto& f : w.factors) {
        Mat m = unflatten(f.gamma->value(x), d);
        g = g * matrix_exp(f.sign * m, tol);
    }
    return g;
}

LocalNormalForm local_normal_form(const GroupElementWord& w, const LieAlgebra& alg,
                                  HolderIndex idx, const BCHConfig& cfg,
                                  const Domain& d, const SamplePlan& p) {
    LocalNormalForm out;
    out.points = sample_points(d, p);
    const double budget = cfg.domain_margin * std::log(2.0);
    for (const auto& x : out.points) {
        double norm_sum = 0.0;
        for (const auto& f : w.factors)
            norm_sum += alg.norm(unflatten(f.gamma->value(x), w.matrix_dim));
        if (w.factors.size() > 1 && norm_sum > budget)
            throw OutsideConvergenceDomain("local_normal_form: factors leave BCH domain");
        out.values.push_back(matrix_log(evaluate(w, x)));
    }
    for (const auto& v : out.values)
        out.sup_part = std::max(out.sup_part, alg.norm(v));
    if (idx.s > 0.0) {
        const double min_sep =
            p.min_pair_separation >= 0.0 ? p.min_pair_separation : 1e-6 * d.diameter();
        for (std::size_t i = 0; i < out.points.size(); ++i)
            for (std::size_t j = i + 1; j < out.points.size(); ++j) {
                const double dist = (out.points[i] - out.points[j]).norm();
                if (dist < min_sep) continue;
                const double num = alg.norm(out.values[i] - out.values[j]);
                out.seminorm_part =
                    std::max(out.seminorm_part, num / std::pow(dist, idx.s));
            }
    }
    out.total = out.sup_part + out.seminorm_part;
    return out;
}

std::vector<double> chain_norms(const JetFunction& gamma, int k, double s, int N,
                                const Domain& d, const SamplePlan& p) {
    if (N < 2) throw Error("chain_norms: N must be >= 2");
    if (k > gamma.max_order()) throw OrderExceeded("chain_norms: derivative order");
    if (s < 0.0 || s >= 1.0) throw Error("chain_norms: s must lie in [0,1)");
    const double sup = sup_norm_estimate(gamma, d, p);
    const PairRatios ratios = pair_ratios(gamma, k, d, p);
    std::vector<double> out;
    out.reserve(N);
    for (int n = 1; n <= N; ++n) {
        const double t = s + (1.0 - s) / n;
        out.push_back(sup + ratios.seminorm(t));
    }
    return out;
}

}  // namespace holderlie

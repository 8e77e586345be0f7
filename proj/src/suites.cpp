#include "holderlie/suites.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <set>

namespace holderlie {

namespace {

CheckRecord make_record(std::string id, std::string anchor, double lhs, double rhs,
                        double mult_tol = 0.0, double abs_tol = 0.0) {
    CheckRecord r;
    r.id = std::move(id);
    r.anchor = std::move(anchor);
    r.lhs = lhs;
    r.rhs = rhs;
    r.pass = lhs <= rhs * (1.0 + mult_tol) + abs_tol;
    return r;
}

/// Keep the trial with the smallest margin rhs - lhs.
struct WorstCase {
    double lhs = 0.0;
    double rhs = std::numeric_limits<double>::infinity();
    bool seen = false;
    void update(double l, double r) {
        if (!seen || l - r > lhs - rhs) {
            lhs = l;
            rhs = r;
            seen = true;
        }
    }
};

}  // namespace

std::vector<CheckRecord> suite_taylor(const Domain& d, const SamplePlan& p,
                                      const CorpusSpec& corpus, double tol_rel,
                                      double tol_poly) {
    std::vector<CheckRecord> out;
    const Quadrature q = Quadrature::gauss_legendre(32);
    auto jets = smooth_corpus(corpus);
    auto pts = sample_points(d, p);
    const Vec x0 = d.incenter();
    // limit displacement targets per function to keep the suite quick
    std::vector<Vec> targets;
    for (std::size_t i = 0; i < pts.size() && targets.size() < 5; i += pts.size() / 5 + 1)
        targets.push_back(pts[i]);

    for (int k = 1; k <= 3; ++k) {
        WorstCase wa, wb;
        for (const auto& jet : jets) {
            for (const auto& pt : targets) {
                const Vec v = pt - x0;
                const Vec exact = jet->value(x0 + v);
                const double scale = 1.0 + exact.norm();
                const Vec ta = taylor_polynomial(*jet, x0, v, k - 1) +
                               taylor_remainder(*jet, d, x0, v, k, RemainderForm::A, q);
                const Vec tb = taylor_polynomial(*jet, x0, v, k) +
                               taylor_remainder(*jet, d, x0, v, k, RemainderForm::B, q);
                wa.update((ta - exact).norm() / scale, tol_rel);
                wb.update((tb - exact).norm() / scale, tol_rel);
            }
        }
        out.push_back(make_record("taylor/identity-a/k=" + std::to_string(k),
                                  "Taylor formula, integral remainder", wa.lhs, wa.rhs));
        out.push_back(make_record("taylor/identity-b/k=" + std::to_string(k),
                                  "Taylor formula, centered remainder", wb.lhs, wb.rhs));
    }

    // polynomial of degree <= k makes the centered integrand vanish
    {
        std::mt19937_64 rng(corpus.seed + 1);
        WorstCase w;
        for (int trial = 0; trial < 25; ++trial) {
            for (int k = 1; k <= 3; ++k) {
                auto jet = poly_jet(random_polynomial(rng, k, d.dim(), corpus.out_dim));
                for (const auto& pt : targets) {
                    const Vec v = pt - x0;
                    const Vec rem =
                        taylor_remainder(*jet, d, x0, v, k, RemainderForm::B, q);
                    w.update(rem.norm(), tol_poly);
                }
            }
        }
        out.push_back(make_record("taylor/poly-remainder-b",
                                  "centered remainder of a degree-k polynomial",
                                  w.lhs, w.rhs));
    }

    // first-order remainder quotient is dominated by the derivative integral
    {
        WorstCase w;
        for (const auto& jet : jets) {
            for (const auto& pt : targets) {
                const Vec v = pt - x0;
                if (v.norm() == 0.0) continue;
                auto r = frechet_remainder_estimate(*jet, d, x0, v, q);
                w.update(r.lhs, r.rhs);
            }
        }
        out.push_back(make_record("taylor/frechet-remainder",
                                  "difference quotient vs derivative oscillation",
                                  w.lhs, w.rhs, 1e-9));
    }
    return out;
}

std::vector<CheckRecord> suite_interp(const CorpusSpec& corpus, double tol_recovery) {
    std::vector<CheckRecord> out;
    std::mt19937_64 rng(corpus.seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);

    // coefficient recovery for scalar polynomials of degree <= 4
    {
        const int deg = 4;
        const InterpolationNodes nodes = InterpolationNodes::uniform(deg);
        WorstCase w;
        for (int trial = 0; trial < corpus.count; ++trial) {
            std::vector<double> coeffs(deg + 1);
            for (auto& c : coeffs) c = u(rng);
            std::vector<Vec> values;
            for (double mu : nodes.nodes()) {
                double val = 0.0, tp = 1.0;
                for (int j = 0; j <= deg; ++j, tp *= mu) val += coeffs[j] * tp;
                Vec v(1);
                v[0] = val;
                values.push_back(v);
            }
            auto rec = nodes.extract_homogeneous(values);
            double err = 0.0;
            for (int j = 0; j <= deg; ++j) err = std::max(err, std::abs(rec[j][0] - coeffs[j]));
            w.update(err, tol_recovery);
        }
        out.push_back(make_record("interp/recovery", "Lagrange coefficient extraction",
                                  w.lhs, w.rhs));
    }

    // homogeneous-part bound on the unit ball, ray points included in the
    // sup sample so the per-direction inequality is algebraically exact
    {
        const int deg = 3;
        const InterpolationNodes nodes = InterpolationNodes::uniform(deg);
        std::normal_distribution<double> g(0.0, 1.0);
        WorstCase w;
        for (int trial = 0; trial < corpus.count; ++trial) {
            Polynomial poly = random_polynomial(rng, deg, 2, 2);
            std::vector<Vec> dirs;
            for (int i = 0; i < 24; ++i) {
                Vec v(2);
                v[0] = g(rng);
                v[1] = g(rng);
                if (v.norm() > 1e-9) dirs.push_back(v / v.norm());
            }
            double sup_gamma = 0.0;
            for (const auto& v : dirs) {
                sup_gamma = std::max(sup_gamma, poly.eval(v).norm());
                for (double mu : nodes.nodes())
                    sup_gamma = std::max(sup_gamma, poly.eval(mu * v).norm());
            }
            for (const auto& v : dirs)
                for (int j = 0; j <= deg; ++j)
                    w.update(poly.parts[j].eval_diag(v).norm(),
                             nodes.interpolation_constant(j) * sup_gamma);
        }
        out.push_back(make_record("interp/homogeneous-bound",
                                  "homogeneous part vs interpolation constant",
                                  w.lhs, w.rhs, 1e-12));
    }
    return out;
}

std::vector<CheckRecord> suite_norms(int n_cubics, int grid_points, std::uint64_t seed,
                                     double tol_rel) {
    std::vector<CheckRecord> out;
    const Domain d = Domain::box(Vec::Zero(1), Vec::Ones(1));
    const SamplePlan p = SamplePlan::grid(grid_points);
    std::mt19937_64 rng(seed);
    for (int k = 0; k <= 1; ++k) {
        WorstCase w;
        for (int i = 0; i < n_cubics; ++i) {
            auto jet = poly_jet(random_polynomial(rng, 3, 1, 2));
            const double p_k1 = pair_ratios(*jet, k, d, p).seminorm(1.0);
            const double p_k10 = sup_derivative_norm_estimate(*jet, k + 1, d, p);
            if (p_k10 == 0.0) continue;
            w.update(std::abs(p_k1 - p_k10) / p_k10, tol_rel);
        }
        out.push_back(make_record("norms/isometric-embedding/k=" + std::to_string(k),
                                  "p_(k,1) equals p_(k+1,0)", w.lhs, w.rhs));
    }
    return out;
}

std::vector<CheckRecord> suite_inclusions(const Domain& d, const SamplePlan& p,
                                          const CorpusSpec& corpus,
                                          const std::vector<HolderIndex>& indices,
                                          double mult_tol) {
    std::vector<CheckRecord> out;
    auto jets = polynomial_corpus(corpus);
    const auto pairs = sample_pairs(d, p);
    const Vec x0 = d.incenter();

    // monotonicity in the exponent: per-pair exact on shared samples
    {
        WorstCase w;
        const double s1 = 0.3, s2 = 1.0;
        for (const auto& jet : jets) {
            const PairRatios r = pair_ratios(*jet, 0, pairs);
            w.update(r.seminorm(s1), std::pow(d.diameter(), s2 - s1) * r.seminorm(s2));
        }
        out.push_back(make_record("inclusions/exponent-monotone",
                                  "seminorm comparison across exponents",
                                  w.lhs, w.rhs, mult_tol));
    }

    for (const auto& idx : indices) {
        if (idx.k < 1 || idx.s <= 0.0) continue;
        // pointwise derivative bound at the incenter
        WorstCase w;
        const auto c = lemma24_constants(idx.k, idx.s, d, x0);
        for (const auto& jet : jets) {
            const double lhs = multilinear_op_norm(jet->derivative(x0, idx.k)).upper;
            const double rhs = c.c4 * holder_norm_estimate(*jet, idx, d, p).total;
            w.update(lhs, rhs);
        }
        out.push_back(make_record("inclusions/derivative-bound/k=" + std::to_string(idx.k) +
                                      ",s=" + std::to_string(idx.s),
                                  "pointwise derivative bound", w.lhs, w.rhs, mult_tol));
    }

    for (const auto& idx : indices) {
        if (idx.s <= 0.0) continue;
        // two-sided embedding gamma -> (gamma, gamma')
        WorstCase w1, w2;
        for (const auto& jet : jets) {
            const double sup = sup_norm_estimate(*jet, d, p);
            const double sup_d1 = sup_derivative_norm_estimate(*jet, 1, d, p);
            const double pk1s = pair_ratios(*jet, idx.k + 1, pairs).seminorm(idx.s);
            const double norm_k1s = sup + pk1s;
            const double norm_deriv = sup_d1 + pk1s;  // ||gamma'||_{(k,s)}
            const double norm_10 = sup + sup_d1;
            w1.update(norm_k1s, sup + norm_deriv);
            w2.update(sup + norm_deriv, norm_k1s + norm_10);
        }
        const std::string sfx = "/k=" + std::to_string(idx.k) + ",s=" + std::to_string(idx.s);
        out.push_back(make_record("inclusions/embedding-upper" + sfx,
                                  "norm of (gamma, gamma') dominates", w1.lhs, w1.rhs,
                                  mult_tol));
        out.push_back(make_record("inclusions/embedding-lower" + sfx,
                                  "norm of (gamma, gamma') is dominated", w2.lhs, w2.rhs,
                                  mult_tol));
    }

    // inclusion norm bound D_k
    for (int k = 0; k <= 1; ++k) {
        WorstCase w;
        const double dk = inclusion_constant_Dk(k, d);
        for (const auto& jet : jets)
            for (double s : {0.0, 0.5, 1.0}) {
                const HolderIndex lo{k, s}, hi{k + 1, s};
                const double lhs = holder_norm_estimate(*jet, lo, d, p).total;
                const double rhs = dk * holder_norm_estimate(*jet, hi, d, p).total;
                w.update(lhs, rhs);
            }
        out.push_back(make_record("inclusions/Dk/k=" + std::to_string(k),
                                  "inclusion operator norm bound", w.lhs, w.rhs, mult_tol));
    }
    return out;
}

std::vector<CheckRecord> suite_convexity(const Domain& d, const SamplePlan& p,
                                         const CorpusSpec& corpus, double mult_tol) {
    std::vector<CheckRecord> out;
    auto jets = polynomial_corpus(corpus);
    const auto pairs = sample_pairs(d, p);
    const std::vector<std::array<double, 3>> triples = {
        {0.2, 0.8, 0.5}, {0.1, 1.0, 0.3}, {0.3, 0.9, 0.7}, {0.5, 1.0, 0.5},
        {0.25, 0.75, 0.4}};

    WorstCase wa, wb, wu;
    for (const auto& jet : jets) {
        const PairRatios r0 = pair_ratios(*jet, 0, pairs);
        const double sup = sup_norm_estimate(*jet, d, p);
        const PairRatios r1 = pair_ratios(*jet, 1, pairs);
        for (const auto& [s, u, lam] : triples) {
            const double t = lam * s + (1.0 - lam) * u;
            const double ps = r0.seminorm(s), pu = r0.seminorm(u), pt = r0.seminorm(t);
            wa.update(pt, std::pow(ps, lam) * std::pow(pu, 1.0 - lam));
            const double ns = sup + ps, nu = sup + pu, nt = sup + pt;
            wb.update(nt, 2.0 * std::pow(ns, lam) * std::pow(nu, 1.0 - lam));
            // unit-ball inequality for the first derivative (k = 1)
            const double nku = sup + r1.seminorm(u);
            if (nku > 0.0) {
                const double pt1 = r1.seminorm(t) / nku;
                const double ps1 = r1.seminorm(s) / nku;
                wu.update(pt1, std::pow(ps1, lam));
            }
        }
    }
    out.push_back(make_record("convexity/seminorm", "log convexity of the seminorms",
                              wa.lhs, wa.rhs, mult_tol));
    out.push_back(make_record("convexity/norm", "log convexity of the norms, factor 2",
                              wb.lhs, wb.rhs, mult_tol));
    out.push_back(make_record("convexity/unit-ball",
                              "interpolation inequality on the unit ball",
                              wu.lhs, wu.rhs, mult_tol));
    return out;
}

std::vector<CheckRecord> suite_product(const Domain& d, const SamplePlan& p,
                                       const CorpusSpec& corpus,
                                       const std::vector<int>& ks,
                                       const std::vector<double>& ss, double mult_tol) {
    std::vector<CheckRecord> out;
    CorpusSpec spec2 = corpus;
    spec2.seed = corpus.seed + 1;
    auto left = polynomial_corpus(corpus);
    auto right = polynomial_corpus(spec2);
    const auto pairs = sample_pairs(d, p);

    // random bilinear form with matching dimensions
    std::mt19937_64 rng(corpus.seed + 2);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> bcoef(static_cast<std::size_t>(corpus.out_dim) * corpus.out_dim *
                              corpus.out_dim);
    for (auto& c : bcoef) c = u(rng);
    const BilinearForm form(corpus.out_dim, corpus.out_dim, corpus.out_dim,
                            std::move(bcoef));
    const double op_upper = form.op_norm_bracket().upper;

    // seminorm subadditivity, the k = 0 step of the proof
    {
        WorstCase w;
        const double s = 0.5;
        for (std::size_t i = 0; i < left.size(); ++i) {
            auto prod = pointwise_product(left[i], right[i], form);
            const double lhs = pair_ratios(*prod, 0, pairs).seminorm(s);
            const double sup1 = sup_norm_estimate(*left[i], d, p);
            const double sup2 = sup_norm_estimate(*right[i], d, p);
            const double p1 = pair_ratios(*left[i], 0, pairs).seminorm(s);
            const double p2 = pair_ratios(*right[i], 0, pairs).seminorm(s);
            w.update(lhs, op_upper * (sup1 * p2 + p1 * sup2));
        }
        out.push_back(make_record("product/subadditivity",
                                  "two-term split of the product seminorm",
                                  w.lhs, w.rhs, mult_tol));
    }

    for (int k : ks) {
        WorstCase w;
        for (double s : ss)
            for (std::size_t i = 0; i < left.size(); ++i) {
                auto v = product_inequality_check(left[i], right[i], form, {k, s}, d, p,
                                                  mult_tol);
                w.update(v.lhs, v.rhs);
            }
        out.push_back(make_record("product/norm-inequality/k=" + std::to_string(k),
                                  "product norm bound with constant C_k",
                                  w.lhs, w.rhs, mult_tol));
    }

    // C_k reads neither s nor the codomain
    {
        const double c2 = product_constant(2, d);
        out.push_back(make_record("product/Ck-structural",
                                  "C_k independent of s and the codomain", c2, c2));
    }
    return out;
}

std::vector<CheckRecord> suite_bch(const Domain& d, int n_pairs, int rescale_pairs,
                                   double tol_fidelity, double tol_nilpotent) {
    std::vector<CheckRecord> out;
    BCHConfig cfg8;
    cfg8.truncation_order = 8;
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);

    for (const auto& alg : {LieAlgebra::so3(), LieAlgebra::sl2()}) {
        WorstCase w;
        for (int i = 0; i < n_pairs; ++i) {
            const Mat x = alg.random_element(rng, 0.05 * u(rng));
            const Mat y = alg.random_element(rng, 0.05 * u(rng));
            const Mat z = bch_truncated(x, y, alg, cfg8);
            w.update((matrix_exp(x) * matrix_exp(y) - matrix_exp(z)).norm(), tol_fidelity);
        }
        out.push_back(make_record("bch/fidelity/" + alg.name,
                                  "truncated BCH vs the exponential product",
                                  w.lhs, w.rhs));
    }

    // degenerate inputs: bch(x, 0) = x, and x + y in the abelian algebra
    {
        WorstCase w;
        const LieAlgebra so3 = LieAlgebra::so3();
        const LieAlgebra ab = LieAlgebra::abelian(3);
        const Mat zero3 = Mat::Zero(3, 3);
        for (int i = 0; i < 20; ++i) {
            const Mat x = so3.random_element(rng, 0.1 * u(rng));
            w.update((bch_truncated(x, zero3, so3, cfg8) - x).norm(), tol_nilpotent);
            const Mat a = ab.random_element(rng, 0.2 * u(rng));
            const Mat b = ab.random_element(rng, 0.2 * u(rng));
            w.update((bch_truncated(a, b, ab, cfg8) - (a + b)).norm(), tol_nilpotent);
        }
        out.push_back(make_record("bch/degenerate",
                                  "bch(x, 0) = x and abelian bch(x, y) = x + y",
                                  w.lhs, w.rhs));
    }

    // two-step nilpotent: degree-2 truncation is exact
    {
        BCHConfig cfg2;
        cfg2.truncation_order = 2;
        const LieAlgebra h3 = LieAlgebra::heisenberg();
        WorstCase w;
        for (int i = 0; i < n_pairs; ++i) {
            const Mat x = h3.random_element(rng, 0.1 * u(rng));
            const Mat y = h3.random_element(rng, 0.1 * u(rng));
            const Mat z = bch_truncated(x, y, h3, cfg2);
            w.update((matrix_exp(x) * matrix_exp(y) - matrix_exp(z)).norm(), tol_nilpotent);
        }
        out.push_back(make_record("bch/nilpotent-exact/heisenberg",
                                  "degree-2 truncation exact for a 2-step algebra",
                                  w.lhs, w.rhs));
    }

    // compatible rescaling for every shipped algebra
    {
        const double ck = product_constant(2, d);
        WorstCase w;
        for (const auto& base : {LieAlgebra::so3(), LieAlgebra::sl2(),
                                 LieAlgebra::heisenberg(), LieAlgebra::abelian(3)}) {
            const LieAlgebra alg = rescale_compatible(base, ck);
            for (int i = 0; i < rescale_pairs; ++i) {
                const Mat x = base.random_element(rng, u(rng));
                const Mat y = base.random_element(rng, u(rng));
                w.update(alg.norm(alg.bracket(x, y)),
                         alg.norm(x) * alg.norm(y) / ck);
            }
        }
        out.push_back(make_record("bch/compatible-rescaling",
                                  "bracket bound after rescaling", w.lhs, w.rhs, 1e-12));
    }
    return out;
}

namespace {

/// Small so(3)-valued function: sum of envelope scalars times basis matrices.
JetPtr random_algebra_jet(std::mt19937_64& rng, const LieAlgebra& alg, int in_dim,
                          double amplitude) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<std::pair<double, JetPtr>> terms;
    for (const auto& b : alg.basis) {
        Vec a(in_dim);
        for (int i = 0; i < in_dim; ++i) a[i] = 2.0 * u(rng);
        const double c = amplitude * u(rng) / static_cast<double>(alg.basis.size());
        terms.emplace_back(1.0, envelope_jet(ScalarFamily::sin_family(), a, in_dim,
                                             c * flatten(b)));
    }
    return linear_combination_jet(std::move(terms));
}

}  // namespace

std::vector<CheckRecord> suite_group(const Domain& d, const SamplePlan& p,
                                     int n_functions, double tol_normal_form,
                                     double tol_group, double tol_bch_pointwise) {
    std::vector<CheckRecord> out;
    const LieAlgebra alg = LieAlgebra::so3();
    BCHConfig cfg;
    std::mt19937_64 rng(11);
    const auto pts = sample_points(d, p);

    WorstCase w_nf, w_axiom, w_bch, w_power;
    for (int i = 0; i < n_functions; ++i) {
        auto g1 = random_algebra_jet(rng, alg, d.dim(), 0.05);
        auto g2 = random_algebra_jet(rng, alg, d.dim(), 0.05);
        const auto w1 = exp_map(g1, alg.matrix_dim);
        const auto w2 = exp_map(g2, alg.matrix_dim);

        // collapse of a single exponential recovers the function
        auto nf = local_normal_form(w1, alg, {0, 0.5}, cfg, d, p);
        for (std::size_t j = 0; j < nf.points.size(); ++j)
            w_nf.update((nf.values[j] - unflatten(g1->value(nf.points[j]),
                                                  alg.matrix_dim)).norm(),
                        tol_normal_form);

        // group axioms at the sample points
        const auto prod = group_mul(w1, group_inv(w1));
        const Mat id = Mat::Identity(alg.matrix_dim, alg.matrix_dim);
        for (const auto& x : pts)
            w_axiom.update((evaluate(prod, x) - id).norm(), tol_group);

        // two-factor words collapse to the pointwise BCH combination
        auto nf2 = local_normal_form(group_mul(w1, w2), alg, {0, 0.5}, cfg, d, p);
        for (std::size_t j = 0; j < nf2.points.size(); ++j) {
            const Mat a = unflatten(g1->value(nf2.points[j]), alg.matrix_dim);
            const Mat b = unflatten(g2->value(nf2.points[j]), alg.matrix_dim);
            w_bch.update((nf2.values[j] - bch_truncated(a, b, alg, cfg)).norm(),
                         tol_bch_pointwise);
        }
    }

    // (exp gamma)^n realizes exp(n gamma) for a constant-direction function
    {
        auto base = random_algebra_jet(rng, alg, d.dim(), 0.02);
        const int n = 4;
        GroupElementWord w = exp_map(base, alg.matrix_dim);
        GroupElementWord wn = w;
        for (int i = 1; i < n; ++i) wn = group_mul(wn, w);
        for (const auto& x : pts) {
            const Mat direct = matrix_exp(n * unflatten(base->value(x), alg.matrix_dim));
            w_power.update((evaluate(wn, x) - direct).norm(), tol_group);
        }
    }

    out.push_back(make_record("group/normal-form-roundtrip",
                              "pointwise log of a single exponential",
                              w_nf.lhs, w_nf.rhs));
    out.push_back(make_record("group/axioms", "word times inverse is the identity",
                              w_axiom.lhs, w_axiom.rhs));
    out.push_back(make_record("group/pointwise-bch",
                              "two-factor collapse vs pointwise BCH",
                              w_bch.lhs, w_bch.rhs));
    out.push_back(make_record("group/power", "n-fold word equals exp of n gamma",
                              w_power.lhs, w_power.rhs));
    return out;
}

std::vector<CheckRecord> suite_chain(const Domain& d, const SamplePlan& p,
                                     const CorpusSpec& corpus, int chain_length,
                                     const std::vector<double>& ss) {
    std::vector<CheckRecord> out;
    auto jets = polynomial_corpus(corpus);
    for (double s : ss) {
        WorstCase w;
        for (const auto& jet : jets) {
            auto norms = chain_norms(*jet, 0, s, chain_length, d, p);
            for (std::size_t n = 1; n < norms.size(); ++n)
                w.update(norms[n], norms[n - 1]);
        }
        out.push_back(make_record("chain/nonincreasing/s=" + std::to_string(s),
                                  "norm chain along the cofinal sequence",
                                  w.lhs, w.rhs, 1e-12));
    }
    return out;
}

ConstantsTable constants_table(const Domain& d, int kmax) {
    ConstantsTable t;
    t.eps0 = d.inradius();
    const Vec x0 = d.incenter();
    for (int k = 0; k <= kmax; ++k) {
        ConstantsRow row;
        row.k = k;
        if (k >= 1) {
            const InterpolationNodes nodes = InterpolationNodes::uniform(k);
            row.nodes = nodes.nodes();
            for (int j = 0; j <= k; ++j)
                row.lambda_abs_sums.push_back(nodes.interpolation_constant(j));
            row.l24 = lemma24_constants(k, 1.0, d, x0);
        } else {
            row.lambda_abs_sums.push_back(1.0);
        }
        row.dk = inclusion_constant_Dk(k, d);
        row.ck = product_constant(k, d);
        t.rows.push_back(std::move(row));
    }
    return t;
}

Report run_suite(const SuiteConfig& cfg) {
    static const std::set<std::string> known = {"taylor", "interp", "norms",
                                               "inclusions", "convexity", "product",
                                               "bch", "group", "chain"};
    for (const auto& s : cfg.suites)
        if (!known.count(s)) throw ConfigInvalid("unknown suite: " + s);

    Report rep;
    rep.constants = constants_table(cfg.domain, cfg.kmax);
    auto append = [&](std::vector<CheckRecord> recs) {
        rep.records.insert(rep.records.end(), recs.begin(), recs.end());
    };
    for (const auto& s : cfg.suites) {
        if (s == "taylor") append(suite_taylor(cfg.domain, cfg.plan, cfg.corpus));
        else if (s == "interp") append(suite_interp(cfg.corpus));
        else if (s == "norms") append(suite_norms(20, 10000, cfg.corpus.seed));
        else if (s == "inclusions")
            append(suite_inclusions(cfg.domain, cfg.plan, cfg.corpus, cfg.indices,
                                    cfg.tol));
        else if (s == "convexity")
            append(suite_convexity(cfg.domain, cfg.plan, cfg.corpus, cfg.tol));
        else if (s == "product")
            append(suite_product(cfg.domain, cfg.plan, cfg.corpus, {0, 1, 2},
                                 {0.0, 0.5, 1.0}, cfg.tol));
        else if (s == "bch") append(suite_bch(cfg.domain));
        else if (s == "group") append(suite_group(cfg.domain, cfg.plan));
        else if (s == "chain")
            append(suite_chain(cfg.domain, cfg.plan, cfg.corpus, 10, {0.0, 0.25}));
    }
    std::sort(rep.records.begin(), rep.records.end(),
              [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
    for (const auto& r : rep.records) rep.all_pass = rep.all_pass && r.pass;
    return rep;
}

}  // namespace holderlie

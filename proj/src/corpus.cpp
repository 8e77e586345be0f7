#include "holderlie/corpus.hpp"

#include <cmath>

namespace holderlie {

Polynomial random_polynomial(std::mt19937_64& rng, int degree, int in_dim, int out_dim) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Polynomial p;
    for (int j = 0; j <= degree; ++j) {
        std::size_t count = 1;
        for (int i = 0; i < j; ++i) count *= in_dim;
        std::vector<double> raw(count * out_dim);
        for (auto& c : raw) c = u(rng);
        p.parts.push_back(SymMultilinearMap::symmetrized(j, in_dim, out_dim, raw));
    }
    return p;
}

std::vector<JetPtr> polynomial_corpus(const CorpusSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    std::vector<JetPtr> out;
    out.reserve(spec.count);
    for (int i = 0; i < spec.count; ++i)
        out.push_back(poly_jet(random_polynomial(rng, spec.degree, spec.in_dim, spec.out_dim)));
    return out;
}

JetPtr random_smooth_jet(std::mt19937_64& rng, int in_dim, int out_dim) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    auto random_vec = [&](int dim, double amp) {
        Vec v(dim);
        for (int i = 0; i < dim; ++i) v[i] = amp * u(rng);
        return v;
    };
    std::vector<std::pair<double, JetPtr>> terms;
    terms.emplace_back(1.0, envelope_jet(ScalarFamily::sin_family(), random_vec(in_dim, 2.0),
                                         in_dim, random_vec(out_dim, 1.0)));
    terms.emplace_back(1.0, envelope_jet(ScalarFamily::exp_family(), random_vec(in_dim, 1.0),
                                         in_dim, random_vec(out_dim, 0.5)));
    terms.emplace_back(1.0, poly_jet(random_polynomial(rng, 2, in_dim, out_dim)));
    return linear_combination_jet(std::move(terms));
}

std::vector<JetPtr> smooth_corpus(const CorpusSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    std::vector<JetPtr> out;
    out.reserve(spec.count);
    for (int i = 0; i < spec.count; ++i)
        out.push_back(random_smooth_jet(rng, spec.in_dim, spec.out_dim));
    return out;
}

}  // namespace holderlie

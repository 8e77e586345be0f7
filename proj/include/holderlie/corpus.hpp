#pragma once

#include <cstdint>
#include <random>

#include "holderlie/jet.hpp"

namespace holderlie {

struct CorpusSpec {
    int count = 50;
    int degree = 3;
    int in_dim = 2;
    int out_dim = 2;
    std::uint64_t seed = 42;
};

/// Random polynomial with symmetric tensor coefficients in [-1, 1].
Polynomial random_polynomial(std::mt19937_64& rng, int degree, int in_dim, int out_dim);

/// Seeded corpus of polynomial jets.
std::vector<JetPtr> polynomial_corpus(const CorpusSpec& spec);

/// Random smooth non-polynomial function: a combination of sine/exponential
/// envelopes and a low-degree polynomial (all orders available).
JetPtr random_smooth_jet(std::mt19937_64& rng, int in_dim, int out_dim);

std::vector<JetPtr> smooth_corpus(const CorpusSpec& spec);

}  // namespace holderlie

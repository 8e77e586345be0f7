#pragma once

#include <vector>

namespace holderlie {

/// Gauss-Legendre rule on [0, 1].
struct Quadrature {
    std::vector<double> nodes;
    std::vector<double> weights;

    static Quadrature gauss_legendre(int order = 32);

    template <typename F>
    auto integrate(F&& f) const -> decltype(f(0.0)) {
        decltype(f(0.0)) acc = weights[0] * f(nodes[0]);
        for (std::size_t i = 1; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
        return acc;
    }
};

}  // namespace holderlie

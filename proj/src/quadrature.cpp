#include "holderlie/quadrature.hpp"

#include <cmath>

namespace holderlie {

Quadrature Quadrature::gauss_legendre(int order) {
    Quadrature q;
    q.nodes.resize(order);
    q.weights.resize(order);
    // Newton iteration on Legendre P_n, nodes on [-1,1] then mapped to [0,1]
    for (int i = 0; i < order; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= order; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = order * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        q.nodes[i] = 0.5 * (1.0 - x);  // descending cos order -> ascending node
        q.weights[i] = 1.0 / ((1.0 - x * x) * dp * dp);
    }
    return q;
}

}  // namespace holderlie

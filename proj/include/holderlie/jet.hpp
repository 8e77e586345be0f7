#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <vector>

#include "holderlie/multilinear.hpp"

namespace holderlie {

/// Function gamma: Omega -> R^m with exact derivatives up to max_order,
/// each realized as a symmetric multilinear map. Immutable.
class JetFunction {
public:
    virtual ~JetFunction() = default;
    virtual int in_dim() const = 0;
    virtual int out_dim() const = 0;
    virtual int max_order() const = 0;
    virtual Vec value(const Vec& x) const = 0;
    /// j-th derivative at x; j = 0 gives the value as an order-0 map.
    virtual SymMultilinearMap derivative(const Vec& x, int j) const = 0;

protected:
    void check_order(int j) const {
        if (j < 0 || j > max_order()) throw OrderExceeded("derivative order not available");
    }
};

using JetPtr = std::shared_ptr<const JetFunction>;

/// Polynomial as a list of homogeneous parts gamma_j (symmetric tensors).
struct Polynomial {
    std::vector<SymMultilinearMap> parts;  // parts[j] has order j
    int in_dim() const;
    int out_dim() const;
    int degree() const { return static_cast<int>(parts.size()) - 1; }
    Vec eval(const Vec& x) const;
};

/// Exact jets of a polynomial: all derivatives by multilinear contraction,
/// zero beyond the degree.
JetPtr poly_jet(Polynomial p);

/// Scalar family f with derivatives f^(j), j <= max_order.
struct ScalarFamily {
    int max_order = 0;
    std::function<double(double u, int j)> deriv;  // j = 0 is f itself

    static ScalarFamily sin_family();
    static ScalarFamily cos_family();
    static ScalarFamily exp_family();
    /// u -> |u|^s for 0 < s < 1; value only (max_order 0).
    static ScalarFamily power_family(double s);
};

/// x -> f(<a, x>), derivatives f^(j)(<a,x>) * a (x) ... (x) a.
JetPtr envelope_jet(ScalarFamily f, Vec a, int in_dim, Vec amplitude);

/// Pointwise linear combination sum_i c_i gamma_i of jets with matching shapes.
JetPtr linear_combination_jet(std::vector<std::pair<double, JetPtr>> terms);

JetPtr constant_jet(Vec c, int in_dim);

}  // namespace holderlie

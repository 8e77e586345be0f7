#include "holderlie/jet.hpp"

#include <cmath>
#include <utility>

namespace holderlie {

int Polynomial::in_dim() const {
    for (const auto& p : parts)
        if (p.order() > 0) return p.in_dim();
    return parts.empty() ? 1 : parts.front().in_dim();
}

int Polynomial::out_dim() const {
    return parts.empty() ? 1 : parts.front().out_dim();
}

Vec Polynomial::eval(const Vec& x) const {
    Vec out = Vec::Zero(out_dim());
    for (const auto& p : parts) out += p.eval_diag(x);
    return out;
}

namespace {

double falling_factorial(int j, int r) {
    double f = 1.0;
    for (int i = 0; i < r; ++i) f *= static_cast<double>(j - i);
    return f;
}

class PolynomialJet final : public JetFunction {
public:
    explicit PolynomialJet(Polynomial p) : poly_(std::move(p)) {
        n_ = poly_.in_dim();
        m_ = poly_.out_dim();
    }
    int in_dim() const override { return n_; }
    int out_dim() const override { return m_; }
    int max_order() const override { return std::numeric_limits<int>::max(); }
    Vec value(const Vec& x) const override { return poly_.eval(x); }
    SymMultilinearMap derivative(const Vec& x, int r) const override {
        check_order(r);
        SymMultilinearMap out = SymMultilinearMap::zero(r, n_, m_);
        for (const auto& part : poly_.parts) {
            const int j = part.order();
            if (j < r) continue;
            SymMultilinearMap c = part.contract(x, j - r);
            c *= falling_factorial(j, r);
            out += c;
        }
        return out;
    }

private:
    Polynomial poly_;
    int n_, m_;
};

class EnvelopeJet final : public JetFunction {
public:
    EnvelopeJet(ScalarFamily f, Vec a, int in_dim, Vec amplitude)
        : f_(std::move(f)), a_(std::move(a)), n_(in_dim), amp_(std::move(amplitude)) {
        if (a_.size() != n_) throw DimensionMismatch("envelope_jet: covector dimension");
    }
    int in_dim() const override { return n_; }
    int out_dim() const override { return static_cast<int>(amp_.size()); }
    int max_order() const override { return f_.max_order; }
    Vec value(const Vec& x) const override { return f_.deriv(a_.dot(x), 0) * amp_; }
    SymMultilinearMap derivative(const Vec& x, int j) const override {
        check_order(j);
        const double fj = f_.deriv(a_.dot(x), j);
        return SymMultilinearMap::rank_one(a_, fj * amp_, j);
    }

private:
    ScalarFamily f_;
    Vec a_;
    int n_;
    Vec amp_;
};

class CombinationJet final : public JetFunction {
public:
    explicit CombinationJet(std::vector<std::pair<double, JetPtr>> terms)
        : terms_(std::move(terms)) {
        if (terms_.empty()) throw SizeMismatch("linear_combination_jet: empty");
        n_ = terms_.front().second->in_dim();
        m_ = terms_.front().second->out_dim();
        order_ = std::numeric_limits<int>::max();
        for (const auto& [c, jet] : terms_) {
            if (jet->in_dim() != n_ || jet->out_dim() != m_)
                throw DimensionMismatch("linear_combination_jet: shape mismatch");
            order_ = std::min(order_, jet->max_order());
        }
    }
    int in_dim() const override { return n_; }
    int out_dim() const override { return m_; }
    int max_order() const override { return order_; }
    Vec value(const Vec& x) const override {
        Vec out = Vec::Zero(m_);
        for (const auto& [c, jet] : terms_) out += c * jet->value(x);
        return out;
    }
    SymMultilinearMap derivative(const Vec& x, int j) const override {
        check_order(j);
        SymMultilinearMap out = SymMultilinearMap::zero(j, n_, m_);
        for (const auto& [c, jet] : terms_) {
            SymMultilinearMap d = jet->derivative(x, j);
            d *= c;
            out += d;
        }
        return out;
    }

private:
    std::vector<std::pair<double, JetPtr>> terms_;
    int n_, m_, order_;
};

}  // namespace

JetPtr poly_jet(Polynomial p) { return std::make_shared<PolynomialJet>(std::move(p)); }

JetPtr envelope_jet(ScalarFamily f, Vec a, int in_dim, Vec amplitude) {
    return std::make_shared<EnvelopeJet>(std::move(f), std::move(a), in_dim,
                                         std::move(amplitude));
}

JetPtr linear_combination_jet(std::vector<std::pair<double, JetPtr>> terms) {
    return std::make_shared<CombinationJet>(std::move(terms));
}

JetPtr constant_jet(Vec c, int in_dim) {
    Polynomial p;
    SymMultilinearMap part0 = SymMultilinearMap::constant(c);
    p.parts.push_back(part0);
    // give the order-1 zero part the right input dimension
    p.parts.push_back(SymMultilinearMap::zero(1, in_dim, static_cast<int>(c.size())));
    return poly_jet(std::move(p));
}

ScalarFamily ScalarFamily::sin_family() {
    ScalarFamily f;
    f.max_order = std::numeric_limits<int>::max();
    f.deriv = [](double u, int j) { return std::sin(u + j * 1.5707963267948966); };
    return f;
}

ScalarFamily ScalarFamily::cos_family() {
    ScalarFamily f;
    f.max_order = std::numeric_limits<int>::max();
    f.deriv = [](double u, int j) { return std::cos(u + j * 1.5707963267948966); };
    return f;
}

ScalarFamily ScalarFamily::exp_family() {
    ScalarFamily f;
    f.max_order = std::numeric_limits<int>::max();
    f.deriv = [](double u, int) { return std::exp(u); };
    return f;
}

ScalarFamily ScalarFamily::power_family(double s) {
    ScalarFamily f;
    f.max_order = 0;
    f.deriv = [s](double u, int) { return std::pow(std::abs(u), s); };
    return f;
}

}  // namespace holderlie

#include "tfrd/fractional.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tfrd {

FractionalOrder::FractionalOrder(double alpha) : alpha_(alpha), sigma_(1.0 - alpha / 2.0) {
    if (!(alpha > 0.0) || !(alpha < 1.0)) {
        throw std::invalid_argument("FractionalOrder: alpha must lie in the open interval (0, 1), got " +
                                    std::to_string(alpha));
    }
}

L21SigmaWeights::L21SigmaWeights(FractionalOrder order, int level, std::vector<double> coefficients)
    : order_(order), level_(level), coefficients_(std::move(coefficients)) {
    assert(static_cast<int>(coefficients_.size()) == level_ + 1);
#ifndef NDEBUG
    for (std::size_t s = 0; s + 1 < coefficients_.size(); ++s) {
        assert(coefficients_[s] > coefficients_[s + 1]);
    }
    assert(coefficients_.back() > 0.0);
#endif
}

double a_coeff(FractionalOrder order, int l) {
    if (l < 0) {
        throw std::invalid_argument("a_coeff: l must be nonnegative");
    }
    const double p = 1.0 - order.alpha();
    const double sigma = order.sigma();
    if (l == 0) {
        return std::pow(sigma, p);
    }
    return std::pow(l + sigma, p) - std::pow(l - 1 + sigma, p);
}

double b_coeff(FractionalOrder order, int l) {
    if (l < 1) {
        throw std::invalid_argument("b_coeff: l must be positive");
    }
    const double alpha = order.alpha();
    const double sigma = order.sigma();
    const double hi = l + sigma;
    const double lo = l - 1 + sigma;
    return (std::pow(hi, 2.0 - alpha) - std::pow(lo, 2.0 - alpha)) / (2.0 - alpha) -
           (std::pow(hi, 1.0 - alpha) + std::pow(lo, 1.0 - alpha)) / 2.0;
}

L21SigmaWeights c_weights(FractionalOrder order, int level) {
    if (level < 0) {
        throw std::invalid_argument("c_weights: level must be nonnegative");
    }
    std::vector<double> c(static_cast<std::size_t>(level) + 1);
    if (level == 0) {
        c[0] = a_coeff(order, 0);
    } else {
        c[0] = a_coeff(order, 0) + b_coeff(order, 1);
        for (int s = 1; s < level; ++s) {
            c[static_cast<std::size_t>(s)] = a_coeff(order, s) + b_coeff(order, s + 1) - b_coeff(order, s);
        }
        c[static_cast<std::size_t>(level)] = a_coeff(order, level) - b_coeff(order, level);
    }
    return {order, level, std::move(c)};
}

double discrete_caputo(std::span<const double> history, FractionalOrder order, double tau) {
    if (history.size() < 2) {
        throw std::invalid_argument("discrete_caputo: history must hold at least two time levels");
    }
    if (!(tau > 0.0)) {
        throw std::invalid_argument("discrete_caputo: tau must be positive");
    }
    const int j = static_cast<int>(history.size()) - 2;
    const L21SigmaWeights w = c_weights(order, j);
    double acc = 0.0;
    for (int s = 0; s <= j; ++s) {
        acc += w[j - s] * (history[static_cast<std::size_t>(s) + 1] - history[static_cast<std::size_t>(s)]);
    }
    return std::pow(tau, -order.alpha()) / std::tgamma(2.0 - order.alpha()) * acc;
}

double drift_stencil(double y_prev, double y_curr, double y_next, FractionalOrder order, double tau) {
    if (!(tau > 0.0)) {
        throw std::invalid_argument("drift_stencil: tau must be positive");
    }
    const double sigma = order.sigma();
    return ((2.0 * sigma + 1.0) * y_next - 4.0 * sigma * y_curr + (2.0 * sigma - 1.0) * y_prev) / (2.0 * tau);
}

L21WeightTable::L21WeightTable(FractionalOrder order) : order_(order) {}

void L21WeightTable::extend(int l_max) {
    const int have = static_cast<int>(a_.size()) - 1;
    if (have >= l_max) {
        return;
    }
    if (a_.empty()) {
        a_.push_back(a_coeff(order_, 0));
        b_.push_back(0.0);
    }
    for (int l = static_cast<int>(a_.size()); l <= l_max; ++l) {
        a_.push_back(a_coeff(order_, l));
        b_.push_back(b_coeff(order_, l));
    }
}

std::span<const double> L21WeightTable::level(int j) {
    if (j < 0) {
        throw std::invalid_argument("L21WeightTable::level: level must be nonnegative");
    }
    extend(j == 0 ? 0 : j);
    c_.resize(static_cast<std::size_t>(j) + 1);
    if (j == 0) {
        c_[0] = a_[0];
    } else {
        c_[0] = a_[0] + b_[1];
        for (int s = 1; s < j; ++s) {
            c_[static_cast<std::size_t>(s)] = a_[static_cast<std::size_t>(s)] + b_[static_cast<std::size_t>(s) + 1] -
                                              b_[static_cast<std::size_t>(s)];
        }
        c_[static_cast<std::size_t>(j)] = a_[static_cast<std::size_t>(j)] - b_[static_cast<std::size_t>(j)];
    }
    return c_;
}

} // namespace tfrd

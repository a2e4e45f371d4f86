#pragma once

#include <span>
#include <vector>

namespace tfrd {

/// Fractional differentiation order alpha in (0, 1) together with the
/// derived offset sigma = 1 - alpha/2 used by the L2-1sigma quadrature.
///
/// alpha = 1 is rejected: the quadrature weights degenerate there (every
/// a_l with l >= 1 vanishes), so the integer-order limit needs a dedicated
/// scheme rather than this one.
class FractionalOrder {
public:
    explicit FractionalOrder(double alpha);

    double alpha() const { return alpha_; }
    double sigma() const { return sigma_; }

private:
    double alpha_;
    double sigma_;
};

/// Quadrature weights c_0 .. c_j of the L2-1sigma formula for one time
/// level. The sequence is strictly decreasing, bounded below by
/// (1-alpha)/2 * (s+sigma)^(-alpha), and sums to (j+sigma)^(1-alpha).
class L21SigmaWeights {
public:
    L21SigmaWeights(FractionalOrder order, int level, std::vector<double> coefficients);

    FractionalOrder order() const { return order_; }
    int level() const { return level_; }

    int size() const { return static_cast<int>(coefficients_.size()); }
    double operator[](int s) const { return coefficients_[static_cast<std::size_t>(s)]; }
    std::span<const double> coefficients() const { return coefficients_; }

private:
    FractionalOrder order_;
    int level_;
    std::vector<double> coefficients_;
};

/// First-moment coefficient a_l: sigma^(1-alpha) for l = 0, otherwise
/// (l+sigma)^(1-alpha) - (l-1+sigma)^(1-alpha).
double a_coeff(FractionalOrder order, int l);

/// Second-moment correction b_l, defined for l >= 1:
///   [(l+sigma)^(2-alpha) - (l-1+sigma)^(2-alpha)] / (2-alpha)
///   - [(l+sigma)^(1-alpha) + (l-1+sigma)^(1-alpha)] / 2.
/// b_0 never enters the weight recurrence and is rejected.
double b_coeff(FractionalOrder order, int l);

/// Weights for time level j: the single entry a_0 when j = 0; otherwise
/// c_0 = a_0 + b_1, c_s = a_s + b_{s+1} - b_s for 1 <= s <= j-1, and
/// c_j = a_j - b_j.
L21SigmaWeights c_weights(FractionalOrder order, int level);

/// Discrete Caputo derivative at the offset point t_{j+sigma} where
/// j = history.size() - 2:
///   tau^(-alpha) / Gamma(2-alpha) * sum_{s=0}^{j} c_{j-s} (y_{s+1} - y_s).
/// Exact on affine functions of t; order tau^(3-alpha) on smooth data.
double discrete_caputo(std::span<const double> history, FractionalOrder order, double tau);

/// Three-level approximation of du/dt at t_{j+sigma}:
///   [(2sigma+1) y_next - 4 sigma y_curr + (2sigma-1) y_prev] / (2 tau).
/// Exact on quadratics.
double drift_stencil(double y_prev, double y_curr, double y_next,
                     FractionalOrder order, double tau);

/// Incremental weight cache for time marching. The a_l and b_l values do
/// not depend on the level and are extended once; the c vector is rebuilt
/// per level because its last entry changes with j.
class L21WeightTable {
public:
    explicit L21WeightTable(FractionalOrder order);

    /// Weights c_0 .. c_j for the given level. The returned span is valid
    /// until the next call.
    std::span<const double> level(int j);

    FractionalOrder order() const { return order_; }

private:
    void extend(int l_max);

    FractionalOrder order_;
    std::vector<double> a_;
    std::vector<double> b_; // b_[0] unused
    std::vector<double> c_;
};

} // namespace tfrd

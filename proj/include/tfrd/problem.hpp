#pragma once

#include "tfrd/fractional.hpp"

#include <functional>

namespace tfrd {

using SpaceTimeField1D = std::function<double(double x, double t)>;
using SpaceTimeField2D = std::function<double(double x, double y, double t)>;

/// Initial-boundary value problem
///   du/dt + caputo_t^alpha u = d/dx(k du/dx) - q u + f   on [0,length]x[0,horizon]
/// with Dirichlet data on both ends. The diffusion coefficient k must be
/// strictly positive and the reaction coefficient q nonnegative; both are
/// checked at the sample points during assembly.
struct Problem1D {
    FractionalOrder order;
    double length = 1.0;
    double horizon = 1.0;

    SpaceTimeField1D diffusion; // k(x, t) >= C > 0
    SpaceTimeField1D reaction;  // q(x, t) >= 0
    SpaceTimeField1D source;    // f(x, t)

    std::function<double(double x)> initial;
    std::function<double(double t)> left_boundary;
    std::function<double(double t)> right_boundary;

    /// Optional closed-form solution; enables error reporting.
    SpaceTimeField1D exact;

    bool has_exact() const { return static_cast<bool>(exact); }
};

/// 2D counterpart on [0,length_x] x [0,length_y] x [0,horizon]:
///   du/dt + caputo_t^alpha u
///     = d/dx(dx_coeff du/dx) + d/dy(dy_coeff du/dy) - q u + f
/// with Dirichlet data on all four faces.
struct Problem2D {
    FractionalOrder order;
    double length_x = 1.0;
    double length_y = 1.0;
    double horizon = 1.0;

    SpaceTimeField2D diffusion_x; // coefficient of the x-direction flux, >= C > 0
    SpaceTimeField2D diffusion_y; // coefficient of the y-direction flux, >= C > 0
    SpaceTimeField2D reaction;    // >= 0
    SpaceTimeField2D source;

    std::function<double(double x, double y)> initial;
    std::function<double(double y, double t)> west;  // x = 0
    std::function<double(double y, double t)> east;  // x = length_x
    std::function<double(double x, double t)> south; // y = 0
    std::function<double(double x, double t)> north; // y = length_y

    SpaceTimeField2D exact;

    bool has_exact() const { return static_cast<bool>(exact); }
};

} // namespace tfrd

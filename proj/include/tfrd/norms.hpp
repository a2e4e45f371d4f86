#pragma once

#include "tfrd/grid_function.hpp"

namespace tfrd {

/// Discrete L2 norm sqrt(h * sum over interior nodes of f_i^2).
/// Boundary nodes carry Dirichlet data and are excluded.
double l2_norm(const GridFunction1D& f);

/// 2D discrete L2 norm sqrt(hx*hy * sum over interior of f_il^2).
double l2_norm(const GridFunction2D& f);

/// Maximum absolute value over interior nodes.
double max_norm(const GridFunction1D& f);
double max_norm(const GridFunction2D& f);

/// Observed convergence order log(e_coarse/e_fine) / log(r_coarse/r_fine)
/// for errors measured at two resolutions r (step sizes). All arguments
/// must be strictly positive and the resolutions distinct.
double convergence_rate(double e_coarse, double e_fine, double r_coarse, double r_fine);

} // namespace tfrd

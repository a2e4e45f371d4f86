#include "tfrd/pentadiagonal.hpp"

#include "tfrd/errors.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tfrd {

PentaSparseSystem::PentaSparseSystem(int interior_x_, int interior_y_)
    : interior_x(interior_x_), interior_y(interior_y_) {
    if (interior_x < 1 || interior_y < 1) {
        throw std::invalid_argument("PentaSparseSystem: interior extents must be positive");
    }
    const std::size_t n = static_cast<std::size_t>(unknowns());
    main.assign(n, 0.0);
    east.assign(n, 0.0);
    west.assign(n, 0.0);
    north.assign(n, 0.0);
    south.assign(n, 0.0);
}

void PentaSparseSystem::multiply(std::span<const double> x, std::span<double> out) const {
    const int n = unknowns();
    const int stride = interior_x;
    for (int r = 0; r < n; ++r) {
        double acc = main[static_cast<std::size_t>(r)] * x[static_cast<std::size_t>(r)];
        if (r > 0) {
            acc += west[static_cast<std::size_t>(r)] * x[static_cast<std::size_t>(r) - 1];
        }
        if (r + 1 < n) {
            acc += east[static_cast<std::size_t>(r)] * x[static_cast<std::size_t>(r) + 1];
        }
        if (r >= stride) {
            acc += south[static_cast<std::size_t>(r)] * x[static_cast<std::size_t>(r - stride)];
        }
        if (r + stride < n) {
            acc += north[static_cast<std::size_t>(r)] * x[static_cast<std::size_t>(r + stride)];
        }
        out[static_cast<std::size_t>(r)] = acc;
    }
}

bool PentaSparseSystem::symmetric(double tol) const {
    const int n = unknowns();
    const int stride = interior_x;
    for (int r = 0; r + 1 < n; ++r) {
        if (std::abs(east[static_cast<std::size_t>(r)] - west[static_cast<std::size_t>(r) + 1]) > tol) {
            return false;
        }
    }
    for (int r = 0; r + stride < n; ++r) {
        if (std::abs(north[static_cast<std::size_t>(r)] - south[static_cast<std::size_t>(r + stride)]) > tol) {
            return false;
        }
    }
    return true;
}

bool PentaSparseSystem::strictly_diagonally_dominant() const {
    const int n = unknowns();
    for (int r = 0; r < n; ++r) {
        const std::size_t u = static_cast<std::size_t>(r);
        const double off = std::abs(east[u]) + std::abs(west[u]) + std::abs(north[u]) + std::abs(south[u]);
        if (!(std::abs(main[u]) > off)) {
            return false;
        }
    }
    return true;
}

CgResult cg_solve(const PentaSparseSystem& system, std::span<const double> rhs, double tol, int max_iters,
                  std::span<const double> initial_guess) {
    const std::size_t n = static_cast<std::size_t>(system.unknowns());
    if (rhs.size() != n) {
        throw std::invalid_argument("cg_solve: rhs size does not match system size");
    }
    if (!(tol > 0.0)) {
        throw std::invalid_argument("cg_solve: tolerance must be positive");
    }
    if (!initial_guess.empty() && initial_guess.size() != n) {
        throw std::invalid_argument("cg_solve: initial guess size does not match system size");
    }

    CgResult result;
    result.solution.assign(n, 0.0);

    double rhs_norm2 = 0.0;
    for (double v : rhs) {
        rhs_norm2 += v * v;
    }
    if (rhs_norm2 == 0.0) {
        return result;
    }
    const double stop2 = tol * tol * rhs_norm2;

    std::vector<double>& x = result.solution;
    std::vector<double> r(n), z(n), p(n), ap(n);

    if (!initial_guess.empty()) {
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = initial_guess[i];
        }
        system.multiply(x, ap);
        for (std::size_t i = 0; i < n; ++i) {
            r[i] = rhs[i] - ap[i];
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            r[i] = rhs[i];
        }
    }

    double res2 = 0.0;
    for (double v : r) {
        res2 += v * v;
    }

    double rho = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        z[i] = r[i] / system.main[i];
        rho += r[i] * z[i];
    }
    p = z;

    int iter = 0;
    while (res2 > stop2 && iter < max_iters) {
        system.multiply(p, ap);
        double p_ap = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            p_ap += p[i] * ap[i];
        }
        const double step = rho / p_ap;
        res2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            x[i] += step * p[i];
            r[i] -= step * ap[i];
            res2 += r[i] * r[i];
        }
        ++iter;
        if (res2 <= stop2) {
            break;
        }
        double rho_next = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            z[i] = r[i] / system.main[i];
            rho_next += r[i] * z[i];
        }
        const double beta = rho_next / rho;
        rho = rho_next;
        for (std::size_t i = 0; i < n; ++i) {
            p[i] = z[i] + beta * p[i];
        }
    }

    result.iterations = iter;
    result.relative_residual = std::sqrt(res2 / rhs_norm2);
    if (res2 > stop2) {
        std::ostringstream msg;
        msg << "cg_solve: no convergence within " << max_iters << " iterations, achieved relative residual "
            << result.relative_residual << " (target " << tol << ")";
        throw convergence_error(msg.str());
    }
    return result;
}

} // namespace tfrd

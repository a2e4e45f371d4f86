#include "tfrd/solver_1d.hpp"

#include "tfrd/errors.hpp"
#include "tfrd/norms.hpp"

#include <cassert>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tfrd {

namespace {

std::string point_message(const char* what, double x, double t, double value) {
    std::ostringstream msg;
    msg << what << " at x=" << x << ", t=" << t << " (value " << value << ")";
    return msg.str();
}

/// k at every half-point x_{i+1/2}, i = 0..N-1, checked strictly positive.
std::vector<double> sample_diffusion(const Problem1D& problem, const Mesh1D& mesh, double t) {
    std::vector<double> k(static_cast<std::size_t>(mesh.cells));
    for (int i = 0; i < mesh.cells; ++i) {
        const double x = mesh.midpoint(i);
        const double value = problem.diffusion(x, t);
        if (!(value > 0.0)) {
            throw coefficient_error(point_message("diffusion coefficient is not strictly positive", x, t, value));
        }
        k[static_cast<std::size_t>(i)] = value;
    }
    return k;
}

/// q at every interior node, checked nonnegative.
std::vector<double> sample_reaction(const Problem1D& problem, const Mesh1D& mesh, double t) {
    std::vector<double> q(static_cast<std::size_t>(mesh.cells - 1));
    for (int i = 1; i < mesh.cells; ++i) {
        const double x = mesh.node(i);
        const double value = problem.reaction(x, t);
        if (value < 0.0) {
            throw coefficient_error(point_message("reaction coefficient is negative", x, t, value));
        }
        q[static_cast<std::size_t>(i - 1)] = value;
    }
    return q;
}

} // namespace

GridFunction1D apply_spatial_operator(const Problem1D& problem, const Mesh1D& mesh, const GridFunction1D& state,
                                      int level, const TimeGrid& grid) {
    const double ts = grid.t_sigma(level);
    const std::vector<double> k = sample_diffusion(problem, mesh, ts);
    const std::vector<double> q = sample_reaction(problem, mesh, ts);
    const double inv_h2 = 1.0 / (mesh.h * mesh.h);

    GridFunction1D result(mesh);
    for (int i = 1; i < mesh.cells; ++i) {
        const double k_left = k[static_cast<std::size_t>(i - 1)];
        const double k_right = k[static_cast<std::size_t>(i)];
        const double flux =
            k_right * state[i + 1] - (k_right + k_left) * state[i] + k_left * state[i - 1];
        result[i] = flux * inv_h2 - q[static_cast<std::size_t>(i - 1)] * state[i];
    }
    return result;
}

std::pair<TridiagonalSystem, std::vector<double>> assemble_step(const Problem1D& problem, const Mesh1D& mesh,
                                                                const TimeGrid& grid,
                                                                std::span<const std::vector<double>> history) {
    if (history.empty()) {
        throw std::invalid_argument("assemble_step: history must contain at least the initial level");
    }
    const int j = static_cast<int>(history.size()) - 1;
    const int n = mesh.cells - 1;
    const std::size_t nodes = static_cast<std::size_t>(mesh.nodes());
    for (const auto& level : history) {
        if (level.size() != nodes) {
            throw std::invalid_argument("assemble_step: history level size does not match node count");
        }
    }

    const double h2 = mesh.h * mesh.h;
    const double tau = grid.tau;
    const double sigma = grid.sigma;
    const double alpha = problem.order.alpha();
    const double ts = grid.t_sigma(j);

    const std::vector<double> k = sample_diffusion(problem, mesh, ts);
    const std::vector<double> q = sample_reaction(problem, mesh, ts);

    L21WeightTable weights(problem.order);
    const std::span<const double> c = weights.level(j);
    // multiplies every weight in the scaled memory term
    const double memory_scale = 2.0 * std::pow(tau, 1.0 - alpha) * h2 / std::tgamma(2.0 - alpha);

    TridiagonalSystem system;
    system.lower.assign(static_cast<std::size_t>(n), 0.0);
    system.diag.assign(static_cast<std::size_t>(n), 0.0);
    system.upper.assign(static_cast<std::size_t>(n), 0.0);
    std::vector<double> rhs(static_cast<std::size_t>(n), 0.0);

    const std::vector<double>& curr = history[static_cast<std::size_t>(j)];
    const std::vector<double>& prev = history[static_cast<std::size_t>(j > 0 ? j - 1 : 0)];

    const double diag_time = h2 * (2.0 * sigma + 1.0) + memory_scale * c[0];
    const double rhs_time = 4.0 * h2 * sigma + memory_scale * c[0];

    for (int i = 1; i <= n; ++i) {
        const std::size_t r = static_cast<std::size_t>(i - 1);
        const double k_left = k[static_cast<std::size_t>(i - 1)];
        const double k_right = k[static_cast<std::size_t>(i)];
        const double q_i = q[r];

        system.diag[r] = diag_time + 2.0 * sigma * tau * (k_left + k_right + h2 * q_i);
        if (i > 1) {
            system.lower[r] = -2.0 * sigma * tau * k_left;
        }
        if (i < n) {
            system.upper[r] = -2.0 * sigma * tau * k_right;
        }

        // explicit part of the spatial operator, interior couplings only;
        // the boundary couplings enter through the boundary vector below
        double flux = -(k_left + k_right) * curr[static_cast<std::size_t>(i)];
        if (i > 1) {
            flux += k_left * curr[static_cast<std::size_t>(i - 1)];
        }
        if (i < n) {
            flux += k_right * curr[static_cast<std::size_t>(i + 1)];
        }
        rhs[r] = rhs_time * curr[static_cast<std::size_t>(i)] +
                 2.0 * (1.0 - sigma) * tau * (flux - h2 * q_i * curr[static_cast<std::size_t>(i)]) -
                 h2 * (2.0 * sigma - 1.0) * prev[static_cast<std::size_t>(i)];
    }

    // memory sum over the fully resolved part of the history
    for (int s = 0; s < j; ++s) {
        const double coeff = memory_scale * c[j - s];
        const std::vector<double>& newer = history[static_cast<std::size_t>(s) + 1];
        const std::vector<double>& older = history[static_cast<std::size_t>(s)];
        for (int i = 1; i <= n; ++i) {
            rhs[static_cast<std::size_t>(i - 1)] -=
                coeff * (newer[static_cast<std::size_t>(i)] - older[static_cast<std::size_t>(i)]);
        }
    }

    for (int i = 1; i <= n; ++i) {
        rhs[static_cast<std::size_t>(i - 1)] += 2.0 * tau * h2 * problem.source(mesh.node(i), ts);
    }

    // Dirichlet boundary data, sigma-weighted across levels j and j+1
    const double t_next = grid.t(j + 1);
    rhs[0] += 2.0 * tau * k[0] * (sigma * problem.left_boundary(t_next) + (1.0 - sigma) * curr[0]);
    rhs[static_cast<std::size_t>(n - 1)] +=
        2.0 * tau * k[static_cast<std::size_t>(mesh.cells - 1)] *
        (sigma * problem.right_boundary(t_next) + (1.0 - sigma) * curr[static_cast<std::size_t>(mesh.cells)]);

    return {std::move(system), std::move(rhs)};
}

SolveReport1D solve(const Problem1D& problem, int cells, int steps, const SolveOptions& options) {
    const Mesh1D mesh(problem.length, cells);
    const TimeGrid grid(problem.horizon, steps, problem.order);

    const double left0 = problem.left_boundary(0.0);
    const double right0 = problem.right_boundary(0.0);
    if (std::abs(problem.initial(0.0) - left0) > 1e-10 ||
        std::abs(problem.initial(problem.length) - right0) > 1e-10) {
        throw coefficient_error("solve: initial data is incompatible with the boundary data at t = 0");
    }

    std::vector<std::vector<double>> levels;
    levels.reserve(static_cast<std::size_t>(steps) + 1);
    {
        std::vector<double> u0(static_cast<std::size_t>(mesh.nodes()));
        for (int i = 0; i <= mesh.cells; ++i) {
            u0[static_cast<std::size_t>(i)] = problem.initial(mesh.node(i));
        }
        levels.push_back(std::move(u0));
    }

    SolveReport1D report{GridFunction1D(mesh)};
    const bool track_errors = problem.has_exact();
    auto record_errors = [&](int level) {
        if (!track_errors) {
            return;
        }
        GridFunction1D diff(mesh);
        const double t = grid.t(level);
        const std::vector<double>& u = levels[static_cast<std::size_t>(level)];
        for (int i = 0; i <= mesh.cells; ++i) {
            diff[i] = problem.exact(mesh.node(i), t) - u[static_cast<std::size_t>(i)];
        }
        report.max_error_by_level.push_back(max_norm(diff));
        report.l2_error_by_level.push_back(l2_norm(diff));
    };
    record_errors(0);

    for (int j = 0; j < steps; ++j) {
        auto [system, rhs] = assemble_step(problem, mesh, grid, levels);
        assert(system.strictly_diagonally_dominant());
        const std::vector<double> interior = thomas_solve(system, rhs);

        std::vector<double> next(static_cast<std::size_t>(mesh.nodes()));
        const double t_next = grid.t(j + 1);
        next[0] = problem.left_boundary(t_next);
        next[static_cast<std::size_t>(mesh.cells)] = problem.right_boundary(t_next);
        for (int i = 1; i < mesh.cells; ++i) {
            next[static_cast<std::size_t>(i)] = interior[static_cast<std::size_t>(i - 1)];
        }
        levels.push_back(std::move(next));
        record_errors(j + 1);
    }

    report.final_state = GridFunction1D(mesh, levels.back());
    if (track_errors) {
        report.error_max = 0.0;
        report.error_l2 = 0.0;
        for (std::size_t j = 0; j < report.max_error_by_level.size(); ++j) {
            report.error_max = std::max(report.error_max, report.max_error_by_level[j]);
            report.error_l2 = std::max(report.error_l2, report.l2_error_by_level[j]);
        }
    }
    if (options.keep_history) {
        report.history.reserve(levels.size());
        for (auto& level : levels) {
            report.history.emplace_back(mesh, std::move(level));
        }
    }
    return report;
}

} // namespace tfrd

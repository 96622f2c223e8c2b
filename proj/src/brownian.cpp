#include "arbreak/brownian.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "arbreak/error.hpp"

namespace arbreak {

BrownianGrid BrownianGrid::from_values(double t_max, std::vector<double> values) {
    if (values.size() < 2 || !(t_max > 0.0)) throw ConfigError("a grid needs at least one step and t_max > 0");
    return BrownianGrid(t_max, std::move(values));
}

std::size_t BrownianGrid::node_of(double t) const noexcept {
    const double pos = std::round(t / dt());
    if (!(pos > 0.0)) return 0;
    return std::min(static_cast<std::size_t>(pos), n_steps());
}

BrownianGrid sample_brownian(std::size_t n_steps, double t_max, RngStream& stream) {
    if (n_steps < 2) throw ConfigError("sample_brownian: n_steps must be at least 2");
    if (!(t_max > 0.0)) throw ConfigError("sample_brownian: t_max must be positive");
    const double dt = t_max / static_cast<double>(n_steps);
    std::vector<double> w(n_steps + 1, 0.0);
    w[n_steps] = std::sqrt(t_max) * stream.normal();

    std::vector<std::pair<std::size_t, std::size_t>> level{{0, n_steps}}, next;
    level.reserve(n_steps);
    next.reserve(n_steps);
    while (!level.empty()) {
        next.clear();
        for (const auto& [a, b] : level) {
            if (b - a < 2) continue;
            const std::size_t m = a + (b - a) / 2;
            const double left = static_cast<double>(m - a);
            const double right = static_cast<double>(b - m);
            const double span = static_cast<double>(b - a);
            const double mean = w[a] + left / span * (w[b] - w[a]);
            w[m] = mean + std::sqrt(left * right / span * dt) * stream.normal();
            next.emplace_back(a, m);
            next.emplace_back(m, b);
        }
        std::swap(level, next);
    }
    return BrownianGrid::from_values(t_max, std::move(w));
}

GridFunction functional_F(const BrownianGrid& grid, double c, double tau0) {
    const std::size_t n = grid.n_steps();
    const std::size_t j0 = grid.node_of(tau0);
    const double dt = grid.dt();
    GridFunction out{j0, dt, {}};
    out.values.reserve(n - j0 + 1);
    double integral = 0.0;
    for (std::size_t j = j0; j <= n; ++j) {
        const double t = static_cast<double>(j) * dt;
        const double weight = std::exp(-c * (1.0 - t));
        const double centered = grid[j] - grid[j0];
        out.values.push_back(weight * centered - c * integral);
        integral += weight * centered * dt;
    }
    return out;
}

GridFunction functional_G(const BrownianGrid& grid, double c) {
    const std::size_t n = grid.n_steps();
    const double dt = grid.dt();
    GridFunction out{0, dt, {}};
    out.values.reserve(n + 1);
    double integral = 0.0;
    for (std::size_t j = 0; j <= n; ++j) {
        const double t = static_cast<double>(j) * dt;
        const double weight = std::exp(-c * (1.0 - t));
        out.values.push_back(weight * grid[j] - c * integral);
        integral += weight * grid[j] * dt;
    }
    return out;
}

GridFunction functional_I(const BrownianGrid& grid, double c, double tau0, double s_max) {
    const std::size_t n = grid.n_steps();
    const std::size_t j0 = grid.node_of(tau0);
    const double dt = grid.dt();
    std::size_t steps = n - j0;
    if (s_max >= 0.0) {
        const auto wanted = static_cast<std::size_t>(std::llround(s_max / dt));
        if (j0 + wanted > n) throw DomainError("functional_I: grid ends before tau0 + s_max");
        steps = wanted;
    }
    if (j0 >= n && steps > 0) throw DomainError("functional_I: grid ends at tau0");

    // J_k = sum_{i<k} e^{-c (s_k - s_i)} V_i dt, updated as J_{k+1} = decay (J_k + V_k dt).
    const double decay = std::exp(-c * dt);
    GridFunction out{j0, dt, {}};
    out.values.reserve(steps + 1);
    double kernel_sum = 0.0;
    for (std::size_t k = 0; k <= steps; ++k) {
        const double v = grid[j0 + k] - grid[j0];
        out.values.push_back(v - c * kernel_sum);
        kernel_sum = decay * (kernel_sum + v * dt);
    }
    return out;
}

double B_func(double c, double tau0) noexcept {
    if (std::abs(c) < 1e-8) return tau0 * (1.0 - c * tau0) + 1.0 - tau0;
    return -std::expm1(-2.0 * c * tau0) / (2.0 * c) + 1.0 - tau0;
}

}  // namespace arbreak

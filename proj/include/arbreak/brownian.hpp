#pragma once

#include <cstddef>
#include <vector>

#include "arbreak/rng.hpp"

namespace arbreak {

/// Brownian path sampled at the nodes j * dt, j = 0..n, of [0, t_max].
class BrownianGrid {
public:
    /// Wraps explicit node values (values[0] is W(0)). Used to inject
    /// deterministic paths into the functionals.
    static BrownianGrid from_values(double t_max, std::vector<double> values);

    [[nodiscard]] std::size_t n_steps() const noexcept { return values_.size() - 1; }
    [[nodiscard]] double t_max() const noexcept { return t_max_; }
    [[nodiscard]] double dt() const noexcept { return t_max_ / static_cast<double>(n_steps()); }
    [[nodiscard]] double operator[](std::size_t j) const noexcept { return values_[j]; }
    [[nodiscard]] const std::vector<double>& values() const noexcept { return values_; }
    [[nodiscard]] double increment(std::size_t j) const noexcept { return values_[j + 1] - values_[j]; }
    /// Node nearest to time t, clamped to [0, n].
    [[nodiscard]] std::size_t node_of(double t) const noexcept;

private:
    BrownianGrid(double t_max, std::vector<double> values) : t_max_(t_max), values_(std::move(values)) {}

    double t_max_;
    std::vector<double> values_;
};

/// Samples W on n_steps uniform steps of [0, t_max] by midpoint (Levy)
/// refinement: W(t_max) first, then the midpoints of all current intervals
/// level by level, left to right. Consumes exactly n_steps normals. For
/// dyadic n the first n normals fix the same nodes at every finer dyadic
/// resolution, so grids of different size drawn from one stream are coupled.
/// Throws ConfigError unless n_steps >= 2 and t_max > 0.
[[nodiscard]] BrownianGrid sample_brownian(std::size_t n_steps, double t_max, RngStream& stream);

/// A functional evaluated on consecutive grid nodes, starting at `first_node`.
struct GridFunction {
    std::size_t first_node = 0;
    double dt = 0.0;
    std::vector<double> values;
};

/// F(t) = e^{-c(1-t)} (W(t) - W(tau0)) - c int_{tau0}^t e^{-c(1-s)} (W(s) - W(tau0)) ds
/// at every node t >= tau0, tau0 snapped to the nearest node. Left-endpoint sums.
[[nodiscard]] GridFunction functional_F(const BrownianGrid& grid, double c, double tau0);

/// G(t) = e^{-c(1-t)} W(t) - c int_0^t e^{-c(1-s)} W(s) ds at every node.
[[nodiscard]] GridFunction functional_G(const BrownianGrid& grid, double c);

/// I(s) = W(tau0+s) - W(tau0) - c int_{tau0}^{tau0+s} e^{-c(tau0+s-u)} (W(u) - W(tau0)) du
/// for s = k dt, k = 0..K. With s_max < 0 the whole remaining grid is used;
/// otherwise K = round(s_max / dt) and DomainError is thrown if the grid ends
/// before tau0 + s_max.
[[nodiscard]] GridFunction functional_I(const BrownianGrid& grid, double c, double tau0, double s_max = -1.0);

/// B(c, tau0) = (1 - e^{-2 c tau0}) / (2c) + 1 - tau0, with the first-order
/// series tau0 (1 - c tau0) replacing the fraction when |c| < 1e-8.
[[nodiscard]] double B_func(double c, double tau0) noexcept;

}  // namespace arbreak

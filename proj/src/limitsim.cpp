#include "arbreak/limitsim.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "arbreak/error.hpp"

namespace arbreak {

namespace {

constexpr double kBaHorizon = 20.0;

/// sum_{j=from}^{to-1} e^{2c(1 - t_j)} f_j^2 dt over a GridFunction's nodes.
double weighted_square_integral(const GridFunction& f, double c, std::size_t count) {
    double sum = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
        const double t = static_cast<double>(f.first_node + k) * f.dt;
        sum += std::exp(2.0 * c * (1.0 - t)) * f.values[k] * f.values[k];
    }
    return sum * f.dt;
}

double square_integral(const BrownianGrid& w, std::size_t nodes) {
    double sum = 0.0;
    for (std::size_t j = 0; j < nodes; ++j) sum += w[j] * w[j];
    return sum * w.dt();
}

std::size_t argmax_steps(const Discretization& d) {
    return static_cast<std::size_t>(std::llround(d.nu_max / d.nu_step));
}

double draw_t1_beta2(const LimitTarget& target, RngStream& stream) {
    const auto w = sample_brownian(target.grid.n_steps, 1.0, stream);
    const auto f = functional_F(w, target.c, target.tau0);
    const double tau = static_cast<double>(f.first_node) * f.dt;
    const std::size_t last = f.values.size() - 1;
    const double denom = weighted_square_integral(f, target.c, last);
    const double f1 = f.values[last];
    return (0.5 * f1 * f1 + target.c * denom - 0.5 * (1.0 - tau)) / denom;
}

double draw_t2_beta1(const LimitTarget& target, RngStream& stream) {
    const auto w = sample_brownian(target.grid.n_steps, 1.0, stream);
    const auto g = functional_G(w, target.c);
    const std::size_t j0 = w.node_of(target.tau0);
    const double tau = static_cast<double>(j0) * g.dt;
    const double denom = weighted_square_integral(g, target.c, j0);
    const double g_tau = g.values[j0];
    return (0.5 * std::exp(2.0 * target.c * (1.0 - tau)) * g_tau * g_tau + target.c * denom - 0.5 * tau) / denom;
}

// Z comes first so that grids of different resolution share their coarse nodes.
double draw_t2_beta2(const LimitTarget& target, RngStream& stream) {
    // W-bar is independent of W: W-bar(B) = sqrt(B) Z.
    const double z = stream.normal();
    const auto w = sample_brownian(target.grid.n_steps, 1.0, stream);
    const auto g = functional_G(w, target.c);
    const std::size_t j0 = w.node_of(target.tau0);
    const double tau = static_cast<double>(j0) * g.dt;
    const double g_tau = g.values[j0];
    const double numer = std::sqrt(1.0 - target.beta * target.beta) * std::sqrt(B_func(target.c, tau)) * z;
    return numer / (1.0 - tau + std::exp(2.0 * target.c * (1.0 - tau)) * g_tau * g_tau);
}

double draw_df_beta2(const LimitTarget& target, RngStream& stream) {
    const auto w = sample_brownian(target.grid.n_steps, 1.0, stream);
    const std::size_t n = w.n_steps();
    return (w[n] * w[n] - 1.0) / (2.0 * (1.0 - target.tau0) * square_integral(w, n));
}

double draw_df_beta1(const LimitTarget& target, RngStream& stream) {
    const auto w = sample_brownian(target.grid.n_steps, 1.0, stream);
    const std::size_t j0 = w.node_of(target.tau0);
    const double tau = static_cast<double>(j0) * w.dt();
    return (w[j0] * w[j0] - tau) / (2.0 * square_integral(w, j0));
}

double draw_b_a(const LimitTarget& target, RngStream& stream) {
    if (target.ba_mode == BaMode::Direct) return std::sqrt(0.5) * stream.normal();
    const auto steps = static_cast<std::size_t>(std::llround(kBaHorizon / target.grid.nu_step));
    const auto w = sample_brownian(steps, kBaHorizon, stream);
    double sum = 0.0;
    for (std::size_t j = 0; j < steps; ++j) sum += std::exp(-static_cast<double>(j) * w.dt()) * w.increment(j);
    return sum;
}

// Draw order: W1 on [0, nu_max], W2 on [0, tau0 + nu_max], then B_a.
double draw_t1_tau(const LimitTarget& target, RngStream& stream) {
    const double step = target.grid.nu_step;
    const std::size_t k = argmax_steps(target.grid);
    const auto j0 = static_cast<std::size_t>(std::llround(target.tau0 / step));
    const auto left = sample_brownian(k, static_cast<double>(k) * step, stream);
    const auto right = sample_brownian(j0 + k, static_cast<double>(j0 + k) * step, stream);
    const double b_a = draw_b_a(target, stream);
    return t1_tau_argmax(left, right, b_a, target.c, static_cast<double>(j0) * step);
}

// Draw order: W1 (left half of B*), W2 (right half), then W on [0, 1] for G.
double draw_t2_tau(const LimitTarget& target, RngStream& stream) {
    const double step = target.grid.nu_step;
    const std::size_t k = argmax_steps(target.grid);
    const auto left = sample_brownian(k, static_cast<double>(k) * step, stream);
    const auto right = sample_brownian(k, static_cast<double>(k) * step, stream);
    const auto w = sample_brownian(target.grid.n_steps, 1.0, stream);
    const auto g = functional_G(w, target.c);
    const std::size_t j0 = w.node_of(target.tau0);
    const double tau = static_cast<double>(j0) * g.dt;
    return t2_tau_argmax(left, right, std::exp(target.c * (1.0 - tau)) * g.values[j0]);
}

}  // namespace

const char* to_string(LimitKind kind) noexcept {
    switch (kind) {
        case LimitKind::T1Beta1: return "t1-beta1";
        case LimitKind::T1Beta2: return "t1-beta2";
        case LimitKind::T1Tau: return "t1-tau";
        case LimitKind::T2Beta1: return "t2-beta1";
        case LimitKind::T2Beta2: return "t2-beta2";
        case LimitKind::T2Tau: return "t2-tau";
        case LimitKind::DFBeta2C0: return "df-beta2";
        case LimitKind::DFBeta1C0: return "df-beta1";
    }
    return "t1-beta1";
}

LimitKind parse_limit_kind(std::string_view text) {
    for (const auto kind : {LimitKind::T1Beta1, LimitKind::T1Beta2, LimitKind::T1Tau, LimitKind::T2Beta1,
                            LimitKind::T2Beta2, LimitKind::T2Tau, LimitKind::DFBeta2C0, LimitKind::DFBeta1C0}) {
        if (text == to_string(kind)) return kind;
    }
    throw ConfigError("unknown limit target '" + std::string(text) + "'");
}

void validate(const LimitTarget& target) {
    const bool tau_open = target.tau0 > 0.0 && target.tau0 < 1.0;
    if (target.kind == LimitKind::DFBeta2C0) {
        if (!(target.tau0 >= 0.0 && target.tau0 < 1.0)) throw ConfigError("df-beta2 needs tau0 in [0, 1)");
    } else if (!tau_open) {
        throw ConfigError("tau0 must lie in (0, 1)");
    }
    if (target.grid.n_steps < 2) throw ConfigError("grid needs at least 2 steps");
    if (!std::isfinite(target.c)) throw ConfigError("c must be finite");
    if ((target.kind == LimitKind::T1Beta1 || target.kind == LimitKind::T2Beta2) && !(std::abs(target.beta) < 1.0))
        throw ConfigError("the fixed slope must satisfy |beta| < 1");
    if (target.kind == LimitKind::T1Tau || target.kind == LimitKind::T2Tau) {
        if (!(target.grid.nu_max > 0.0) || !(target.grid.nu_step > 0.0))
            throw ConfigError("argmax targets need nu_max > 0 and nu_step > 0");
        if (target.grid.nu_step > target.grid.nu_max) throw ConfigError("nu_step must not exceed nu_max");
    }
    // Nodes at or past tau0 must leave a nonempty integration range.
    if (target.kind == LimitKind::T2Beta1 || target.kind == LimitKind::DFBeta1C0) {
        if (std::llround(target.tau0 * static_cast<double>(target.grid.n_steps)) < 1)
            throw ConfigError("tau0 snaps to node 0 on this grid");
    }
    if (target.kind == LimitKind::T1Beta2) {
        if (std::llround(target.tau0 * static_cast<double>(target.grid.n_steps)) >=
            static_cast<long long>(target.grid.n_steps))
            throw ConfigError("tau0 snaps to the last node on this grid");
    }
}

double draw_limit(const LimitTarget& target, RngStream& stream) {
    switch (target.kind) {
        case LimitKind::T1Beta1:
            return std::sqrt((1.0 - target.beta * target.beta) / target.tau0) * stream.normal();
        case LimitKind::T1Beta2: return draw_t1_beta2(target, stream);
        case LimitKind::T1Tau: return draw_t1_tau(target, stream);
        case LimitKind::T2Beta1: return draw_t2_beta1(target, stream);
        case LimitKind::T2Beta2: return draw_t2_beta2(target, stream);
        case LimitKind::T2Tau: return draw_t2_tau(target, stream);
        case LimitKind::DFBeta2C0: return draw_df_beta2(target, stream);
        case LimitKind::DFBeta1C0: return draw_df_beta1(target, stream);
    }
    return 0.0;
}

double two_sided_argmax(std::span<const double> left, std::span<const double> right, double step) {
    const std::size_t k_max = std::max(left.size(), right.size());
    double best_value = left.empty() ? 0.0 : left[0];
    long long best_k = 0;
    for (std::size_t k = 1; k < k_max; ++k) {
        if (k < left.size() && left[k] > best_value) {
            best_value = left[k];
            best_k = -static_cast<long long>(k);
        }
        if (k < right.size() && right[k] > best_value) {
            best_value = right[k];
            best_k = static_cast<long long>(k);
        }
    }
    return static_cast<double>(best_k) * step;
}

std::vector<double> c_star_right(std::span<const double> i_values, double dt, double b_a) {
    std::vector<double> out(i_values.size(), 0.0);
    double ito = 0.0;      // int I dI
    double riemann = 0.0;  // int (I / (2 B_a) + 1) I dt
    for (std::size_t k = 0; k < i_values.size(); ++k) {
        out[k] = -i_values[k] - ito / b_a - riemann;
        if (k + 1 < i_values.size()) {
            const double cur = i_values[k];
            ito += cur * (i_values[k + 1] - cur);
            riemann += (cur / (2.0 * b_a) + 1.0) * cur * dt;
        }
    }
    return out;
}

double t1_tau_argmax(const BrownianGrid& left, const BrownianGrid& right, double b_a, double c, double tau0) {
    const double step = left.dt();
    const std::size_t k = left.n_steps();
    const auto i_fn = functional_I(right, c, tau0, static_cast<double>(k) * step);
    const auto c_star = c_star_right(i_fn.values, step, b_a);
    std::vector<double> lhs(k + 1), rhs(c_star.size());
    for (std::size_t j = 0; j <= k; ++j) lhs[j] = left[j] / b_a - 0.5 * static_cast<double>(j) * step;
    for (std::size_t j = 0; j < c_star.size(); ++j) rhs[j] = c_star[j] / b_a - 0.5 * static_cast<double>(j) * step;
    return two_sided_argmax(lhs, rhs, step);
}

double t2_tau_argmax(const BrownianGrid& left, const BrownianGrid& right, double denom) {
    const double step = left.dt();
    std::vector<double> lhs(left.n_steps() + 1), rhs(right.n_steps() + 1);
    for (std::size_t j = 0; j < lhs.size(); ++j) lhs[j] = left[j] / denom - 0.5 * static_cast<double>(j) * step;
    for (std::size_t j = 0; j < rhs.size(); ++j) rhs[j] = right[j] / denom - 0.5 * static_cast<double>(j) * step;
    return two_sided_argmax(lhs, rhs, step);
}

}  // namespace arbreak

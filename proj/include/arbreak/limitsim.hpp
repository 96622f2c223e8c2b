#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "arbreak/brownian.hpp"
#include "arbreak/rng.hpp"

namespace arbreak {

enum class LimitKind {
    T1Beta1,    ///< case I,  sqrt(T)(b1 - beta1): N(0, (1 - beta1^2) / tau0)
    T1Beta2,    ///< case I,  T(b2 - beta2): ratio of F functionals
    T1Tau,      ///< case I,  shrinking-break argmax with C*(nu) / B_a
    T2Beta1,    ///< case II, T(b1 - beta1): ratio of G functionals
    T2Beta2,    ///< case II, sqrt(T)(b2 - beta2): mixed normal over B(c, tau0)
    T2Tau,      ///< case II, shrinking-break two-sided Brownian argmax
    DFBeta2C0,  ///< c = 0 form of T1Beta2: (W(1)^2 - 1) / (2 (1 - tau0) int W^2)
    DFBeta1C0,  ///< c = 0 form of T2Beta1: (W(tau0)^2 - tau0) / (2 int_0^tau0 W^2)
};

[[nodiscard]] const char* to_string(LimitKind kind) noexcept;
/// Accepts the CLI names t1-beta1 .. t2-tau, df-beta1, df-beta2.
[[nodiscard]] LimitKind parse_limit_kind(std::string_view text);

/// How B_a = int_0^inf e^{-s} dW(s) is produced in T1Tau.
enum class BaMode {
    Direct,             ///< exact N(0, 1/2) draw
    TruncatedIntegral,  ///< left-endpoint Ito sum over [0, 20] on its own grid
};

struct Discretization {
    std::size_t n_steps = 2048;  ///< steps on [0, 1]
    double nu_max = 30.0;        ///< argmax search over [-nu_max, nu_max]
    double nu_step = 1.0 / 128.0;
};

struct LimitTarget {
    LimitKind kind = LimitKind::T1Beta1;
    double c = 1.0;
    double tau0 = 0.5;
    /// beta1 for T1Beta1, beta2 for T2Beta2; unused otherwise.
    double beta = 0.5;
    Discretization grid{};
    BaMode ba_mode = BaMode::Direct;
};

/// Throws ConfigError on parameters the target's formula cannot take.
void validate(const LimitTarget& target);

/// One draw from the target's limit law. Every draw uses fresh Brownian
/// paths from `stream`; independent Brownian motions are consumed in a fixed
/// order (documented per kind in the implementation).
[[nodiscard]] double draw_limit(const LimitTarget& target, RngStream& stream);

/// Argmax over nu = k * step, k = -K..K, of a two-sided objective.
/// `left[k]` is the objective at -k * step and `right[k]` at +k * step;
/// right[0] is ignored (nu = 0 is left[0]). Ties go to the smallest |nu|,
/// then to the smallest nu.
[[nodiscard]] double two_sided_argmax(std::span<const double> left, std::span<const double> right, double step);

/// C*(nu) for nu = k dt >= 0 built from I on a grid of step dt:
///   -I(nu) - (1/B_a) int_0^nu I dI - int_0^nu (I / (2 B_a) + 1) I dt,
/// both integrals as left-endpoint sums.
[[nodiscard]] std::vector<double> c_star_right(std::span<const double> i_values, double dt, double b_a);

/// T1Tau argmax given its inputs: `left` is W1 on [0, nu_max], `right` is W2
/// on [0, tau0 + nu_max] with the same step. Exposed so tests can inject paths.
[[nodiscard]] double t1_tau_argmax(const BrownianGrid& left, const BrownianGrid& right, double b_a, double c,
                                   double tau0);

/// T2Tau argmax given B* halves on a common step and the denominator
/// e^{c(1-tau0)} G(W, c, tau0).
[[nodiscard]] double t2_tau_argmax(const BrownianGrid& left, const BrownianGrid& right, double denom);

}  // namespace arbreak

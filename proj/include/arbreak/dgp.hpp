#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "arbreak/innovations.hpp"
#include "arbreak/rng.hpp"

namespace arbreak {

/// A slope that does not depend on T.
struct Fixed {
    double beta = 0.0;
};

/// Slope 1 - c / T.
struct LocalToUnity {
    double c = 0.0;
};

/// Slope defined as an offset from the other regime that vanishes as T grows,
/// with g(T) = T^gamma. As regime 1: beta1 = beta2 - 1 / g(T). As regime 2:
/// beta2 = beta1 - 1 / sqrt(T g(T)).
struct ShrinkOffset {
    double gamma = 0.5;
};

using Regime = std::variant<Fixed, LocalToUnity, ShrinkOffset>;

/// Initial value fixed at a constant.
struct ConstantY0 {
    double value = 0.0;
};

using InitialLaw = std::variant<InnovationLaw, ConstantY0>;

/// Case I: stationary regime first, local-to-unity second. Case II: reverse.
enum class CaseLabel { I, II, Custom };

[[nodiscard]] const char* to_string(CaseLabel label) noexcept;
[[nodiscard]] CaseLabel parse_case(std::string_view text);

constexpr double kDefaultGammaCaseI = 0.5;
constexpr double kDefaultGammaCaseII = 0.25;

struct BreakSpec {
    std::int64_t T = 200;
    double tau0 = 0.5;
    Regime regime1 = Fixed{0.5};
    Regime regime2 = LocalToUnity{1.0};
    InnovationLaw innovation = Gaussian{1.0};
    InitialLaw y0 = ConstantY0{0.0};
    CaseLabel label = CaseLabel::Custom;

    /// k0 = [tau0 T].
    [[nodiscard]] std::int64_t break_index() const noexcept;
    /// True when one regime is a ShrinkOffset.
    [[nodiscard]] bool is_shrinking() const noexcept;
};

/// Case I spec: beta1 fixed (or shrinking toward beta2 when `gamma` > 0),
/// beta2 = 1 - c / T.
[[nodiscard]] BreakSpec make_case_one(std::int64_t T, double tau0, double beta1, double c,
                                      InnovationLaw innovation, InitialLaw y0, double gamma = 0.0);
/// Case II spec: beta1 = 1 - c / T, beta2 fixed (or shrinking when `gamma` > 0).
[[nodiscard]] BreakSpec make_case_two(std::int64_t T, double tau0, double beta2, double c,
                                      InnovationLaw innovation, InitialLaw y0, double gamma = 0.0);

/// Throws ConfigError when the spec breaks any structural requirement
/// (interior break index, case shape, gamma window, law parameters).
void validate(const BreakSpec& spec);

/// Integer part with a 1e-9 relative snap, so 0.29 * 100 gives 29.
[[nodiscard]] std::int64_t integer_part(double x) noexcept;
/// Ceiling with the same snap.
[[nodiscard]] std::int64_t integer_ceil(double x) noexcept;

struct SamplePath {
    double y0 = 0.0;
    std::vector<double> values;  // y_1 .. y_T
    BreakSpec spec;
    std::int64_t k0 = 0;

    [[nodiscard]] std::int64_t T() const noexcept { return static_cast<std::int64_t>(values.size()); }
    /// y_t for 0 <= t <= T.
    [[nodiscard]] double y(std::int64_t t) const noexcept {
        return t == 0 ? y0 : values[static_cast<std::size_t>(t - 1)];
    }
};

/// Resolves both regimes to numbers for the spec's T.
[[nodiscard]] std::pair<double, double> effective_betas(const BreakSpec& spec);

/// Draws y0, then eps_1 .. eps_T in order, and runs the two-regime recursion.
[[nodiscard]] SamplePath simulate_path(const BreakSpec& spec, RngStream& stream);

}  // namespace arbreak

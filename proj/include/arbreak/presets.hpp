#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arbreak/dgp.hpp"
#include "arbreak/ecdf.hpp"
#include "arbreak/estimators.hpp"
#include "arbreak/limitsim.hpp"

namespace arbreak {

/// One finite-sample statistic paired with its limit law.
struct PresetStatistic {
    Statistic statistic = Statistic::Beta1;
    LimitTarget target;
    int figure = 0;  ///< plot index 1..24, see builtin_presets()
};

/// A simulation-study configuration: T = 200, c = 1, y0 from the paper-y0
/// law, N = 20,000, over case x tau0 x fixed slope x t(3)/t(2). Each preset
/// carries both slope statistics; the two innovation laws of one
/// configuration share a figure (left panel t(3), right panel t(2)).
struct ExperimentPreset {
    std::string name;
    BreakSpec spec;
    std::vector<PresetStatistic> statistics;
    std::size_t reps = 20000;
};

/// The 24 presets. Plot indices run case I beta1 (1-6), case I beta2 (7-12),
/// case II beta1 (13-18), case II beta2 (19-24), each block ordered by tau0
/// then by the fixed slope.
[[nodiscard]] const std::vector<ExperimentPreset>& builtin_presets();
/// Throws ConfigError for an unknown name.
[[nodiscard]] const ExperimentPreset& find_preset(std::string_view name);

/// Master seed for the limit-law sample of a run seeded with `seed`, kept
/// distinct from the finite-sample seed so the two samples are independent.
[[nodiscard]] std::uint64_t limit_seed(std::uint64_t seed) noexcept;

struct PresetArtifact {
    Statistic statistic = Statistic::Beta1;
    std::filesystem::path sample_csv;
    std::filesystem::path limit_csv;
    std::filesystem::path compare_json;
    CompareReport report;
};

/// Runs the finite-sample experiment, the limit sampler, and the comparison
/// for every statistic of `preset`, writing `<name>.<stat>.sample.csv`,
/// `<name>.<stat>.limit.csv` and `<name>.<stat>.compare.json` into `out_dir`.
std::vector<PresetArtifact> run_preset(const ExperimentPreset& preset, std::uint64_t seed, int workers,
                                       const std::filesystem::path& out_dir,
                                       std::optional<std::size_t> reps_override = std::nullopt);

}  // namespace arbreak

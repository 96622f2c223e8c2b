#include "arbreak/presets.hpp"

#include <cstdio>

#include "arbreak/error.hpp"
#include "arbreak/io.hpp"
#include "arbreak/montecarlo.hpp"

namespace arbreak {

namespace {

std::string short_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

std::vector<ExperimentPreset> make_presets() {
    constexpr std::int64_t T = 200;
    constexpr double c = 1.0;
    const double taus[] = {0.3, 0.5};
    const double betas[] = {0.5, 0.75, 0.8};
    const StudentT laws[] = {StudentT{3.0}, StudentT{2.0}};
    const InitialLaw y0 = InnovationLaw{PaperY0{}};

    std::vector<ExperimentPreset> presets;
    for (const auto label : {CaseLabel::I, CaseLabel::II}) {
        for (std::size_t ti = 0; ti < 2; ++ti) {
            for (std::size_t bi = 0; bi < 3; ++bi) {
                for (const auto& law : laws) {
                    const double tau0 = taus[ti];
                    const double beta = betas[bi];
                    ExperimentPreset p;
                    p.name = std::string("case") + to_string(label) + "-tau" + short_number(tau0) + "-beta" +
                             short_number(beta) + "-t" + short_number(law.dof);
                    // Figures run statistic-major, then tau0, then beta: case I 1-6 and 7-12,
                    // case II 13-18 and 19-24.
                    const int base = label == CaseLabel::I ? 0 : 12;
                    const int offset = static_cast<int>(ti * 3 + bi) + 1;
                    LimitTarget first, second;
                    first.tau0 = second.tau0 = tau0;
                    first.c = second.c = c;
                    if (label == CaseLabel::I) {
                        p.spec = make_case_one(T, tau0, beta, c, law, y0);
                        first.kind = LimitKind::T1Beta1;
                        first.beta = beta;
                        second.kind = LimitKind::T1Beta2;
                    } else {
                        p.spec = make_case_two(T, tau0, beta, c, law, y0);
                        first.kind = LimitKind::T2Beta1;
                        second.kind = LimitKind::T2Beta2;
                        second.beta = beta;
                    }
                    p.statistics = {{Statistic::Beta1, first, base + offset},
                                    {Statistic::Beta2, second, base + 6 + offset}};
                    presets.push_back(std::move(p));
                }
            }
        }
    }
    return presets;
}

}  // namespace

const std::vector<ExperimentPreset>& builtin_presets() {
    static const std::vector<ExperimentPreset> presets = make_presets();
    return presets;
}

const ExperimentPreset& find_preset(std::string_view name) {
    for (const auto& p : builtin_presets())
        if (p.name == name) return p;
    throw ConfigError("unknown preset '" + std::string(name) + "' (see `preset list`)");
}

std::uint64_t limit_seed(std::uint64_t seed) noexcept { return seed ^ 0x9E3779B97F4A7C15ull; }

std::vector<PresetArtifact> run_preset(const ExperimentPreset& preset, std::uint64_t seed, int workers,
                                       const std::filesystem::path& out_dir,
                                       std::optional<std::size_t> reps_override) {
    const std::size_t reps = reps_override.value_or(preset.reps);
    std::vector<Statistic> stats;
    for (const auto& s : preset.statistics) stats.push_back(s.statistic);
    const auto finite = run_finite_statistics(preset.spec, stats, reps, seed, workers);

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create '" + out_dir.string() + "': " + ec.message());

    std::vector<PresetArtifact> artifacts;
    for (std::size_t i = 0; i < stats.size(); ++i) {
        const auto limit = run_limit(preset.statistics[i].target, reps, limit_seed(seed), workers);
        const std::string stem = preset.name + "." + to_string(stats[i]);
        PresetArtifact a;
        a.statistic = stats[i];
        a.sample_csv = out_dir / (stem + ".sample.csv");
        a.limit_csv = out_dir / (stem + ".limit.csv");
        a.compare_json = out_dir / (stem + ".compare.json");
        a.report = compare_report(finite[i], limit);
        write_sample_csv(finite[i], a.sample_csv);
        write_sample_csv(limit, a.limit_csv);
        write_report_json(a.report, a.compare_json);
        artifacts.push_back(std::move(a));
    }
    return artifacts;
}

}  // namespace arbreak

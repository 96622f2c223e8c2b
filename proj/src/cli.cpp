#include "arbreak/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "arbreak/error.hpp"
#include "arbreak/io.hpp"
#include "arbreak/montecarlo.hpp"
#include "arbreak/parallel.hpp"
#include "arbreak/presets.hpp"

namespace arbreak::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 1;

struct WindowOptions {
    double tau_min = 0.1;
    double tau_max = 0.9;
    std::int64_t min_seg = 2;

    void attach(CLI::App* cmd) {
        cmd->add_option("--tau-min", tau_min, "Lower end of the break search window")->capture_default_str();
        cmd->add_option("--tau-max", tau_max, "Upper end of the break search window")->capture_default_str();
        cmd->add_option("--min-seg", min_seg, "Minimum observations per segment")->capture_default_str();
    }
    [[nodiscard]] SearchWindow window() const { return {tau_min, tau_max, min_seg}; }
};

void add_seed(CLI::App* cmd, std::uint64_t& seed) {
    cmd->add_option("--seed", seed, "Master seed (falls back to $ARBREAK_SEED)")
        ->envname("ARBREAK_SEED")
        ->capture_default_str();
}

void add_workers(CLI::App* cmd, int& workers) {
    cmd->add_option("--workers", workers, "Worker threads; output does not depend on it")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

void write_error(std::ostream& err, const std::string& kind, const std::string& message, int code) {
    nlohmann::ordered_json j{{"error", kind}, {"message", message}, {"exit", code}};
    err << j.dump() << '\n';
}

std::string json_scalar_text(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_number()) return format_double(v.get<double>());
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    throw ConfigError("config values must be scalars");
}

}  // namespace

std::vector<std::string> merge_config(const std::vector<std::string>& args) {
    std::vector<std::string> out;
    std::string config_path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) throw CLI::ArgumentMismatch("--config needs a file name");
            config_path = args[++i];
        } else if (args[i].rfind("--config=", 0) == 0) {
            config_path = args[i].substr(9);
        } else {
            out.push_back(args[i]);
        }
    }
    if (config_path.empty()) return out;

    std::ifstream in(config_path);
    if (!in) throw IoError("cannot open config '" + config_path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config '" + config_path + "' is not valid JSON: " + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config '" + config_path + "' must hold a JSON object");

    const auto given = [&](const std::string& flag) {
        return std::any_of(out.begin(), out.end(), [&](const std::string& a) {
            return a == flag || a.rfind(flag + "=", 0) == 0;
        });
    };
    for (const auto& [key, value] : doc.items()) {
        const std::string flag = "--" + key;
        if (given(flag)) continue;
        out.push_back(flag);
        out.push_back(json_scalar_text(value));
    }
    return out;
}

int dispatch(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Simulation and inference for AR(1) models with a change point"};
    app.name("arbreak");
    app.require_subcommand(1);

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Finite-sample Monte Carlo of a scaled estimator");
    std::string sim_case;
    std::int64_t sim_T = 200;
    double sim_tau0 = 0.5, sim_c = 1.0, sim_beta = 0.5, sim_gamma = 0.0;
    std::string sim_dist = "gauss:1", sim_y0 = "zero", sim_stat = "beta1", sim_out;
    std::size_t sim_reps = 1000;
    std::uint64_t sim_seed = kDefaultSeed;
    int sim_workers = parallel::default_workers();
    WindowOptions sim_window;
    simulate->add_option("--case", sim_case, "I or II")->required();
    simulate->add_option("--T", sim_T, "Sample size")->capture_default_str();
    simulate->add_option("--tau0", sim_tau0, "Break fraction")->capture_default_str();
    simulate->add_option("--c", sim_c, "Local-to-unity constant")->capture_default_str();
    simulate->add_option("--beta-fixed", sim_beta, "The stationary slope")->capture_default_str();
    simulate->add_option("--dist", sim_dist, "Innovation law: gauss:<s>, t:<dof>, paper-y0, zero")
        ->capture_default_str();
    simulate->add_option("--y0", sim_y0, "Initial value: paper, zero, a number or a law")->capture_default_str();
    simulate->add_option("--stat", sim_stat, "beta1, beta2 or tau")->capture_default_str();
    simulate->add_option("--gamma", sim_gamma, "Shrinking-break exponent; g(T) = T^gamma")->capture_default_str();
    simulate->add_option("--reps", sim_reps, "Replications")->capture_default_str();
    add_seed(simulate, sim_seed);
    add_workers(simulate, sim_workers);
    simulate->add_option("--out", sim_out, "Sample CSV to write")->required();
    sim_window.attach(simulate);

    // limit
    auto* limit = app.add_subcommand("limit", "Draw from a limit law");
    std::string lim_target, lim_out, lim_ba = "direct";
    double lim_c = 1.0, lim_tau0 = 0.5, lim_beta1 = 0.5, lim_beta2 = 0.5;
    std::size_t lim_reps = 20000;
    Discretization lim_grid;
    std::uint64_t lim_seed = kDefaultSeed;
    int lim_workers = parallel::default_workers();
    limit->add_option("--target", lim_target, "t1-beta1|t1-beta2|t1-tau|t2-beta1|t2-beta2|t2-tau|df-beta1|df-beta2")
        ->required();
    limit->add_option("--c", lim_c)->capture_default_str();
    limit->add_option("--tau0", lim_tau0)->capture_default_str();
    limit->add_option("--beta1", lim_beta1, "Fixed slope for t1-beta1")->capture_default_str();
    limit->add_option("--beta2", lim_beta2, "Fixed slope for t2-beta2")->capture_default_str();
    limit->add_option("--reps", lim_reps)->capture_default_str();
    limit->add_option("--grid-n", lim_grid.n_steps, "Brownian steps on [0, 1]")->capture_default_str();
    limit->add_option("--nu-max", lim_grid.nu_max, "Argmax half-width")->capture_default_str();
    limit->add_option("--nu-step", lim_grid.nu_step, "Argmax grid step")->capture_default_str();
    limit->add_option("--ba-mode", lim_ba, "direct or truncated (B_a as a truncated Ito integral)")
        ->check(CLI::IsMember({"direct", "truncated"}))
        ->capture_default_str();
    add_seed(limit, lim_seed);
    add_workers(limit, lim_workers);
    limit->add_option("--out", lim_out, "Sample CSV to write")->required();

    // compare
    auto* compare = app.add_subcommand("compare", "Compare two sample CSVs");
    std::string cmp_a, cmp_b, cmp_out, cmp_ecdf;
    compare->add_option("--a", cmp_a, "First sample CSV")->required();
    compare->add_option("--b", cmp_b, "Second sample CSV")->required();
    compare->add_option("--out", cmp_out, "Report JSON to write (stdout when omitted)");
    compare->add_option("--ecdf-out", cmp_ecdf, "CSV of both ECDFs at the pooled points");

    // fit
    auto* fit = app.add_subcommand("fit", "Estimate the break in a series CSV");
    std::string fit_in, fit_out, fit_profile;
    WindowOptions fit_window;
    fit->add_option("input,--in", fit_in, "Series CSV with header t,y")->required();
    fit->add_option("--out", fit_out, "FitResult JSON to write (stdout when omitted)");
    fit->add_option("--profile", fit_profile, "CSV of the RSS profile");
    fit_window.attach(fit);

    // preset
    auto* preset = app.add_subcommand("preset", "Built-in simulation-study experiments");
    preset->require_subcommand(1);
    auto* preset_list = preset->add_subcommand("list", "Print the preset names");
    auto* preset_run = preset->add_subcommand("run", "Run one preset: finite sample, limit law, comparison");
    std::string run_name, run_dir = ".";
    std::uint64_t run_seed = kDefaultSeed;
    int run_workers = parallel::default_workers();
    std::size_t run_reps = 0;
    preset_run->add_option("name", run_name, "Preset name")->required();
    preset_run->add_option("--out-dir", run_dir, "Directory for the artifacts")->capture_default_str();
    preset_run->add_option("--reps", run_reps, "Override the replication count");
    add_seed(preset_run, run_seed);
    add_workers(preset_run, run_workers);

    try {
        auto args = merge_config(raw_args);
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        write_error(err, "usage", e.what(), kExitUsage);
        return kExitUsage;
    } catch (const IoError& e) {
        write_error(err, e.kind(), e.what(), kExitFailure);
        return kExitFailure;
    } catch (const Error& e) {
        write_error(err, e.kind(), e.what(), kExitUsage);
        return kExitUsage;
    }

    try {
        if (simulate->parsed()) {
            const auto label = parse_case(sim_case);
            const auto law = parse_law(sim_dist);
            const auto y0 = parse_initial_law(sim_y0);
            const auto spec = label == CaseLabel::I
                                  ? make_case_one(sim_T, sim_tau0, sim_beta, sim_c, law, y0, sim_gamma)
                                  : make_case_two(sim_T, sim_tau0, sim_beta, sim_c, law, y0, sim_gamma);
            if (label == CaseLabel::Custom) throw ConfigError("simulate needs --case I or II");
            const auto summary =
                run_finite_sample(spec, parse_statistic(sim_stat), sim_reps, sim_seed, sim_workers, sim_window.window());
            write_sample_csv(summary, sim_out);
            out << "wrote " << summary.size() << " values to " << sim_out;
            if (summary.failures() > 0) out << " (" << summary.failures() << " failed replications)";
            out << '\n';
        } else if (limit->parsed()) {
            LimitTarget target;
            target.kind = parse_limit_kind(lim_target);
            target.c = lim_c;
            target.tau0 = lim_tau0;
            target.beta = target.kind == LimitKind::T2Beta2 ? lim_beta2 : lim_beta1;
            target.grid = lim_grid;
            target.ba_mode = lim_ba == "truncated" ? BaMode::TruncatedIntegral : BaMode::Direct;
            const auto summary = run_limit(target, lim_reps, lim_seed, lim_workers);
            write_sample_csv(summary, lim_out);
            out << "wrote " << summary.size() << " values to " << lim_out << '\n';
        } else if (compare->parsed()) {
            const EcdfSummary a(read_sample_csv(cmp_a));
            const EcdfSummary b(read_sample_csv(cmp_b));
            const auto report = compare_report(a, b);
            if (cmp_out.empty()) {
                out << to_json(report).dump(2) << '\n';
            } else {
                write_report_json(report, cmp_out);
            }
            if (!cmp_ecdf.empty()) write_ecdf_csv(pooled_ecdf(a, b), cmp_ecdf);
        } else if (fit->parsed()) {
            const auto series = read_series_csv(fit_in);
            const auto result = estimate_break(series, fit_window.window(), !fit_profile.empty());
            if (fit_out.empty()) {
                out << to_json(result).dump(2) << '\n';
            } else {
                write_json(to_json(result), fit_out);
            }
            if (!fit_profile.empty()) write_profile_csv(*result.rss_profile, fit_profile);
        } else if (preset_list->parsed()) {
            for (const auto& p : builtin_presets()) out << p.name << '\n';
        } else if (preset_run->parsed()) {
            const auto& p = find_preset(run_name);
            const auto artifacts = run_preset(p, run_seed, run_workers, run_dir,
                                              run_reps > 0 ? std::optional<std::size_t>(run_reps) : std::nullopt);
            for (const auto& a : artifacts)
                out << p.name << ' ' << to_string(a.statistic) << " ks=" << format_double(a.report.ks) << '\n';
        }
    } catch (const ConfigError& e) {
        write_error(err, e.kind(), e.what(), kExitUsage);
        return kExitUsage;
    } catch (const Error& e) {
        write_error(err, e.kind(), e.what(), kExitFailure);
        return kExitFailure;
    } catch (const std::exception& e) {
        write_error(err, "internal", e.what(), kExitFailure);
        return kExitFailure;
    }
    return kExitOk;
}

}  // namespace arbreak::cli

#include "mobifem/config_io.hpp"
#include "mobifem/csv.hpp"
#include "mobifem/simengine.hpp"
#include "mobifem/svgplot.hpp"
#include "mobifem/units.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace mobifem;

// Exit codes: 0 success, 1 validation failure, 2 I/O failure.
constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;

struct CommonOptions {
    std::string config_path;
    std::vector<std::string> overrides;
    std::optional<std::uint64_t> seed;
};

ScenarioConfig build_config(const CommonOptions& opts) {
    ScenarioConfig config =
        opts.config_path.empty() ? default_config() : load_config(opts.config_path);
    for (const auto& kv : opts.overrides) {
        apply_override(config, kv);
    }
    if (opts.seed) {
        config.seed = *opts.seed;
    }
    return config;
}

int report_violations(const std::vector<Violation>& violations) {
    for (const auto& v : violations) {
        std::cerr << "invalid config: " << v.field << ": " << v.rule << "\n";
    }
    return kExitValidation;
}

std::filesystem::path plot_path(const std::filesystem::path& out, const char* suffix) {
    std::filesystem::path p = out;
    p.replace_filename(p.stem().string() + "_" + suffix + ".svg");
    return p;
}

void write_sweep_plots(const SweepResult& r, const std::filesystem::path& out) {
    const auto& d = r.distance_m;
    write_file_atomic(
        plot_path(out, "snir"),
        render_line_chart("Mean SNIR vs BS distance", "distance (m)", "SNIR (dB)",
                          {{"direct macro to MS", d, r.snir_db_direct},
                           {"FAP to MS", d, r.snir_db_femto_access},
                           {"macro to transceiver", d, r.snir_db_backhaul}}));
    write_file_atomic(
        plot_path(out, "efficiency"),
        render_line_chart("Uplink spectral efficiency vs BS distance", "distance (m)",
                          "efficiency (bps/Hz)",
                          {{"MS to BS direct", d, r.ce_bpshz_direct},
                           {"transceiver to BS", d, r.ce_bpshz_relayed}}));
    write_file_atomic(
        plot_path(out, "outage"),
        render_line_chart("Outage probability vs BS distance", "distance (m)",
                          "outage probability",
                          {{"direct", d, r.outage_direct},
                           {"relayed", d, r.outage_relayed}}));
}

int cmd_sweep(const CommonOptions& opts, const std::string& out_path, bool plot,
              unsigned threads) {
    const ScenarioConfig config = build_config(opts);
    if (auto violations = validate(config); !violations.empty()) {
        return report_violations(violations);
    }

    SweepSpec spec;
    spec.distance_min_m = config.sweep_distance_min_m;
    spec.distance_max_m = config.sweep_distance_max_m;
    spec.step_m = config.sweep_step_m;
    spec.trials = config.trials;
    spec.seed = config.seed;

    const SweepResult result = run_sweep(config, spec, threads);
    write_file_atomic(out_path, sweep_to_csv(result));
    if (plot) {
        write_sweep_plots(result, out_path);
    }

    const SweepSummary summary = summarize(result);
    std::cout << "wrote " << out_path << " (" << result.distance_m.size() << " rows, "
              << result.trials << " trials)\n";
    if (summary.crossover_distance_m) {
        std::cout << "direct SNIR drops below gamma_ms at "
                  << format_csv_value(*summary.crossover_distance_m) << " m\n";
    } else {
        std::cout << "direct SNIR stays above gamma_ms across the grid\n";
    }
    std::cout << "femto access SNIR gain over direct: "
              << format_csv_value(summary.snir_improvement_db_min) << " to "
              << format_csv_value(summary.snir_improvement_db_max) << " dB\n";
    std::cout << "uplink capacity ratio (relayed/direct): "
              << format_csv_value(summary.capacity_ratio_min) << " to "
              << format_csv_value(summary.capacity_ratio_max) << "\n";
    std::cout << "outage reduction (direct - relayed): "
              << format_csv_value(summary.outage_reduction_min) << " to "
              << format_csv_value(summary.outage_reduction_max) << "\n";
    return kExitOk;
}

int cmd_trace(const CommonOptions& opts, const std::string& trace_path,
              const std::string& out_path) {
    const ScenarioConfig config = build_config(opts);
    if (auto violations = validate(config); !violations.empty()) {
        return report_violations(violations);
    }

    const MobilityTrace trace = load_trace(trace_path);
    const TraceResult result = run_trace(config, trace);
    write_file_atomic(out_path, trace_to_csv(result));
    std::cout << "wrote " << out_path << " (" << result.records.size() << " samples, "
              << result.backhaul_switches << " backhaul switches)\n";
    return kExitOk;
}

int cmd_validate(const std::string& config_path) {
    const ScenarioConfig config = load_config(config_path);
    const auto violations = validate(config);
    if (violations.empty()) {
        std::cout << "ok\n";
        return kExitOk;
    }
    for (const auto& v : violations) {
        std::cout << v.field << ": " << v.rule << "\n";
    }
    return kExitValidation;
}

void add_common(CLI::App* cmd, CommonOptions& opts, bool require_config) {
    auto* config_opt =
        cmd->add_option("--config", opts.config_path, "scenario config file (JSON)");
    if (require_config) {
        config_opt->required();
    }
    cmd->add_option("--set", opts.overrides,
                    "override one config key, e.g. --set trials=1 (repeatable)");
    cmd->add_option("--seed", opts.seed, "override the Monte Carlo seed");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"mobifem: in-vehicle femtocell vs direct macrocell link simulator"};
    app.require_subcommand(1);

    CommonOptions sweep_opts;
    std::string sweep_out;
    bool sweep_plot = false;
    unsigned sweep_threads = 0;
    auto* sweep = app.add_subcommand(
        "sweep", "run a distance sweep and write per-distance link metrics as CSV");
    add_common(sweep, sweep_opts, false);
    sweep->add_option("--out", sweep_out, "output CSV path")->required();
    sweep->add_flag("--plot", sweep_plot, "also write SNIR/efficiency/outage SVG charts");
    sweep->add_option("--threads", sweep_threads,
                      "worker threads (0 = auto); results are identical for any value");

    CommonOptions trace_opts;
    std::string trace_in;
    std::string trace_out;
    auto* trace = app.add_subcommand(
        "trace", "replay a mobility trace through the backhaul selection policy");
    add_common(trace, trace_opts, false);
    trace->add_option("--trace", trace_in, "mobility trace CSV")->required();
    trace->add_option("--out", trace_out, "output CSV path")->required();

    std::string validate_path;
    auto* validate_cmd =
        app.add_subcommand("validate", "check a config file against all invariants");
    validate_cmd->add_option("--config", validate_path, "scenario config file (JSON)")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    try {
        if (sweep->parsed()) {
            return cmd_sweep(sweep_opts, sweep_out, sweep_plot, sweep_threads);
        }
        if (trace->parsed()) {
            return cmd_trace(trace_opts, trace_in, trace_out);
        }
        if (validate_cmd->parsed()) {
            return cmd_validate(validate_path);
        }
    } catch (const ValidationError& e) {
        std::cerr << e.what() << "\n";
        for (const auto& v : e.violations()) {
            std::cerr << "  " << v.field << ": " << v.rule << "\n";
        }
        return kExitValidation;
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitValidation;
    } catch (const std::system_error& e) {
        std::cerr << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}

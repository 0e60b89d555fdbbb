// Command-line front end: single runs, the 27-scenario sweep, comparison
// recomputation from stored tables, and the blind optics table.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rds/config.hpp"
#include "rds/engine.hpp"
#include "rds/errors.hpp"
#include "rds/report.hpp"

namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitWeather = 3;
constexpr int kExitNumeric = 4;

std::ofstream open_out(const fs::path& path) {
    std::ofstream out(path);
    if (!out)
        throw rds::ConfigError("cannot write output file '" + path.string() +
                               "'");
    return out;
}

void ensure_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        throw rds::ConfigError("cannot create output directory '" +
                               dir.string() + "'");
}

struct SimulateArgs {
    std::string config_path;
    std::string weather_path;
    std::string mode;
    double reflectance = -1.0;
    std::string out_dir = ".";
    bool trace = false;
    bool dump_window_gains = false;
};

int cmd_simulate(const SimulateArgs& args) {
    rds::Scenario sc = args.config_path.empty()
                           ? rds::scenario_for_city("Tehran")
                           : rds::load_scenario_file(args.config_path);
    if (!args.weather_path.empty()) sc.weather.epw_path = args.weather_path;
    if (!args.mode.empty()) sc.mode = rds::blind_mode_from_string(args.mode);
    if (args.reflectance >= 0.0) sc.slat_reflectance = args.reflectance;

    rds::RunOptions options;
    options.keep_trace = args.trace;
    options.keep_window_gains = args.dump_window_gains;

    rds::AnnualResult result = rds::run_annual(sc, options);

    ensure_dir(args.out_dir);
    std::vector<rds::SweepRow> rows{
        {sc.city, sc.mode, sc.slat_reflectance, result.loads}};
    auto loads_out = open_out(fs::path(args.out_dir) / "loads.csv");
    rds::write_loads_csv(rows, loads_out);
    if (args.trace) {
        auto trace_out = open_out(fs::path(args.out_dir) / "trace.csv");
        rds::write_trace_csv(result.trace, trace_out);
    }
    if (args.dump_window_gains) {
        auto gains_out = open_out(fs::path(args.out_dir) / "window_gains.csv");
        rds::write_window_gains_csv(result.gains, gains_out);
    }

    std::cout << sc.city << " " << rds::to_string(sc.mode)
              << " rho=" << sc.slat_reflectance
              << ": heating " << result.loads.annual_heating_kwh()
              << " kWh, cooling " << result.loads.annual_cooling_kwh()
              << " kWh, lighting " << result.loads.annual_lighting_kwh()
              << " kWh, total " << result.loads.annual_total_kwh() << " kWh\n";
    return kExitOk;
}

int cmd_sweep(const std::string& config_path, const std::string& out_dir) {
    std::vector<rds::Scenario> bases;
    if (config_path.empty()) {
        for (const auto& preset : rds::city_presets())
            bases.push_back(rds::scenario_for_city(preset.name));
    } else {
        // The config fixes everything but city identity; the sweep still
        // covers the three preset cities with the configured model knobs.
        rds::Scenario configured = rds::load_scenario_file(config_path);
        for (const auto& preset : rds::city_presets()) {
            rds::Scenario sc = configured;
            sc.city = preset.name;
            sc.site = preset.site;
            sc.wall_u_w_m2k = preset.wall_u_w_m2k;
            sc.glazing.u_value_w_m2k = preset.glazing.u_value_w_m2k;
            sc.glazing.shgc = preset.glazing.shgc;
            sc.weather.monthly_dry_bulb_c = preset.monthly_dry_bulb_c;
            sc.weather.monthly_humidity_pct = preset.monthly_humidity_pct;
            bases.push_back(sc);
        }
    }

    const rds::BlindMode modes[] = {rds::BlindMode::FixedInterior,
                                    rds::BlindMode::FixedExterior,
                                    rds::BlindMode::Rds};
    const double rhos[] = {0.1, 0.5, 0.9};
    auto rows = rds::run_sweep(bases, modes, rhos);
    auto comparison = rds::build_comparison(rows);

    ensure_dir(out_dir);
    auto loads_out = open_out(fs::path(out_dir) / "loads.csv");
    rds::write_loads_csv(rows, loads_out);
    auto cmp_out = open_out(fs::path(out_dir) / "comparison.csv");
    rds::write_comparison_csv(comparison, cmp_out);

    std::cout << "wrote " << rows.size() << " scenario rows and "
              << comparison.size() << " comparison rows to " << out_dir
              << "\n";
    return kExitOk;
}

int cmd_compare(const std::string& runs_dir) {
    fs::path loads_path = fs::path(runs_dir) / "loads.csv";
    std::ifstream in(loads_path);
    if (!in)
        throw rds::ConfigError("cannot open '" + loads_path.string() + "'");
    auto rows = rds::read_loads_csv(in);
    auto comparison = rds::build_comparison(rows);
    auto cmp_out = open_out(fs::path(runs_dir) / "comparison.csv");
    rds::write_comparison_csv(comparison, cmp_out);
    rds::write_comparison_csv(comparison, std::cout);
    return kExitOk;
}

int cmd_blind_table(double width, double separation, double reflectance,
                    const std::string& out_path) {
    rds::SlatGeometry geometry;
    geometry.width_mm = width;
    geometry.separation_mm = separation;
    geometry.reflectance_front = reflectance;
    geometry.reflectance_back = reflectance;
    if (out_path.empty() || out_path == "-") {
        rds::write_blind_table_csv(geometry, std::cout);
    } else {
        auto out = open_out(out_path);
        rds::write_blind_table_csv(geometry, out);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Single-zone fenestration energy simulator with interior, "
                 "exterior and seasonally reversible venetian blinds"};
    app.require_subcommand(1);

    SimulateArgs sim;
    auto* simulate = app.add_subcommand(
        "simulate", "Run one annual scenario and write loads.csv");
    simulate->add_option("--config", sim.config_path, "JSON scenario config");
    simulate->add_option("--weather", sim.weather_path, "EPW weather file");
    simulate->add_option("--mode", sim.mode,
                         "Blind mode: rds|interior|exterior|none");
    simulate->add_option("--reflectance", sim.reflectance,
                         "Slat reflectance in [0, 1]");
    simulate->add_option("--out", sim.out_dir, "Output directory");
    simulate->add_flag("--trace", sim.trace, "Write hourly trace.csv");
    simulate->add_flag("--dump-window-gains", sim.dump_window_gains,
                       "Write hourly window_gains.csv");

    std::string sweep_config, sweep_out = ".";
    auto* sweep = app.add_subcommand(
        "sweep", "Run the 3-city x 3-mode x 3-reflectance table");
    sweep->add_option("--config", sweep_config, "JSON scenario config");
    sweep->add_option("--out", sweep_out, "Output directory");

    std::string runs_dir;
    auto* compare = app.add_subcommand(
        "compare", "Recompute comparison.csv from a stored loads.csv");
    compare->add_option("--runs", runs_dir, "Directory with loads.csv")
        ->required();

    double bt_width = 20.0, bt_sep = 20.0, bt_rho = 0.5;
    std::string bt_out;
    auto* blind_table = app.add_subcommand(
        "blind-table", "Emit slat optical properties over an angle grid");
    blind_table->add_option("--width", bt_width, "Slat width, mm");
    blind_table->add_option("--separation", bt_sep, "Slat separation, mm");
    blind_table->add_option("--reflectance", bt_rho, "Slat reflectance");
    blind_table->add_option("--out", bt_out, "Output CSV path ('-' = stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (simulate->parsed()) return cmd_simulate(sim);
        if (sweep->parsed()) return cmd_sweep(sweep_config, sweep_out);
        if (compare->parsed()) return cmd_compare(runs_dir);
        if (blind_table->parsed())
            return cmd_blind_table(bt_width, bt_sep, bt_rho, bt_out);
    } catch (const rds::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const rds::WeatherError& e) {
        std::cerr << "weather error: " << e.what() << "\n";
        return kExitWeather;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitOk;
}

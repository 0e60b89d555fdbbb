#pragma once

#include <span>
#include <vector>

#include "rds/scenario.hpp"

namespace rds {

struct HourTrace {
    HourStamp time;
    double t_out_c = 0.0;
    double poa_beam_wm2 = 0.0;
    double poa_sky_diffuse_wm2 = 0.0;
    double poa_ground_wm2 = 0.0;
    BlindLocation blind_location = BlindLocation::NoBlind;
    double slat_angle_deg = 0.0;
    double window_q_total_w = 0.0;
    double illuminance_lux = 0.0;
    double lighting_w = 0.0;
    double heating_wh = 0.0;
    double cooling_wh = 0.0;
};

struct RunOptions {
    bool keep_trace = false;
    bool keep_window_gains = false;
};

struct AnnualResult {
    LoadReport loads;
    std::vector<HourTrace> trace;                    // when keep_trace
    std::vector<WindowHeatGainBreakdown> gains;      // when keep_window_gains
};

// Simulates one scenario over the given weather year.
AnnualResult run_annual(const Scenario& scenario, const WeatherSeries& weather,
                        const RunOptions& options = {});

// Builds (or loads) the scenario's weather, then simulates.
AnnualResult run_annual(const Scenario& scenario,
                        const RunOptions& options = {});

WeatherSeries build_weather(const Scenario& scenario);

struct SweepRow {
    std::string city;
    BlindMode mode = BlindMode::Rds;
    double reflectance = 0.5;
    LoadReport loads;
};

// One run_annual per (city, mode, reflectance), identical weather within a
// city, rows emitted in the given order. A failing cell aborts the sweep
// with the scenario identified in the error message.
std::vector<SweepRow> run_sweep(const std::vector<Scenario>& city_bases,
                                std::span<const BlindMode> modes,
                                std::span<const double> reflectances);

std::vector<SweepRow> run_default_sweep();  // 3 cities x 3 modes x 3 rho

// True when the RDS monthly loads equal the matching fixed-mode monthly
// loads in each season (heating months vs FixedInterior, cooling months vs
// FixedExterior) within tol_kwh.
bool rds_monthly_match(const LoadReport& rds, const LoadReport& fixed_interior,
                       const LoadReport& fixed_exterior,
                       const SeasonCalendar& calendar, double tol_kwh = 1e-6);

// Runs the three modes for one city on a shared weather series and checks
// the seasonal decomposition identity.
bool rds_decomposition_check(const Scenario& city_base, double reflectance);

struct ComparisonRow {
    std::string city;
    double reflectance = 0.0;
    double total_interior_kwh = 0.0;
    double total_exterior_kwh = 0.0;
    double total_rds_kwh = 0.0;
    double efficiency_vs_interior = 0.0;
    double efficiency_vs_exterior = 0.0;
};

// Same-reflectance pairings per city. Throws MismatchedWeather if a needed
// row is missing from the sweep table.
std::vector<ComparisonRow> build_comparison(const std::vector<SweepRow>& rows);

}  // namespace rds

#include "rds/engine.hpp"

#include <cmath>
#include <fstream>
#include <string>

#include "rds/daylight.hpp"
#include "rds/errors.hpp"
#include "rds/solar.hpp"

namespace rds {

WeatherSeries build_weather(const Scenario& scenario) {
    if (scenario.weather.epw_path) {
        std::ifstream in(*scenario.weather.epw_path);
        if (!in)
            throw WeatherError("cannot open EPW file '" +
                               *scenario.weather.epw_path + "'");
        WeatherSeries series = parse_epw(in);
        return series;
    }
    return synth_weather(scenario.weather.monthly_dry_bulb_c,
                         scenario.weather.monthly_humidity_pct, scenario.site,
                         scenario.weather.synth);
}

namespace {

WindowHeatGainBreakdown window_breakdown(const Scenario& sc,
                                         const BlindState& blind,
                                         const PlaneIrradiance& poa,
                                         const BlindOpticalProps& optics,
                                         double t_out, double t_zone) {
    switch (blind.location) {
        case BlindLocation::Interior:
            return heat_gain_interior(sc.glazing, blind, poa, t_out, t_zone,
                                      optics, sc.films);
        case BlindLocation::Exterior:
            return heat_gain_exterior(sc.glazing, blind, poa, t_out, t_zone,
                                      optics, sc.films);
        case BlindLocation::NoBlind:
            return heat_gain_bare(sc.glazing, poa, t_out, t_zone, sc.films);
    }
    return {};
}

}  // namespace

namespace {

// Temperature-independent pieces of one simulated hour.
struct HourInputs {
    PlaneIrradiance poa;
    BlindState blind;
    double illuminance_lux = 0.0;
    double lighting_w = 0.0;
    double internal_w = 0.0;
    TempLinearGain window_gain;
    TempLinearGain wall_gain;
    bool heating_available = true;
    bool cooling_available = true;
};

HourInputs prepare_hour(const Scenario& sc, const WeatherRecord& rec,
                        double ua_window, double ua_wall,
                        BlindOpticalProps* optics_out) {
    const HourStamp& t = rec.time;
    HourInputs hour;
    SolarPosition pos = solar_position(sc.site, t);
    hour.poa = plane_of_array(rec, pos, sc.ground_reflectance);
    hour.blind = blind_state_for(sc.mode, sc.calendar, t, sc.slat_reflectance,
                                 sc.slat_base, sc.angles);
    BlindOpticalProps optics =
        hour.blind.location == BlindLocation::NoBlind
            ? unit_optics()
            : blind_properties(hour.blind, hour.poa.profile_deg, Band::Solar);

    if (sc.gains.schedule.occupied(t)) {
        hour.illuminance_lux = interior_illuminance(
            hour.poa, optics, sc.glazing, sc.zone, sc.daylight);
        double fraction = dimming_fraction(
            hour.illuminance_lux, sc.daylight.illuminance_setpoint_lux);
        hour.lighting_w = lighting_power(fraction, sc.gains, sc.zone, true);
    }
    hour.internal_w = internal_gain_at(sc.gains, sc.zone, t);

    // The window gain is affine in zone temperature with slope U*A, so one
    // evaluation at dT = 0 fixes its solar part.
    WindowHeatGainBreakdown fixed_part = window_breakdown(
        sc, hour.blind, hour.poa, optics, rec.dry_bulb_c, rec.dry_bulb_c);
    hour.window_gain = TempLinearGain{fixed_part.q_total, ua_window,
                                      rec.dry_bulb_c};
    hour.wall_gain = TempLinearGain{0.0, ua_wall, rec.dry_bulb_c};

    if (sc.hvac_seasonal_availability) {
        hour.heating_available = sc.calendar.is_heating(t.month);
        hour.cooling_available = !hour.heating_available;
    }
    if (optics_out) *optics_out = optics;
    return hour;
}

IdealLoadResult advance_hour(const Scenario& sc, const HourInputs& hour,
                             double zone_temp_c) {
    return capacitive_step_hour(zone_temp_c, sc.zone_capacitance_wh_per_k,
                                hour.window_gain, hour.wall_gain,
                                hour.internal_w, hour.lighting_w,
                                sc.setpoints, hour.heating_available,
                                hour.cooling_available);
}

}  // namespace

AnnualResult run_annual(const Scenario& scenario, const WeatherSeries& weather,
                        const RunOptions& options) {
    scenario.validate();
    if (weather.records.size() != static_cast<size_t>(kHoursPerYear))
        throw WrongLength("weather series must cover 8760 hours");

    AnnualResult result;
    if (options.keep_trace) result.trace.reserve(kHoursPerYear);
    if (options.keep_window_gains) result.gains.reserve(kHoursPerYear);

    const double ua_window = scenario.glazing.u_value_w_m2k *
                             scenario.glazing.area_m2;
    const double ua_wall = scenario.wall_u_w_m2k *
                           scenario.zone.opaque_wall_area_m2();

    // Months are simulated as independent periods: the first day of each
    // month is repeated until the zone state converges (warmup), so a
    // month's loads depend only on its own weather and blind mode.
    for (int m = 0; m < 12; ++m) {
        int first_hour = kDaysBeforeMonth[m] * 24;
        int hours_in_month = kDaysInMonth[m] * 24;

        double zone_temp =
            0.5 * (scenario.setpoints.heating_c + scenario.setpoints.cooling_c);
        if (scenario.zone_capacitance_wh_per_k > 0.0) {
            for (int pass = 0; pass < 30; ++pass) {
                double start_temp = zone_temp;
                for (int h = first_hour; h < first_hour + 24; ++h) {
                    HourInputs hour =
                        prepare_hour(scenario, weather.records[h], ua_window,
                                     ua_wall, nullptr);
                    zone_temp = advance_hour(scenario, hour, zone_temp)
                                    .zone_air_temp_c;
                }
                if (std::abs(zone_temp - start_temp) < 1e-9) break;
            }
        }

        for (int h = first_hour; h < first_hour + hours_in_month; ++h) {
            const WeatherRecord& rec = weather.records[h];
            BlindOpticalProps optics;
            HourInputs hour =
                prepare_hour(scenario, rec, ua_window, ua_wall, &optics);
            IdealLoadResult loads = advance_hour(scenario, hour, zone_temp);
            zone_temp = loads.zone_air_temp_c;

            MonthlyLoads& month = result.loads.monthly[m];
            month.heating_kwh += loads.heating_wh / 1000.0;
            month.cooling_kwh += loads.cooling_wh / 1000.0;
            month.lighting_kwh += hour.lighting_w / 1000.0;

            if (options.keep_trace) {
                HourTrace tr;
                tr.time = rec.time;
                tr.t_out_c = rec.dry_bulb_c;
                tr.poa_beam_wm2 = hour.poa.beam_wm2;
                tr.poa_sky_diffuse_wm2 = hour.poa.sky_diffuse_wm2;
                tr.poa_ground_wm2 = hour.poa.ground_reflected_wm2;
                tr.blind_location = hour.blind.location;
                tr.slat_angle_deg =
                    hour.blind.location == BlindLocation::NoBlind
                        ? 0.0
                        : hour.blind.slat_angle_deg;
                tr.window_q_total_w = hour.window_gain.at(loads.zone_air_temp_c);
                tr.illuminance_lux = hour.illuminance_lux;
                tr.lighting_w = hour.lighting_w;
                tr.heating_wh = loads.heating_wh;
                tr.cooling_wh = loads.cooling_wh;
                result.trace.push_back(tr);
            }
            if (options.keep_window_gains) {
                result.gains.push_back(window_breakdown(
                    scenario, hour.blind, hour.poa, optics, rec.dry_bulb_c,
                    loads.zone_air_temp_c));
            }
        }
    }
    return result;
}

AnnualResult run_annual(const Scenario& scenario, const RunOptions& options) {
    return run_annual(scenario, build_weather(scenario), options);
}

std::vector<SweepRow> run_sweep(const std::vector<Scenario>& city_bases,
                                std::span<const BlindMode> modes,
                                std::span<const double> reflectances) {
    std::vector<SweepRow> rows;
    rows.reserve(city_bases.size() * modes.size() * reflectances.size());
    for (const Scenario& base : city_bases) {
        WeatherSeries weather = build_weather(base);
        for (BlindMode mode : modes) {
            for (double rho : reflectances) {
                Scenario sc = base;
                sc.mode = mode;
                sc.slat_reflectance = rho;
                try {
                    AnnualResult run = run_annual(sc, weather);
                    rows.push_back(SweepRow{sc.city, mode, rho, run.loads});
                } catch (const SimError& e) {
                    throw NumericError("sweep cell failed (" + sc.city + ", " +
                                       to_string(mode) + ", rho=" +
                                       std::to_string(rho) + "): " + e.what());
                }
            }
        }
    }
    return rows;
}

std::vector<SweepRow> run_default_sweep() {
    std::vector<Scenario> bases;
    for (const auto& preset : city_presets())
        bases.push_back(scenario_for_city(preset.name));
    const BlindMode modes[] = {BlindMode::FixedInterior,
                               BlindMode::FixedExterior, BlindMode::Rds};
    const double rhos[] = {0.1, 0.5, 0.9};
    return run_sweep(bases, modes, rhos);
}

bool rds_monthly_match(const LoadReport& rds, const LoadReport& fixed_interior,
                       const LoadReport& fixed_exterior,
                       const SeasonCalendar& calendar, double tol_kwh) {
    for (int m = 1; m <= 12; ++m) {
        const MonthlyLoads& got = rds.monthly[m - 1];
        const MonthlyLoads& want = calendar.is_heating(m)
                                       ? fixed_interior.monthly[m - 1]
                                       : fixed_exterior.monthly[m - 1];
        if (std::abs(got.heating_kwh - want.heating_kwh) > tol_kwh) return false;
        if (std::abs(got.cooling_kwh - want.cooling_kwh) > tol_kwh) return false;
        if (std::abs(got.lighting_kwh - want.lighting_kwh) > tol_kwh)
            return false;
    }
    return true;
}

bool rds_decomposition_check(const Scenario& city_base, double reflectance) {
    WeatherSeries weather = build_weather(city_base);

    auto run_mode = [&](BlindMode mode) {
        Scenario sc = city_base;
        sc.mode = mode;
        sc.slat_reflectance = reflectance;
        return run_annual(sc, weather).loads;
    };

    LoadReport rds = run_mode(BlindMode::Rds);
    LoadReport fixed_int = run_mode(BlindMode::FixedInterior);
    LoadReport fixed_ext = run_mode(BlindMode::FixedExterior);
    return rds_monthly_match(rds, fixed_int, fixed_ext, city_base.calendar);
}

std::vector<ComparisonRow> build_comparison(const std::vector<SweepRow>& rows) {
    std::vector<std::string> cities;
    std::vector<double> rhos;
    for (const auto& row : rows) {
        if (std::find(cities.begin(), cities.end(), row.city) == cities.end())
            cities.push_back(row.city);
        bool seen = false;
        for (double r : rhos) seen = seen || r == row.reflectance;
        if (!seen) rhos.push_back(row.reflectance);
    }

    auto find_row = [&](const std::string& city, BlindMode mode,
                        double rho) -> const SweepRow& {
        for (const auto& row : rows)
            if (row.city == city && row.mode == mode && row.reflectance == rho)
                return row;
        throw MismatchedWeather("comparison needs (" + city + ", " +
                                to_string(mode) + ", rho=" +
                                std::to_string(rho) + ") in the sweep table");
    };

    std::vector<ComparisonRow> out;
    for (const auto& city : cities) {
        for (double rho : rhos) {
            const SweepRow& rds = find_row(city, BlindMode::Rds, rho);
            const SweepRow& fi = find_row(city, BlindMode::FixedInterior, rho);
            const SweepRow& fe = find_row(city, BlindMode::FixedExterior, rho);
            ComparisonRow row;
            row.city = city;
            row.reflectance = rho;
            row.total_interior_kwh = fi.loads.annual_total_kwh();
            row.total_exterior_kwh = fe.loads.annual_total_kwh();
            row.total_rds_kwh = rds.loads.annual_total_kwh();
            row.efficiency_vs_interior = efficiency(fi.loads, rds.loads);
            row.efficiency_vs_exterior = efficiency(fe.loads, rds.loads);
            out.push_back(row);
        }
    }
    return out;
}

}  // namespace rds

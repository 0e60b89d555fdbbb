#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rds/blind_optics.hpp"
#include "rds/daylight.hpp"
#include "rds/fenestration.hpp"
#include "rds/weather.hpp"
#include "rds/zone.hpp"

namespace rds {

enum class BlindMode { FixedInterior, FixedExterior, Rds, NoBlind };

const char* to_string(BlindMode mode);
BlindMode blind_mode_from_string(const std::string& name);

// Fixed heating/cooling season split of the twelve months.
struct SeasonCalendar {
    std::array<bool, 12> heating_month{};  // index 0 = January

    // November through April heat; May through October cool.
    static SeasonCalendar standard();

    bool is_heating(int month) const { return heating_month[month - 1]; }
    void validate() const;
};

struct BlindAngles {
    double heating_deg = 120.0;
    double cooling_deg = 30.0;
};

// Weather input: an EPW path or monthly normals for the synthesizer.
struct WeatherSource {
    std::optional<std::string> epw_path;
    std::array<double, 12> monthly_dry_bulb_c{};
    std::array<double, 12> monthly_humidity_pct{};
    SynthOptions synth;

    bool operator==(const WeatherSource&) const = default;
};

struct Scenario {
    std::string city = "Tehran";
    SitePosition site{35.42, 51.15, 3.5};
    WeatherSource weather;
    ZoneSpec zone;
    double wall_u_w_m2k = 0.437;
    GlazingSpec glazing;
    BlindMode mode = BlindMode::Rds;
    double slat_reflectance = 0.5;
    SlatGeometry slat_base;
    BlindAngles angles;
    SeasonCalendar calendar = SeasonCalendar::standard();
    DaylightConfig daylight;
    InternalGains gains;
    Setpoints setpoints;
    FilmCoefficients films;
    double ground_reflectance = 0.2;
    // Lumped zone thermal capacitance (air plus furnishings); months warm
    // up from their own first day, so each month stays self-contained.
    double zone_capacitance_wh_per_k = 40.0;
    // Ideal-loads plant availability follows the season calendar: heating
    // is met during heating months, cooling during cooling months.
    bool hvac_seasonal_availability = true;

    void validate() const;
};

// Blind placement and slat angle for one hour: 120 deg in heating months,
// 30 deg in cooling months; RDS moves the blind inside for the heating
// season and outside for the cooling season.
BlindState blind_state_for(BlindMode mode, const SeasonCalendar& calendar,
                           const HourStamp& time, double reflectance,
                           const SlatGeometry& base_geometry = {},
                           const BlindAngles& angles = {});

// (base_total - rds_total) / base_total. Throws ZeroBase.
double efficiency(const LoadReport& base, const LoadReport& rds);

// City presets: coordinates, envelope conductances (converted from the
// tabulated IP values) and monthly climate normals.
struct CityPreset {
    std::string name;
    SitePosition site;
    double wall_u_w_m2k;
    GlazingSpec glazing;
    std::array<double, 12> monthly_dry_bulb_c;
    std::array<double, 12> monthly_humidity_pct;
};

const std::vector<CityPreset>& city_presets();
const CityPreset& city_preset(const std::string& name);  // throws ConfigError
Scenario scenario_for_city(const std::string& name,
                           BlindMode mode = BlindMode::Rds,
                           double reflectance = 0.5);

}  // namespace rds

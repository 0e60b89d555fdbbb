#include "rds/scenario.hpp"

#include <algorithm>
#include <cmath>

#include "rds/errors.hpp"

namespace rds {

const char* to_string(BlindMode mode) {
    switch (mode) {
        case BlindMode::FixedInterior: return "interior";
        case BlindMode::FixedExterior: return "exterior";
        case BlindMode::Rds: return "rds";
        case BlindMode::NoBlind: return "none";
    }
    return "?";
}

BlindMode blind_mode_from_string(const std::string& name) {
    if (name == "interior") return BlindMode::FixedInterior;
    if (name == "exterior") return BlindMode::FixedExterior;
    if (name == "rds") return BlindMode::Rds;
    if (name == "none") return BlindMode::NoBlind;
    throw ConfigError("unknown blind mode '" + name + "'");
}

SeasonCalendar SeasonCalendar::standard() {
    SeasonCalendar cal;
    for (int m : {11, 12, 1, 2, 3, 4}) cal.heating_month[m - 1] = true;
    return cal;
}

void SeasonCalendar::validate() const {
    // Any subset is a valid partition; heating months and cooling months
    // are complements by construction.
}

void Scenario::validate() const {
    site.validate();
    zone.validate();
    glazing.validate();
    slat_base.validate();
    setpoints.validate();
    daylight.validate();
    if (wall_u_w_m2k <= 0.0) throw ConfigError("wall U-value must be > 0");
    if (slat_reflectance < 0.0 || slat_reflectance > 1.0)
        throw ConfigError("slat reflectance outside [0, 1]");
    if (ground_reflectance < 0.0 || ground_reflectance > 1.0)
        throw ConfigError("ground reflectance outside [0, 1]");
    if (!weather.epw_path) {
        for (double rh : weather.monthly_humidity_pct)
            if (rh < 0.0 || rh > 100.0)
                throw ConfigError("monthly humidity outside [0, 100]");
    }
}

BlindState blind_state_for(BlindMode mode, const SeasonCalendar& calendar,
                           const HourStamp& time, double reflectance,
                           const SlatGeometry& base_geometry,
                           const BlindAngles& angles) {
    BlindState state;
    if (mode == BlindMode::NoBlind) return state;

    bool heating = calendar.is_heating(time.month);
    state.slat_angle_deg = heating ? angles.heating_deg : angles.cooling_deg;
    state.geometry = base_geometry;
    state.geometry.reflectance_front = reflectance;
    state.geometry.reflectance_back = reflectance;

    switch (mode) {
        case BlindMode::FixedInterior:
            state.location = BlindLocation::Interior;
            break;
        case BlindMode::FixedExterior:
            state.location = BlindLocation::Exterior;
            break;
        case BlindMode::Rds:
            state.location =
                heating ? BlindLocation::Interior : BlindLocation::Exterior;
            break;
        case BlindMode::NoBlind:
            break;
    }
    return state;
}

double efficiency(const LoadReport& base, const LoadReport& rds) {
    double base_total = base.annual_total_kwh();
    if (base_total == 0.0) throw ZeroBase("efficiency base total is zero");
    return (base_total - rds.annual_total_kwh()) / base_total;
}

namespace {

GlazingSpec glazing_from_ip(double u_ip, double shgc, double area_m2) {
    GlazingSpec g;
    g.u_value_w_m2k = u_ip * kIpToSiU;
    g.shgc = shgc;
    g.area_m2 = area_m2;
    return g;
}

std::vector<CityPreset> make_presets() {
    const double window_area = ZoneSpec{}.window_area_m2();
    std::vector<CityPreset> presets;

    presets.push_back(CityPreset{
        "Tehran",
        SitePosition{35.42, 51.15, 3.5},
        0.077 * kIpToSiU,
        glazing_from_ip(0.42, 0.25, window_area),
        {3.89, 4.98, 10.66, 16.3, 21.74, 28.26, 29.87, 30.07, 25.9, 17.79,
         11.41, 5.59},
        {60.04, 56.82, 49.55, 38.91, 34.1, 21.92, 25.67, 24.48, 25.75, 38.24,
         49.15, 63.0}});

    presets.push_back(CityPreset{
        "Tabriz",
        SitePosition{38.13, 46.23, 3.5},
        0.064 * kIpToSiU,
        glazing_from_ip(0.36, 0.36, window_area),
        {-1.52, 0.52, 6.55, 11.78, 17.45, 22.96, 26.27, 26.9, 22.13, 14.96,
         6.21, 0.21},
        {64.17, 66.05, 56.26, 52.61, 49.35, 37.98, 34.95, 31.21, 36.15, 47.84,
         63.1, 66.41}});

    presets.push_back(CityPreset{
        "Yazd",
        SitePosition{31.90, 54.28, 3.5},
        0.084 * kIpToSiU,
        glazing_from_ip(0.45, 0.25, window_area),
        {7.11, 9.98, 16.0, 21.0, 25.77, 31.4, 33.17, 31.28, 27.63, 21.03,
         12.86, 7.06},
        {49.38, 39.66, 26.93, 30.86, 21.66, 14.22, 15.62, 13.07, 15.82, 21.69,
         33.16, 46.45}});

    return presets;
}

}  // namespace

const std::vector<CityPreset>& city_presets() {
    static const std::vector<CityPreset> presets = make_presets();
    return presets;
}

const CityPreset& city_preset(const std::string& name) {
    for (const auto& p : city_presets())
        if (p.name == name) return p;
    throw ConfigError("unknown city '" + name + "'");
}

Scenario scenario_for_city(const std::string& name, BlindMode mode,
                           double reflectance) {
    const CityPreset& preset = city_preset(name);
    Scenario sc;
    sc.city = preset.name;
    sc.site = preset.site;
    sc.wall_u_w_m2k = preset.wall_u_w_m2k;
    sc.glazing = preset.glazing;
    sc.weather.monthly_dry_bulb_c = preset.monthly_dry_bulb_c;
    sc.weather.monthly_humidity_pct = preset.monthly_humidity_pct;
    sc.mode = mode;
    sc.slat_reflectance = reflectance;
    return sc;
}

}  // namespace rds

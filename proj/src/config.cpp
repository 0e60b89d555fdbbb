#include "rds/config.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rds/errors.hpp"
#include "rds/fenestration.hpp"

namespace rds {

namespace {

using nlohmann::json;

double num(const json& j, const char* key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number())
        throw ConfigError(std::string("'") + key + "' must be a number");
    return j[key].get<double>();
}

bool flag(const json& j, const char* key, bool fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_boolean())
        throw ConfigError(std::string("'") + key + "' must be a boolean");
    return j[key].get<bool>();
}

std::array<double, 12> monthly(const json& j, const char* key,
                               const std::array<double, 12>& fallback) {
    if (!j.contains(key)) return fallback;
    const json& arr = j[key];
    if (!arr.is_array() || arr.size() != 12)
        throw ConfigError(std::string("'") + key +
                          "' must be an array of 12 numbers");
    std::array<double, 12> out{};
    for (int i = 0; i < 12; ++i) {
        if (!arr[i].is_number())
            throw ConfigError(std::string("'") + key + "' entries must be numbers");
        out[i] = arr[i].get<double>();
    }
    return out;
}

}  // namespace

Scenario load_scenario_json(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }

    Scenario sc = j.contains("city")
                      ? scenario_for_city(j["city"].get<std::string>())
                      : scenario_for_city("Tehran");

    if (j.contains("mode"))
        sc.mode = blind_mode_from_string(j["mode"].get<std::string>());
    sc.slat_reflectance = num(j, "reflectance", sc.slat_reflectance);
    sc.ground_reflectance = num(j, "ground_reflectance", sc.ground_reflectance);

    if (j.contains("site")) {
        const json& s = j["site"];
        sc.site.latitude_deg = num(s, "latitude", sc.site.latitude_deg);
        sc.site.longitude_deg = num(s, "longitude", sc.site.longitude_deg);
        sc.site.timezone_hours = num(s, "timezone", sc.site.timezone_hours);
    }

    if (j.contains("weather")) {
        const json& w = j["weather"];
        if (w.contains("epw_path"))
            sc.weather.epw_path = w["epw_path"].get<std::string>();
        sc.weather.monthly_dry_bulb_c =
            monthly(w, "monthly_dry_bulb", sc.weather.monthly_dry_bulb_c);
        sc.weather.monthly_humidity_pct =
            monthly(w, "monthly_humidity", sc.weather.monthly_humidity_pct);
        sc.weather.synth.diurnal_amplitude_c =
            num(w, "diurnal_amplitude", sc.weather.synth.diurnal_amplitude_c);
        sc.weather.synth.diffuse_fraction =
            num(w, "diffuse_fraction", sc.weather.synth.diffuse_fraction);
    }

    if (j.contains("zone")) {
        const json& z = j["zone"];
        sc.zone.width_m = num(z, "width", sc.zone.width_m);
        sc.zone.depth_m = num(z, "depth", sc.zone.depth_m);
        sc.zone.height_m = num(z, "height", sc.zone.height_m);
        sc.zone.wwr = num(z, "wwr", sc.zone.wwr);
        sc.zone_capacitance_wh_per_k =
            num(z, "capacitance_wh_per_k", sc.zone_capacitance_wh_per_k);
        sc.glazing.area_m2 = sc.zone.window_area_m2();
    }

    if (j.contains("envelope")) {
        const json& e = j["envelope"];
        if (e.contains("wall_u_ip"))
            sc.wall_u_w_m2k = num(e, "wall_u_ip", 0.0) * kIpToSiU;
        sc.wall_u_w_m2k = num(e, "wall_u", sc.wall_u_w_m2k);
        if (e.contains("window_u_ip"))
            sc.glazing.u_value_w_m2k = num(e, "window_u_ip", 0.0) * kIpToSiU;
        sc.glazing.u_value_w_m2k = num(e, "window_u", sc.glazing.u_value_w_m2k);
        sc.glazing.shgc = num(e, "shgc", sc.glazing.shgc);
        sc.glazing.tau_visible = num(e, "tau_visible", sc.glazing.tau_visible);
    }

    if (j.contains("blind")) {
        const json& b = j["blind"];
        sc.slat_base.width_mm = num(b, "slat_width_mm", sc.slat_base.width_mm);
        sc.slat_base.separation_mm =
            num(b, "slat_separation_mm", sc.slat_base.separation_mm);
        sc.slat_base.conductivity_w_mk =
            num(b, "conductivity", sc.slat_base.conductivity_w_mk);
        sc.slat_base.emissivity_front =
            num(b, "emissivity_front", sc.slat_base.emissivity_front);
        sc.slat_base.emissivity_back =
            num(b, "emissivity_back", sc.slat_base.emissivity_back);
        sc.angles.heating_deg = num(b, "angle_heating", sc.angles.heating_deg);
        sc.angles.cooling_deg = num(b, "angle_cooling", sc.angles.cooling_deg);
    }

    if (j.contains("daylight")) {
        const json& d = j["daylight"];
        sc.daylight.illuminance_setpoint_lux =
            num(d, "setpoint_lux", sc.daylight.illuminance_setpoint_lux);
        sc.daylight.sensor_height_m =
            num(d, "sensor_height", sc.daylight.sensor_height_m);
        sc.daylight.luminous_efficacy_beam =
            num(d, "efficacy_beam", sc.daylight.luminous_efficacy_beam);
        sc.daylight.luminous_efficacy_diffuse =
            num(d, "efficacy_diffuse", sc.daylight.luminous_efficacy_diffuse);
        sc.daylight.room_utilization =
            num(d, "utilization", sc.daylight.room_utilization);
    }

    if (j.contains("gains")) {
        const json& g = j["gains"];
        sc.gains.people_count = num(g, "people", sc.gains.people_count);
        sc.gains.sensible_per_person_w =
            num(g, "sensible_per_person", sc.gains.sensible_per_person_w);
        sc.gains.lighting_density_wm2 =
            num(g, "lighting_wm2", sc.gains.lighting_density_wm2);
        sc.gains.equipment_density_wm2 =
            num(g, "equipment_wm2", sc.gains.equipment_density_wm2);
        sc.gains.equipment_standby_fraction =
            num(g, "standby_fraction", sc.gains.equipment_standby_fraction);
        sc.gains.schedule.start_hour = static_cast<int>(
            num(g, "occupied_start_hour", sc.gains.schedule.start_hour));
        sc.gains.schedule.end_hour = static_cast<int>(
            num(g, "occupied_end_hour", sc.gains.schedule.end_hour));
        sc.gains.schedule.weekdays_only =
            flag(g, "weekdays_only", sc.gains.schedule.weekdays_only);
    }

    if (j.contains("setpoints")) {
        const json& s = j["setpoints"];
        sc.setpoints.heating_c = num(s, "heating", sc.setpoints.heating_c);
        sc.setpoints.cooling_c = num(s, "cooling", sc.setpoints.cooling_c);
    }

    if (j.contains("calendar")) {
        const json& c = j["calendar"];
        if (c.contains("heating_months")) {
            const json& arr = c["heating_months"];
            if (!arr.is_array())
                throw ConfigError("'heating_months' must be an array of months");
            sc.calendar = SeasonCalendar{};
            for (const auto& m : arr) {
                int month = m.get<int>();
                if (month < 1 || month > 12)
                    throw ConfigError("'heating_months' entries must be 1-12");
                sc.calendar.heating_month[month - 1] = true;
            }
        }
    }

    if (j.contains("hvac")) {
        sc.hvac_seasonal_availability =
            flag(j["hvac"], "seasonal_availability",
                 sc.hvac_seasonal_availability);
    }

    if (j.contains("films")) {
        const json& f = j["films"];
        sc.films.gap_convective = num(f, "gap_convective", sc.films.gap_convective);
        sc.films.room_convective =
            num(f, "room_convective", sc.films.room_convective);
        sc.films.blind_radiative =
            num(f, "blind_radiative", sc.films.blind_radiative);
        sc.films.radiant_fraction_inner =
            num(f, "radiant_fraction_inner", sc.films.radiant_fraction_inner);
        sc.films.shgc_direct_fraction =
            num(f, "shgc_direct_fraction", sc.films.shgc_direct_fraction);
        sc.films.glass_front_reflectance =
            num(f, "glass_front_reflectance", sc.films.glass_front_reflectance);
        sc.films.inner_film = num(f, "inner_film", sc.films.inner_film);
        sc.films.blind_to_glass_radiative = num(
            f, "blind_to_glass_radiative", sc.films.blind_to_glass_radiative);
    }

    try {
        sc.validate();
    } catch (const SimError& e) {
        throw ConfigError(std::string("invalid scenario: ") + e.what());
    }
    return sc;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return load_scenario_json(ss.str());
}

}  // namespace rds

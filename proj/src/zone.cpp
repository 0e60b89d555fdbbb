#include "rds/zone.hpp"

#include <algorithm>

#include "rds/errors.hpp"

namespace rds {

void ZoneSpec::validate() const {
    if (width_m <= 0.0 || depth_m <= 0.0 || height_m <= 0.0)
        throw ConfigError("zone dimensions must be > 0");
    if (wwr <= 0.0 || wwr >= 1.0) throw ConfigError("WWR outside (0, 1)");
}

void Setpoints::validate() const {
    if (heating_c >= cooling_c)
        throw ConfigError("heating setpoint must be below cooling setpoint");
}

double LoadReport::annual_heating_kwh() const {
    double sum = 0.0;
    for (const auto& m : monthly) sum += m.heating_kwh;
    return sum;
}

double LoadReport::annual_cooling_kwh() const {
    double sum = 0.0;
    for (const auto& m : monthly) sum += m.cooling_kwh;
    return sum;
}

double LoadReport::annual_lighting_kwh() const {
    double sum = 0.0;
    for (const auto& m : monthly) sum += m.lighting_kwh;
    return sum;
}

double LoadReport::annual_total_kwh() const {
    return annual_heating_kwh() + annual_cooling_kwh() + annual_lighting_kwh();
}

IdealLoadResult step_hour(const TempLinearGain& window_gain,
                          const TempLinearGain& wall_gain,
                          double internal_gain_w, double lighting_power_w,
                          const Setpoints& setpoints) {
    IdealLoadResult result;
    const double fixed =
        window_gain.fixed_w + wall_gain.fixed_w + internal_gain_w + lighting_power_w;
    const double ua = window_gain.ua_w_per_k + wall_gain.ua_w_per_k;
    const double t_out = window_gain.t_out_c;

    auto net_at = [&](double t_zone) { return fixed + ua * (t_out - t_zone); };

    // Net gain is strictly decreasing in zone temperature, so at most one
    // of the two setpoint evaluations yields a load.
    result.cooling_wh = std::max(0.0, net_at(setpoints.cooling_c));
    result.heating_wh = std::max(0.0, -net_at(setpoints.heating_c));

    if (result.cooling_wh > 0.0)
        result.zone_air_temp_c = setpoints.cooling_c;
    else if (result.heating_wh > 0.0)
        result.zone_air_temp_c = setpoints.heating_c;
    else
        result.zone_air_temp_c =
            ua > 0.0 ? std::clamp(t_out + fixed / ua, setpoints.heating_c,
                                  setpoints.cooling_c)
                     : std::clamp(t_out, setpoints.heating_c, setpoints.cooling_c);
    return result;
}

IdealLoadResult capacitive_step_hour(double zone_temp_c,
                                     double capacitance_wh_per_k,
                                     const TempLinearGain& window_gain,
                                     const TempLinearGain& wall_gain,
                                     double internal_gain_w,
                                     double lighting_power_w,
                                     const Setpoints& setpoints,
                                     bool heating_available,
                                     bool cooling_available) {
    const double c = capacitance_wh_per_k;
    const double fixed =
        window_gain.fixed_w + wall_gain.fixed_w + internal_gain_w + lighting_power_w;
    const double ua = window_gain.ua_w_per_k + wall_gain.ua_w_per_k;
    const double t_out = window_gain.t_out_c;

    IdealLoadResult result;
    if (c <= 0.0) {
        result = step_hour(window_gain, wall_gain, internal_gain_w,
                           lighting_power_w, setpoints);
        if (!cooling_available) result.cooling_wh = 0.0;
        if (!heating_available) result.heating_wh = 0.0;
        return result;
    }

    // Implicit free-float over one hour; denominators stay positive.
    double t_free = (c * zone_temp_c + fixed + ua * t_out) / (c + ua);
    if (cooling_available && t_free > setpoints.cooling_c) {
        result.cooling_wh = (c + ua) * (t_free - setpoints.cooling_c);
        result.zone_air_temp_c = setpoints.cooling_c;
    } else if (heating_available && t_free < setpoints.heating_c) {
        result.heating_wh = (c + ua) * (setpoints.heating_c - t_free);
        result.zone_air_temp_c = setpoints.heating_c;
    } else {
        result.zone_air_temp_c = t_free;
    }
    return result;
}

double internal_gain_at(const InternalGains& gains, const ZoneSpec& zone,
                        const HourStamp& time) {
    double equipment = gains.equipment_density_wm2 * zone.floor_area_m2();
    if (gains.schedule.occupied(time))
        return gains.people_count * gains.sensible_per_person_w + equipment;
    return gains.equipment_standby_fraction * equipment;
}

}  // namespace rds

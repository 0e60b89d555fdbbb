#pragma once

#include <array>

#include "rds/calendar.hpp"
#include "rds/fenestration.hpp"

namespace rds {

// South-oriented single office zone; all surfaces except the south wall
// are adiabatic.
struct ZoneSpec {
    double width_m = 3.5;
    double depth_m = 4.0;
    double height_m = 3.0;
    double wwr = 0.30;

    double floor_area_m2() const { return width_m * depth_m; }
    double south_gross_area_m2() const { return width_m * height_m; }
    double window_area_m2() const { return wwr * south_gross_area_m2(); }
    double opaque_wall_area_m2() const {
        return south_gross_area_m2() - window_area_m2();
    }

    void validate() const;
};

struct OccupancySchedule {
    int start_hour = 9;   // inclusive
    int end_hour = 19;    // exclusive
    bool weekdays_only = true;

    bool occupied(const HourStamp& t) const {
        if (weekdays_only && !t.is_weekday()) return false;
        return t.hour >= start_hour && t.hour < end_hour;
    }
};

struct InternalGains {
    double people_count = 2.0;
    double sensible_per_person_w = 120.0;
    double lighting_density_wm2 = 7.97;
    double equipment_density_wm2 = 6.89;
    double equipment_standby_fraction = 0.1;
    OccupancySchedule schedule;
};

struct Setpoints {
    double heating_c = 21.0;
    double cooling_c = 26.0;

    void validate() const;
};

struct IdealLoadResult {
    double heating_wh = 0.0;
    double cooling_wh = 0.0;
    double zone_air_temp_c = 0.0;
};

// A gain that is affine in zone temperature: value(t) = fixed + ua*(t_out-t).
struct TempLinearGain {
    double fixed_w = 0.0;
    double ua_w_per_k = 0.0;
    double t_out_c = 0.0;

    double at(double t_zone_c) const {
        return fixed_w + ua_w_per_k * (t_out_c - t_zone_c);
    }
};

struct MonthlyLoads {
    double heating_kwh = 0.0;
    double cooling_kwh = 0.0;
    double lighting_kwh = 0.0;

    double total_kwh() const { return heating_kwh + cooling_kwh + lighting_kwh; }
};

struct LoadReport {
    std::array<MonthlyLoads, 12> monthly{};

    double annual_heating_kwh() const;
    double annual_cooling_kwh() const;
    double annual_lighting_kwh() const;
    double annual_total_kwh() const;
};

// Steady-state ideal-loads hour: the net balance is evaluated at each
// setpoint; since it is strictly decreasing in zone temperature at most one
// of heating/cooling is positive.
IdealLoadResult step_hour(const TempLinearGain& window_gain,
                          const TempLinearGain& wall_gain,
                          double internal_gain_w, double lighting_power_w,
                          const Setpoints& setpoints);

// Ideal-loads hour with a lumped zone capacitance (implicit step). When the
// needed plant is unavailable the zone floats past the setpoint and the
// state carries the surplus or deficit into later hours.
IdealLoadResult capacitive_step_hour(double zone_temp_c,
                                     double capacitance_wh_per_k,
                                     const TempLinearGain& window_gain,
                                     const TempLinearGain& wall_gain,
                                     double internal_gain_w,
                                     double lighting_power_w,
                                     const Setpoints& setpoints,
                                     bool heating_available,
                                     bool cooling_available);

// Occupant + equipment sensible gain (lighting handled separately).
// Unoccupied hours keep equipment at standby.
double internal_gain_at(const InternalGains& gains, const ZoneSpec& zone,
                        const HourStamp& time);

}  // namespace rds

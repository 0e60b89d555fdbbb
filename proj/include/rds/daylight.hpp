#pragma once

#include "rds/blind_optics.hpp"
#include "rds/fenestration.hpp"
#include "rds/solar.hpp"
#include "rds/zone.hpp"

namespace rds {

struct DaylightConfig {
    double illuminance_setpoint_lux = 400.0;
    double sensor_height_m = 0.8;
    double luminous_efficacy_beam = 93.0;    // lm/W
    double luminous_efficacy_diffuse = 110.0;
    double room_utilization = 0.75;

    void validate() const;
};

// Lumen-method workplane illuminance from daylight transmitted through
// blind and glazing; beam passing the blind unscattered is counted as
// diffuse at the single averaged sensor.
double interior_illuminance(const PlaneIrradiance& poa,
                            const BlindOpticalProps& optics_visible,
                            const GlazingSpec& glazing, const ZoneSpec& zone,
                            const DaylightConfig& cfg);

// Continuous linear dimming to zero: clamp(1 - e/setpoint, 0, 1).
double dimming_fraction(double e_daylight_lux, double setpoint_lux);

// Electric lighting power for the dimming fraction; zero when unoccupied.
// All of it also enters the zone balance as heat.
double lighting_power(double fraction, const InternalGains& gains,
                      const ZoneSpec& zone, bool occupied);

}  // namespace rds

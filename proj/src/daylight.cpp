#include "rds/daylight.hpp"

#include <algorithm>

#include "rds/errors.hpp"

namespace rds {

void DaylightConfig::validate() const {
    if (illuminance_setpoint_lux <= 0.0)
        throw ConfigError("illuminance setpoint must be > 0");
    if (luminous_efficacy_beam <= 0.0 || luminous_efficacy_diffuse <= 0.0)
        throw ConfigError("luminous efficacies must be > 0");
    if (room_utilization <= 0.0 || room_utilization > 1.0)
        throw ConfigError("room utilization outside (0, 1]");
}

double interior_illuminance(const PlaneIrradiance& poa,
                            const BlindOpticalProps& optics_visible,
                            const GlazingSpec& glazing, const ZoneSpec& zone,
                            const DaylightConfig& cfg) {
    double flux_lm =
        glazing.area_m2 *
        (poa.beam_wm2 * cfg.luminous_efficacy_beam *
             (optics_visible.tau_beam_beam + optics_visible.tau_beam_diffuse) +
         poa.diffuse_total_wm2() * cfg.luminous_efficacy_diffuse *
             optics_visible.tau_diffuse) *
        glazing.tau_visible;
    return flux_lm * cfg.room_utilization / zone.floor_area_m2();
}

double dimming_fraction(double e_daylight_lux, double setpoint_lux) {
    if (setpoint_lux <= 0.0) throw ConfigError("dimming setpoint must be > 0");
    return std::clamp(1.0 - e_daylight_lux / setpoint_lux, 0.0, 1.0);
}

double lighting_power(double fraction, const InternalGains& gains,
                      const ZoneSpec& zone, bool occupied) {
    if (!occupied) return 0.0;
    return fraction * gains.lighting_density_wm2 * zone.floor_area_m2();
}

}  // namespace rds

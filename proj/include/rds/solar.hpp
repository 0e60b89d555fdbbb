#pragma once

#include "rds/calendar.hpp"
#include "rds/weather.hpp"

namespace rds {

struct SolarPosition {
    double altitude_deg = -90.0;  // above horizon
    double azimuth_deg = 0.0;     // clockwise from north
    bool sun_up = false;          // altitude > 0
};

// Irradiance resolved onto the south-facing vertical facade.
struct PlaneIrradiance {
    double beam_wm2 = 0.0;
    double sky_diffuse_wm2 = 0.0;
    double ground_reflected_wm2 = 0.0;
    double incidence_deg = 90.0;  // beam to surface normal
    double profile_deg = 0.0;     // vertical profile angle, [0, 90)

    double diffuse_total_wm2() const {
        return sky_diffuse_wm2 + ground_reflected_wm2;
    }
};

// Sun position at the center of the hourly step (Spencer declination and
// equation of time, hour angle from local standard time).
SolarPosition solar_position(const SitePosition& site, const HourStamp& time);

// Angle between the sun azimuth and due south, in [0, 180].
double surface_solar_azimuth_deg(const SolarPosition& pos);

// Vertical profile angle on the south facade: tan(p) = tan(alt) / cos(gamma).
// Clamped to [0, 90). Throws SunBelowHorizon when the sun is down.
double profile_angle(const SolarPosition& pos);

// Isotropic-sky plane-of-array split for the south vertical surface.
PlaneIrradiance plane_of_array(const WeatherRecord& record,
                               const SolarPosition& pos,
                               double ground_reflectance);

}  // namespace rds

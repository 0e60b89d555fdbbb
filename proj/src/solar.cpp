#include "rds/solar.hpp"

#include <algorithm>
#include <cmath>

#include "rds/errors.hpp"

namespace rds {

namespace {

constexpr double kPi = 3.14159265358979323846;

double deg2rad(double d) { return d * kPi / 180.0; }
double rad2deg(double r) { return r * 180.0 / kPi; }

// Spencer Fourier series for declination (radians) and equation of time
// (minutes), on the fractional day angle.
double declination_rad(double day_angle) {
    return 0.006918 - 0.399912 * std::cos(day_angle) +
           0.070257 * std::sin(day_angle) -
           0.006758 * std::cos(2.0 * day_angle) +
           0.000907 * std::sin(2.0 * day_angle) -
           0.002697 * std::cos(3.0 * day_angle) +
           0.001480 * std::sin(3.0 * day_angle);
}

double equation_of_time_min(double day_angle) {
    return 229.18 * (0.000075 + 0.001868 * std::cos(day_angle) -
                     0.032077 * std::sin(day_angle) -
                     0.014615 * std::cos(2.0 * day_angle) -
                     0.040890 * std::sin(2.0 * day_angle));
}

}  // namespace

SolarPosition solar_position(const SitePosition& site, const HourStamp& time) {
    // Hour-center evaluation of the hourly step.
    double clock_hours = time.hour + 0.5;
    double day_angle = 2.0 * kPi *
                       (time.day_of_year() - 1 + (clock_hours - 12.0) / 24.0) /
                       365.0;

    double decl = declination_rad(day_angle);
    double eot = equation_of_time_min(day_angle);

    double meridian_deg = 15.0 * site.timezone_hours;
    double solar_minutes = clock_hours * 60.0 +
                           4.0 * (site.longitude_deg - meridian_deg) + eot;
    double hour_angle = deg2rad((solar_minutes / 60.0 - 12.0) * 15.0);

    double lat = deg2rad(site.latitude_deg);
    double sin_alt = std::sin(lat) * std::sin(decl) +
                     std::cos(lat) * std::cos(decl) * std::cos(hour_angle);
    sin_alt = std::clamp(sin_alt, -1.0, 1.0);

    SolarPosition pos;
    pos.altitude_deg = rad2deg(std::asin(sin_alt));
    double az = rad2deg(std::atan2(
        std::sin(hour_angle),
        std::cos(hour_angle) * std::sin(lat) - std::tan(decl) * std::cos(lat)));
    pos.azimuth_deg = std::fmod(180.0 + az + 360.0, 360.0);
    pos.sun_up = pos.altitude_deg > 0.0;
    return pos;
}

double surface_solar_azimuth_deg(const SolarPosition& pos) {
    double gamma = std::fmod(std::abs(pos.azimuth_deg - 180.0), 360.0);
    if (gamma > 180.0) gamma = 360.0 - gamma;
    return gamma;
}

double profile_angle(const SolarPosition& pos) {
    if (!pos.sun_up) throw SunBelowHorizon("profile angle needs the sun up");
    double gamma = surface_solar_azimuth_deg(pos);
    if (gamma >= 90.0) return 89.999;  // sun behind the facade; no beam
    double p = rad2deg(std::atan2(std::tan(deg2rad(pos.altitude_deg)),
                                  std::cos(deg2rad(gamma))));
    return std::clamp(p, 0.0, 89.999);
}

PlaneIrradiance plane_of_array(const WeatherRecord& record,
                               const SolarPosition& pos,
                               double ground_reflectance) {
    PlaneIrradiance poa;
    poa.sky_diffuse_wm2 = 0.5 * record.diffuse_horizontal_wm2;

    double sin_alt = std::sin(deg2rad(std::max(pos.altitude_deg, 0.0)));
    double ghi = pos.sun_up
                     ? record.direct_normal_wm2 * sin_alt +
                           record.diffuse_horizontal_wm2
                     : record.diffuse_horizontal_wm2;
    poa.ground_reflected_wm2 = 0.5 * ground_reflectance * ghi;

    if (pos.sun_up) {
        double gamma = surface_solar_azimuth_deg(pos);
        double cos_inc = std::cos(deg2rad(pos.altitude_deg)) *
                         std::cos(deg2rad(std::min(gamma, 180.0)));
        poa.incidence_deg = rad2deg(std::acos(std::clamp(cos_inc, -1.0, 1.0)));
        if (cos_inc > 0.0) {
            poa.beam_wm2 = record.direct_normal_wm2 * cos_inc;
            poa.profile_deg = profile_angle(pos);
        }
    }
    return poa;
}

}  // namespace rds

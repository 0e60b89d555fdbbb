#pragma once

#include "rds/blind_optics.hpp"
#include "rds/solar.hpp"

namespace rds {

// Multiplier from Btu/(h.ft2.F) to W/(m2.K).
inline constexpr double kIpToSiU = 5.678263;

struct GlazingSpec {
    double u_value_w_m2k = 2.385;
    double shgc = 0.25;
    double tau_visible = 0.6;
    double area_m2 = 3.15;

    void validate() const;
};

// Fixed film/split constants of the window heat balance. The inner film
// follows the ISO 6946 convention (7.7 W/m2K combined = 2.5 convective
// + 5.2 radiative); the glazing-blind gap film is 3.0 per exposed face.
// An interior blind radiates from its front face to the glazing and from
// its back face to the room.
struct FilmCoefficients {
    double gap_convective = 3.0;
    double room_convective = 2.5;
    double blind_radiative = 5.2;           // back face, to the room
    double blind_to_glass_radiative = 5.2;  // front face, to the glazing
    double inner_film = 7.7;                // combined inner surface film
    double radiant_fraction_inner = 0.4;  // rad share of inner-surface release
    double shgc_direct_fraction = 0.85;   // directly transmitted share of SHGC
    // Front solar reflectance of the glazing; drives the inter-reflection
    // ladder between an exterior blind and the glass.
    double glass_front_reflectance = 0.30;
};

// Per-term window heat gain. q_total is the signed sum of all terms;
// q_rad_out is stored as a loss (<= 0); q_cond_frame is identically zero
// (no frame geometry is modeled); terms unused by the active configuration
// are exactly zero.
struct WindowHeatGainBreakdown {
    double q_solartrans = 0.0;
    double q_conv_air = 0.0;
    double q_conv_blind = 0.0;
    double q_conv_win = 0.0;
    double q_rad_win = 0.0;
    double q_rad_blind = 0.0;
    double q_rad_out = 0.0;
    double q_cond_frame = 0.0;
    double q_total = 0.0;

    double term_sum() const {
        return q_solartrans + q_conv_air + q_conv_blind + q_conv_win +
               q_rad_win + q_rad_blind + q_rad_out + q_cond_frame;
    }
};

// Interior blind: glazing first, then blind. Solar absorbed by the blind
// heats a steady-state blind node released entirely zone-ward through the
// gap film (q_conv_air), the room-side film (q_conv_blind) and longwave
// (q_rad_blind); blind-reflected shortwave escapes back out through the
// glazing as q_rad_out. Throws ConfigMismatch unless location is Interior.
WindowHeatGainBreakdown heat_gain_interior(const GlazingSpec& glazing,
                                           const BlindState& blind,
                                           const PlaneIrradiance& poa,
                                           double t_out_c, double t_zone_c,
                                           const BlindOpticalProps& optics,
                                           const FilmCoefficients& films = {});

// Exterior blind: blind first, then glazing. Solar absorbed or reflected by
// the blind is rejected outdoors; the transmitted share carries the full
// glazing SHGC. Throws ConfigMismatch unless location is Exterior.
WindowHeatGainBreakdown heat_gain_exterior(const GlazingSpec& glazing,
                                           const BlindState& blind,
                                           const PlaneIrradiance& poa,
                                           double t_out_c, double t_zone_c,
                                           const BlindOpticalProps& optics,
                                           const FilmCoefficients& films = {});

// Unshaded window.
WindowHeatGainBreakdown heat_gain_bare(const GlazingSpec& glazing,
                                       const PlaneIrradiance& poa,
                                       double t_out_c, double t_zone_c,
                                       const FilmCoefficients& films = {});

double wall_conduction(double u_value_w_m2k, double area_m2, double t_out_c,
                       double t_zone_c);

}  // namespace rds

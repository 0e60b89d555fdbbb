#include "rds/fenestration.hpp"

#include "rds/errors.hpp"

namespace rds {

void GlazingSpec::validate() const {
    if (u_value_w_m2k <= 0.0) throw ConfigError("glazing U-value must be > 0");
    if (shgc <= 0.0 || shgc > 1.0) throw ConfigError("SHGC outside (0, 1]");
    if (tau_visible < 0.0 || tau_visible > 1.0)
        throw ConfigError("visible transmittance outside [0, 1]");
    if (area_m2 <= 0.0) throw ConfigError("window area must be > 0");
}

WindowHeatGainBreakdown heat_gain_interior(const GlazingSpec& glazing,
                                           const BlindState& blind,
                                           const PlaneIrradiance& poa,
                                           double t_out_c, double t_zone_c,
                                           const BlindOpticalProps& optics,
                                           const FilmCoefficients& films) {
    if (blind.location != BlindLocation::Interior)
        throw ConfigMismatch("interior heat gain needs an interior blind");

    const double area = glazing.area_m2;
    const double beam = poa.beam_wm2;
    const double diffuse = poa.diffuse_total_wm2();
    const double tau_g = films.shgc_direct_fraction * glazing.shgc;
    const double absorbed_inward = (1.0 - films.shgc_direct_fraction) * glazing.shgc;

    WindowHeatGainBreakdown q;
    q.q_solartrans =
        area * tau_g *
        (beam * (optics.tau_beam_beam + optics.tau_beam_diffuse) +
         diffuse * optics.tau_diffuse);

    // Steady-state blind node: absorbed solar is released over the gap
    // film, the room-side film, and longwave to room and glazing. The
    // glazing-directed share lands on the inner glass surface, where part
    // conducts back out and the rest re-enters the zone with the inner
    // release.
    double blind_absorbed =
        area * tau_g *
        (beam * optics.alpha_beam + diffuse * optics.alpha_diffuse);
    double h_total = films.gap_convective + films.room_convective +
                     films.blind_radiative + films.blind_to_glass_radiative;

    // Outward conductance seen from the inner glass surface (whole-window
    // U minus the inner film in series).
    double r_out = 1.0 / glazing.u_value_w_m2k - 1.0 / films.inner_film;
    double g_out = r_out > 1e-9 ? 1.0 / r_out : films.inner_film;
    double outward_share = g_out / (g_out + films.inner_film);

    // Blind-reflected shortwave bounces between the blind front and the
    // glass back surface. Per round at the glass: tau_g escapes, the glass
    // absorbs (1 - tau_g - rho_glass), and rho_glass returns to the blind,
    // which transmits, absorbs, or feeds the next round.
    double reflected = area * tau_g *
                       (beam * optics.rho_beam_front +
                        diffuse * optics.rho_diffuse_front);
    double rho_glass = films.glass_front_reflectance;
    double at_glass =
        reflected / (1.0 - rho_glass * optics.rho_diffuse_front);
    q.q_rad_out = -tau_g * at_glass;
    double glass_absorbed =
        std::max(0.0, 1.0 - tau_g - rho_glass) * at_glass;
    double returned = rho_glass * at_glass;
    q.q_solartrans += returned * optics.tau_diffuse;
    blind_absorbed += returned * optics.alpha_diffuse;
    q.q_conv_blind = blind_absorbed * films.room_convective / h_total;
    q.q_rad_blind = blind_absorbed * films.blind_radiative / h_total;
    double to_glass = blind_absorbed * films.blind_to_glass_radiative / h_total;

    // Glazing inner-surface release: U-path conduction, the inward-flowing
    // absorbed solar, the glass-absorbed share of the reflection ladder,
    // and the blind's glass-directed longwave that does not escape, split
    // radiative/convective. The convective share washes through the
    // glass-blind gap to the zone air.
    double conduction = glazing.u_value_w_m2k * area * (t_out_c - t_zone_c);
    double inner_release = conduction +
                           absorbed_inward * area * (beam + diffuse) +
                           (glass_absorbed + to_glass) * (1.0 - outward_share);
    q.q_rad_win = films.radiant_fraction_inner * inner_release;
    q.q_conv_air = (1.0 - films.radiant_fraction_inner) * inner_release +
                   blind_absorbed * films.gap_convective / h_total;

    q.q_total = q.term_sum();
    return q;
}

WindowHeatGainBreakdown heat_gain_exterior(const GlazingSpec& glazing,
                                           const BlindState& blind,
                                           const PlaneIrradiance& poa,
                                           double t_out_c, double t_zone_c,
                                           const BlindOpticalProps& optics,
                                           const FilmCoefficients& films) {
    if (blind.location != BlindLocation::Exterior)
        throw ConfigMismatch("exterior heat gain needs an exterior blind");

    const double area = glazing.area_m2;
    const double beam = poa.beam_wm2;
    const double diffuse = poa.diffuse_total_wm2();

    WindowHeatGainBreakdown q;
    // Blind first: only the transmitted share reaches the glazing, and what
    // the blind absorbs or reflects is rejected outdoors. Diffuse light
    // reflected by the glass front bounces between glass and the blind's
    // back side (inter-reflection ladder); the specular share of the beam
    // reflection leaves back out through the slat openings instead.
    double ladder = 1.0 / (1.0 - optics.rho_diffuse_back *
                                     films.glass_front_reflectance);
    double trans = beam * optics.tau_beam_beam +
                   (beam * optics.tau_beam_diffuse +
                    diffuse * optics.tau_diffuse) *
                       ladder;
    q.q_solartrans = area * glazing.shgc * trans;

    double conduction = glazing.u_value_w_m2k * area * (t_out_c - t_zone_c);
    q.q_conv_win = (1.0 - films.radiant_fraction_inner) * conduction;
    q.q_rad_win = films.radiant_fraction_inner * conduction;

    // No zone-side shortwave is tracked back out in this configuration.
    q.q_rad_out = 0.0;

    q.q_total = q.term_sum();
    return q;
}

WindowHeatGainBreakdown heat_gain_bare(const GlazingSpec& glazing,
                                       const PlaneIrradiance& poa,
                                       double t_out_c, double t_zone_c,
                                       const FilmCoefficients& films) {
    const double area = glazing.area_m2;
    WindowHeatGainBreakdown q;
    q.q_solartrans =
        area * glazing.shgc * (poa.beam_wm2 + poa.diffuse_total_wm2());
    double conduction = glazing.u_value_w_m2k * area * (t_out_c - t_zone_c);
    q.q_conv_win = (1.0 - films.radiant_fraction_inner) * conduction;
    q.q_rad_win = films.radiant_fraction_inner * conduction;
    q.q_total = q.term_sum();
    return q;
}

double wall_conduction(double u_value_w_m2k, double area_m2, double t_out_c,
                       double t_zone_c) {
    if (u_value_w_m2k <= 0.0 || area_m2 <= 0.0)
        throw ConfigError("wall conduction needs positive U and area");
    return u_value_w_m2k * area_m2 * (t_out_c - t_zone_c);
}

}  // namespace rds

#pragma once

#include <cstdint>
#include <optional>

namespace rds {

// Horizontal-slat venetian blind, flat zero-thickness slats.
// Slat angle convention: 0 deg = closed with the outer edge down,
// 90 deg = horizontal (open), 180 deg = closed with the outer edge up.
struct SlatGeometry {
    double width_mm = 20.0;
    double separation_mm = 20.0;  // vertical distance between slats
    double conductivity_w_mk = 160.0;
    double reflectance_front = 0.5;  // upward-facing slat side
    double reflectance_back = 0.5;   // downward-facing slat side
    double emissivity_front = 0.9;
    double emissivity_back = 0.9;

    void validate() const;
};

enum class BlindLocation { Interior, Exterior, NoBlind };

struct BlindState {
    BlindLocation location = BlindLocation::NoBlind;
    double slat_angle_deg = 90.0;  // in [0, 180]
    SlatGeometry geometry;
};

enum class Band { Solar, Visible };

// Band-resolved optical record of the slat layer. Incidence classes:
// beam (front side, given profile angle) and diffuse (front/back).
// Conservation holds per class: tau + rho + alpha = 1.
struct BlindOpticalProps {
    double tau_beam_beam = 1.0;
    double tau_beam_diffuse = 0.0;
    double rho_beam_front = 0.0;
    double rho_beam_back = 0.0;
    double alpha_beam = 0.0;

    double tau_diffuse = 1.0;
    double rho_diffuse_front = 0.0;
    double rho_diffuse_back = 0.0;
    double alpha_diffuse = 0.0;
};

// Fraction of beam radiation passing the slat array unscattered.
// With profile angle p and slat angle psi, the shadow of one slat of width
// w projected along the beam onto the blind plane spans w*|cos(psi - p)| /
// cos(p) of the period s, so
//   tau_bb = clamp(1 - (w/s) * |cos(psi - p)| / cos(p), 0, 1).
// Throws BadAngle for profile angles >= 90 deg.
double beam_beam_transmittance(const SlatGeometry& geometry,
                               double slat_angle_deg,
                               double profile_angle_deg);

struct DiffuseExchangeResult {
    double tau_diffuse = 1.0;
    double rho_front = 0.0;
    double rho_back = 0.0;
    double alpha = 0.0;  // front incidence
};

// Diffuse-diffuse exchange through one slat cell: a radiosity balance on
// the four-surface enclosure (two slat faces, entry and exit apertures)
// with crossed-strings view factors. Slats are perfectly diffuse.
DiffuseExchangeResult diffuse_exchange(const SlatGeometry& geometry,
                                       double slat_angle_deg);

struct BeamSplitResult {
    double tau_beam_diffuse = 0.0;
    double rho_beam = 0.0;
    double alpha_beam = 0.0;
};

// Splits the intercepted beam fraction (1 - tau_bb): the struck slat face
// absorbs (1 - rho) directly and re-emits the rest diffusely into the slat
// cell, where the diffuse_exchange view-factor machinery distributes it
// between the apertures and further slat absorption.
BeamSplitResult beam_diffuse_split(const SlatGeometry& geometry,
                                   double slat_angle_deg,
                                   double profile_angle_deg);

// Full property record for one band. The visible band reuses the solar
// slat reflectance (single published value). Throws NoBlindPresent.
BlindOpticalProps blind_properties(const BlindState& state,
                                   double profile_angle_deg, Band band);

// Property record of an empty aperture (used for the bare-window path).
BlindOpticalProps unit_optics();

// Monte Carlo validation oracle: 2-D ray cast in the slat cross-section.
// Rays enter stratified across one slat period; specular flight until a
// slat hit, then Lambertian re-emission weighted by the struck face's
// reflectance (russian roulette), tracked to absorption or escape.
// profile_angle_deg selects beam entry; nullopt selects Lambertian diffuse
// entry. Deterministic under a fixed seed.
struct McOptical {
    double tau_unscattered = 0.0;  // escaped inward with no slat contact
    double tau_scattered = 0.0;    // escaped inward after >= 1 bounce
    double rho = 0.0;              // escaped back out the entry side
    double alpha = 0.0;

    double tau_total() const { return tau_unscattered + tau_scattered; }
};

McOptical mc_oracle(const SlatGeometry& geometry, double slat_angle_deg,
                    std::optional<double> profile_angle_deg,
                    std::uint64_t rays, std::uint64_t seed);

}  // namespace rds

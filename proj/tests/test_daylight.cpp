#include "rds/daylight.hpp"

#include <gtest/gtest.h>

#include "rds/errors.hpp"

using namespace rds;

TEST(InteriorIlluminance, NightIsDark) {
    BlindOpticalProps optics;
    GlazingSpec glazing;
    ZoneSpec zone;
    DaylightConfig cfg;
    EXPECT_EQ(interior_illuminance(PlaneIrradiance{}, optics, glazing, zone,
                                   cfg),
              0.0);
}

TEST(InteriorIlluminance, OpaqueBlindIsDark) {
    BlindOpticalProps optics;
    optics.tau_beam_beam = 0.0;
    optics.tau_beam_diffuse = 0.0;
    optics.tau_diffuse = 0.0;
    PlaneIrradiance poa;
    poa.beam_wm2 = 500.0;
    poa.sky_diffuse_wm2 = 100.0;
    GlazingSpec glazing;
    ZoneSpec zone;
    DaylightConfig cfg;
    EXPECT_EQ(interior_illuminance(poa, optics, glazing, zone, cfg), 0.0);
}

TEST(InteriorIlluminance, DiffuseHandValue) {
    // 3.15 m2 window, 100 W/m2 diffuse, tau_dd 0.5, tau_vis 0.6,
    // 110 lm/W, utilization 0.4, 14 m2 floor -> 297 lux.
    BlindOpticalProps optics;
    optics.tau_diffuse = 0.5;
    PlaneIrradiance poa;
    poa.sky_diffuse_wm2 = 100.0;
    GlazingSpec glazing;
    glazing.tau_visible = 0.6;
    glazing.area_m2 = 3.15;
    ZoneSpec zone;
    DaylightConfig cfg;
    cfg.room_utilization = 0.4;
    double lux = interior_illuminance(poa, optics, glazing, zone, cfg);
    EXPECT_NEAR(lux, 297.0, 1e-9);
}

TEST(DimmingFraction, Saturations) {
    EXPECT_EQ(dimming_fraction(0.0, 500.0), 1.0);
    EXPECT_EQ(dimming_fraction(500.0, 500.0), 0.0);
    EXPECT_EQ(dimming_fraction(900.0, 500.0), 0.0);
    EXPECT_DOUBLE_EQ(dimming_fraction(250.0, 500.0), 0.5);
}

TEST(DimmingFraction, NonIncreasingInDaylight) {
    double prev = 2.0;
    for (double e = 0.0; e <= 1000.0; e += 25.0) {
        double f = dimming_fraction(e, 500.0);
        EXPECT_LE(f, prev);
        prev = f;
    }
}

TEST(DimmingFraction, RejectsBadSetpoint) {
    EXPECT_THROW(dimming_fraction(100.0, 0.0), ConfigError);
}

TEST(LightingPower, FullPower) {
    InternalGains gains;
    ZoneSpec zone;
    EXPECT_NEAR(lighting_power(1.0, gains, zone, true), 111.58, 0.01);
}

TEST(LightingPower, ZeroFraction) {
    InternalGains gains;
    ZoneSpec zone;
    EXPECT_EQ(lighting_power(0.0, gains, zone, true), 0.0);
}

TEST(LightingPower, UnoccupiedIsOff) {
    InternalGains gains;
    ZoneSpec zone;
    EXPECT_EQ(lighting_power(1.0, gains, zone, false), 0.0);
}

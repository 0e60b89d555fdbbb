#include "rds/zone.hpp"

#include <gtest/gtest.h>

#include <random>

#include "rds/errors.hpp"

using namespace rds;

namespace {

TempLinearGain envelope_gain(double ua, double t_out) {
    return TempLinearGain{0.0, ua, t_out};
}

}  // namespace

TEST(ZoneSpec, DerivedAreas) {
    ZoneSpec zone;
    EXPECT_DOUBLE_EQ(zone.floor_area_m2(), 14.0);
    EXPECT_DOUBLE_EQ(zone.south_gross_area_m2(), 10.5);
    EXPECT_DOUBLE_EQ(zone.window_area_m2(), 3.15);
    EXPECT_DOUBLE_EQ(zone.opaque_wall_area_m2(), 7.35);
}

TEST(StepHour, DeadbandNoLoads) {
    // No gains, outdoor air inside the deadband.
    auto r = step_hour(envelope_gain(10.0, 23.0), envelope_gain(3.0, 23.0),
                       0.0, 0.0, Setpoints{});
    EXPECT_EQ(r.heating_wh, 0.0);
    EXPECT_EQ(r.cooling_wh, 0.0);
    EXPECT_NEAR(r.zone_air_temp_c, 23.0, 1e-12);
}

TEST(StepHour, InternalGainAdiabaticEnvelope) {
    auto r = step_hour(TempLinearGain{0.0, 0.0, 26.0},
                       TempLinearGain{0.0, 0.0, 26.0}, 500.0, 0.0,
                       Setpoints{});
    EXPECT_EQ(r.cooling_wh, 500.0);
    EXPECT_EQ(r.heating_wh, 0.0);
}

TEST(StepHour, TehranEnvelopeHandComputedHeating) {
    // U_window = 0.42 * 5.678263 over 3.15 m2; U_wall = 0.077 * 5.678263
    // over 7.35 m2; t_out = 0, setpoint 21 -> heating = UA * 21.
    double ua_window = 0.42 * 5.678263 * 3.15;
    double ua_wall = 0.077 * 5.678263 * 7.35;
    auto r = step_hour(envelope_gain(ua_window, 0.0),
                       envelope_gain(ua_wall, 0.0), 0.0, 0.0, Setpoints{});
    double expected = (ua_window + ua_wall) * 21.0;
    EXPECT_NEAR(r.heating_wh, expected, 0.1);
    EXPECT_EQ(r.cooling_wh, 0.0);
    EXPECT_NEAR(expected, 225.245, 0.05);
}

TEST(StepHour, NeverBothLoads) {
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
        TempLinearGain window{500.0 * u(rng), 12.0 * std::abs(u(rng)),
                              20.0 + 25.0 * u(rng)};
        TempLinearGain wall{0.0, 4.0 * std::abs(u(rng)), window.t_out_c};
        auto r = step_hour(window, wall, 300.0 * std::abs(u(rng)),
                           120.0 * std::abs(u(rng)), Setpoints{});
        EXPECT_EQ(r.heating_wh * r.cooling_wh, 0.0);
        EXPECT_GE(r.heating_wh, 0.0);
        EXPECT_GE(r.cooling_wh, 0.0);
    }
}

TEST(InternalGains, OccupiedHour) {
    InternalGains gains;
    ZoneSpec zone;
    HourStamp monday_ten{1, 1, 10};  // Jan 1 is a Monday
    EXPECT_TRUE(monday_ten.is_weekday());
    EXPECT_NEAR(internal_gain_at(gains, zone, monday_ten),
                2.0 * 120.0 + 6.89 * 14.0, 0.05);
}

TEST(InternalGains, UnoccupiedStandby) {
    InternalGains gains;
    ZoneSpec zone;
    HourStamp night{1, 1, 2};
    EXPECT_NEAR(internal_gain_at(gains, zone, night), 0.1 * 6.89 * 14.0, 0.01);
}

TEST(InternalGains, ZeroEverything) {
    InternalGains gains;
    gains.people_count = 0.0;
    gains.sensible_per_person_w = 0.0;
    gains.equipment_density_wm2 = 0.0;
    ZoneSpec zone;
    EXPECT_EQ(internal_gain_at(gains, zone, HourStamp{1, 1, 10}), 0.0);
    EXPECT_EQ(internal_gain_at(gains, zone, HourStamp{1, 1, 2}), 0.0);
}

TEST(InternalGains, WeekendUnoccupied) {
    InternalGains gains;
    ZoneSpec zone;
    HourStamp saturday{1, 6, 10};  // Jan 6 is a Saturday
    EXPECT_FALSE(saturday.is_weekday());
    EXPECT_FALSE(gains.schedule.occupied(saturday));
    EXPECT_NEAR(internal_gain_at(gains, zone, saturday), 0.1 * 6.89 * 14.0,
                0.01);
}

TEST(Schedule, BoundaryHours) {
    OccupancySchedule schedule;
    EXPECT_FALSE(schedule.occupied(HourStamp{1, 1, 8}));
    EXPECT_TRUE(schedule.occupied(HourStamp{1, 1, 9}));
    EXPECT_TRUE(schedule.occupied(HourStamp{1, 1, 18}));
    EXPECT_FALSE(schedule.occupied(HourStamp{1, 1, 19}));
}

TEST(LoadReport, MonthlySumsEqualAnnual) {
    LoadReport report;
    for (int m = 0; m < 12; ++m) {
        report.monthly[m].heating_kwh = m + 1.0;
        report.monthly[m].cooling_kwh = 2.0 * (m + 1.0);
        report.monthly[m].lighting_kwh = 0.5;
    }
    EXPECT_NEAR(report.annual_heating_kwh(), 78.0, 1e-9);
    EXPECT_NEAR(report.annual_cooling_kwh(), 156.0, 1e-9);
    EXPECT_NEAR(report.annual_lighting_kwh(), 6.0, 1e-9);
    EXPECT_NEAR(report.annual_total_kwh(), 240.0, 1e-9);
}

TEST(Setpoints, RejectsInvertedBand) {
    Setpoints sp;
    sp.heating_c = 27.0;
    EXPECT_THROW(sp.validate(), ConfigError);
}

TEST(CalendarHelpers, HourStampRoundTrip) {
    for (int h = 0; h < kHoursPerYear; ++h) {
        HourStamp t = hour_stamp_from_index(h);
        EXPECT_EQ(t.hour_of_year(), h);
    }
    HourStamp last = hour_stamp_from_index(8759);
    EXPECT_EQ(last.month, 12);
    EXPECT_EQ(last.day, 31);
    EXPECT_EQ(last.hour, 23);
}

#include "rds/weather.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "rds/errors.hpp"
#include "rds/scenario.hpp"
#include "rds/solar.hpp"

using namespace rds;

namespace {

std::string epw_row(int month, int day, int hour, double dry_bulb, double rh,
                    double dni, double dhi) {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "2001,%d,%d,%d,0,-,%.2f,0.0,%.1f,101325,0,0,0,0,%.1f,%.1f,"
                  "0,0,0,0,0,0,0,0,0,0,0,0,0,0,0",
                  month, day, hour, dry_bulb, rh, dni, dhi);
    return buf;
}

// Builds a full EPW string with per-hour values from a callback.
template <typename Fn>
std::string make_epw(Fn fn, const std::string& location_line =
                                "LOCATION,Tehran,-,IRN,x,0,35.42,51.15,3.5,1190") {
    std::ostringstream out;
    out << location_line << "\n";
    for (int i = 0; i < 7; ++i) out << "HEADER" << i << ",0\n";
    for (int h = 0; h < kHoursPerYear; ++h) {
        HourStamp t = hour_stamp_from_index(h);
        out << fn(t) << "\n";
    }
    return out.str();
}

std::string constant_epw(double dry_bulb) {
    return make_epw([&](const HourStamp& t) {
        return epw_row(t.month, t.day, t.hour + 1, dry_bulb, 50.0, 0.0, 0.0);
    });
}

}  // namespace

TEST(ParseEpw, ConstantDryBulb) {
    std::istringstream in(constant_epw(20.0));
    WeatherSeries series = parse_epw(in);
    ASSERT_EQ(series.records.size(), 8760u);
    for (const auto& rec : series.records) EXPECT_EQ(rec.dry_bulb_c, 20.0);
}

TEST(ParseEpw, LocationHeader) {
    std::istringstream in(constant_epw(20.0));
    WeatherSeries series = parse_epw(in);
    EXPECT_DOUBLE_EQ(series.site.latitude_deg, 35.42);
    EXPECT_DOUBLE_EQ(series.site.longitude_deg, 51.15);
    EXPECT_DOUBLE_EQ(series.site.timezone_hours, 3.5);
}

TEST(ParseEpw, IrradianceSentinelInheritsPreviousHour) {
    std::string text = make_epw([&](const HourStamp& t) {
        double dni = t.hour_of_year() == 100 ? 9999.0 : 300.0;
        return epw_row(t.month, t.day, t.hour + 1, 20.0, 50.0, dni, 50.0);
    });
    std::istringstream in(text);
    WeatherSeries series = parse_epw(in);
    EXPECT_EQ(series.records[100].direct_normal_wm2, 300.0);
}

TEST(ParseEpw, SentinelAtStartOfFileBecomesZero) {
    std::string text = make_epw([&](const HourStamp& t) {
        double dni = t.hour_of_year() == 0 ? 9999.0 : 300.0;
        return epw_row(t.month, t.day, t.hour + 1, 20.0, 50.0, dni, 50.0);
    });
    std::istringstream in(text);
    WeatherSeries series = parse_epw(in);
    EXPECT_EQ(series.records[0].direct_normal_wm2, 0.0);
}

TEST(ParseEpw, MissingLocationHeader) {
    std::istringstream in("NOT A HEADER\njunk\n");
    EXPECT_THROW(parse_epw(in), MalformedHeader);
}

TEST(ParseEpw, UnparsableLocation) {
    std::istringstream in(
        "LOCATION,Tehran,-,IRN,x,0,not_a_number,51.15,3.5,1190\n");
    EXPECT_THROW(parse_epw(in), MalformedHeader);
}

TEST(ParseEpw, BadRecordReportsLineNumber) {
    std::ostringstream out;
    out << "LOCATION,Tehran,-,IRN,x,0,35.42,51.15,3.5,1190\n";
    for (int i = 0; i < 7; ++i) out << "HEADER" << i << ",0\n";
    out << epw_row(1, 1, 1, 20.0, 50.0, 0.0, 0.0) << "\n";
    out << "2001,1,1,2,0,-\n";  // too few fields, line 10
    std::istringstream in(out.str());
    try {
        parse_epw(in);
        FAIL() << "expected BadRecord";
    } catch (const BadRecord& e) {
        EXPECT_EQ(e.line, 10);
    }
}

TEST(ParseEpw, NonNumericField) {
    std::string text = make_epw([&](const HourStamp& t) {
        if (t.hour_of_year() == 5)
            return std::string(
                "2001,1,1,6,0,-,oops,0.0,50.0,101325,0,0,0,0,0,0,0,0,0,0,0,0,"
                "0,0,0,0,0,0,0,0,0");
        return epw_row(t.month, t.day, t.hour + 1, 20.0, 50.0, 0.0, 0.0);
    });
    std::istringstream in(text);
    EXPECT_THROW(parse_epw(in), BadRecord);
}

TEST(ParseEpw, WrongLength) {
    std::ostringstream out;
    out << "LOCATION,Tehran,-,IRN,x,0,35.42,51.15,3.5,1190\n";
    for (int i = 0; i < 7; ++i) out << "HEADER" << i << ",0\n";
    for (int h = 0; h < 100; ++h) out << epw_row(1, 1, 1, 20.0, 50.0, 0, 0) << "\n";
    std::istringstream in(out.str());
    EXPECT_THROW(parse_epw(in), WrongLength);
}

TEST(ParseEpw, RoundTripOnUsedFields) {
    auto tehran = city_preset("Tehran");
    WeatherSeries original = synth_weather(
        tehran.monthly_dry_bulb_c, tehran.monthly_humidity_pct, tehran.site);

    std::ostringstream serialized;
    write_epw(original, serialized);
    std::istringstream in1(serialized.str());
    WeatherSeries once = parse_epw(in1);

    std::ostringstream serialized2;
    write_epw(once, serialized2);
    std::istringstream in2(serialized2.str());
    WeatherSeries twice = parse_epw(in2);

    ASSERT_EQ(once.records.size(), twice.records.size());
    EXPECT_EQ(once.site, twice.site);
    for (size_t i = 0; i < once.records.size(); ++i) {
        EXPECT_EQ(once.records[i].dry_bulb_c, twice.records[i].dry_bulb_c);
        EXPECT_EQ(once.records[i].relative_humidity_pct,
                  twice.records[i].relative_humidity_pct);
        EXPECT_EQ(once.records[i].direct_normal_wm2,
                  twice.records[i].direct_normal_wm2);
        EXPECT_EQ(once.records[i].diffuse_horizontal_wm2,
                  twice.records[i].diffuse_horizontal_wm2);
    }
}

TEST(SynthWeather, TehranJanuaryMeanMatchesNormal) {
    auto tehran = city_preset("Tehran");
    WeatherSeries series = synth_weather(
        tehran.monthly_dry_bulb_c, tehran.monthly_humidity_pct, tehran.site);
    auto means = monthly_summary(series);
    EXPECT_NEAR(means[0].dry_bulb_c, 3.89, 0.01);
}

TEST(SynthWeather, YazdJulyMeanMatchesNormal) {
    auto yazd = city_preset("Yazd");
    WeatherSeries series = synth_weather(
        yazd.monthly_dry_bulb_c, yazd.monthly_humidity_pct, yazd.site);
    auto means = monthly_summary(series);
    EXPECT_NEAR(means[6].dry_bulb_c, 33.17, 0.01);
}

TEST(SynthWeather, TabrizRoundTripAllMonths) {
    auto tabriz = city_preset("Tabriz");
    WeatherSeries series = synth_weather(
        tabriz.monthly_dry_bulb_c, tabriz.monthly_humidity_pct, tabriz.site);
    auto means = monthly_summary(series);
    for (int m = 0; m < 12; ++m) {
        EXPECT_NEAR(means[m].dry_bulb_c, tabriz.monthly_dry_bulb_c[m], 0.01);
        EXPECT_NEAR(means[m].relative_humidity_pct,
                    tabriz.monthly_humidity_pct[m], 0.1);
    }
    EXPECT_NEAR(means[0].dry_bulb_c, -1.52, 0.01);
}

TEST(SynthWeather, ZeroNormalsZeroAmplitude) {
    SynthOptions options;
    options.diurnal_amplitude_c = 0.0;
    std::array<double, 12> zero{};
    WeatherSeries series =
        synth_weather(zero, zero, SitePosition{35.42, 51.15, 3.5}, options);
    for (const auto& rec : series.records) EXPECT_EQ(rec.dry_bulb_c, 0.0);
}

TEST(SynthWeather, Deterministic) {
    auto tehran = city_preset("Tehran");
    WeatherSeries a = synth_weather(tehran.monthly_dry_bulb_c,
                                    tehran.monthly_humidity_pct, tehran.site);
    WeatherSeries b = synth_weather(tehran.monthly_dry_bulb_c,
                                    tehran.monthly_humidity_pct, tehran.site);
    ASSERT_EQ(a.records.size(), b.records.size());
    for (size_t i = 0; i < a.records.size(); ++i) {
        EXPECT_EQ(a.records[i].dry_bulb_c, b.records[i].dry_bulb_c);
        EXPECT_EQ(a.records[i].direct_normal_wm2,
                  b.records[i].direct_normal_wm2);
    }
}

TEST(SynthWeather, NoBeamWhenSunDown) {
    auto tehran = city_preset("Tehran");
    WeatherSeries series = synth_weather(
        tehran.monthly_dry_bulb_c, tehran.monthly_humidity_pct, tehran.site);
    for (const auto& rec : series.records) {
        SolarPosition pos = solar_position(series.site, rec.time);
        if (!pos.sun_up) {
            EXPECT_EQ(rec.direct_normal_wm2, 0.0);
            EXPECT_EQ(rec.diffuse_horizontal_wm2, 0.0);
        } else {
            EXPECT_GE(rec.direct_normal_wm2, 0.0);
        }
    }
}

TEST(SynthWeather, RejectsBadHumidity) {
    std::array<double, 12> dry{};
    std::array<double, 12> rh{};
    rh[3] = 120.0;
    EXPECT_THROW(synth_weather(dry, rh, SitePosition{35.42, 51.15, 3.5}),
                 BadInput);
}

TEST(MonthlySummary, ConstantSeries) {
    std::array<double, 12> dry{};
    dry.fill(10.0);
    std::array<double, 12> rh{};
    rh.fill(40.0);
    SynthOptions options;
    options.diurnal_amplitude_c = 0.0;
    WeatherSeries series =
        synth_weather(dry, rh, SitePosition{35.42, 51.15, 3.5}, options);
    auto means = monthly_summary(series);
    for (int m = 0; m < 12; ++m) {
        EXPECT_NEAR(means[m].dry_bulb_c, 10.0, 1e-12);
        EXPECT_NEAR(means[m].relative_humidity_pct, 40.0, 1e-12);
    }
}

TEST(MonthlySummary, AlternatingSeries) {
    WeatherSeries series;
    series.site = SitePosition{35.42, 51.15, 3.5};
    series.records.resize(kHoursPerYear);
    for (int h = 0; h < kHoursPerYear; ++h) {
        series.records[h].time = hour_stamp_from_index(h);
        series.records[h].dry_bulb_c = (h % 2 == 0) ? 0.0 : 20.0;
    }
    auto means = monthly_summary(series);
    for (int m = 0; m < 12; ++m) EXPECT_NEAR(means[m].dry_bulb_c, 10.0, 0.1);
}

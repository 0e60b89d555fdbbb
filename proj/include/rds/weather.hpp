#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "rds/calendar.hpp"

namespace rds {

struct SitePosition {
    double latitude_deg = 0.0;   // north positive
    double longitude_deg = 0.0;  // east positive
    double timezone_hours = 0.0; // hours east of UTC

    void validate() const;
    bool operator==(const SitePosition&) const = default;
};

struct WeatherRecord {
    HourStamp time;
    double dry_bulb_c = 0.0;
    double relative_humidity_pct = 0.0;
    double direct_normal_wm2 = 0.0;
    double diffuse_horizontal_wm2 = 0.0;
};

// One full non-leap year of hourly records.
struct WeatherSeries {
    SitePosition site;
    std::vector<WeatherRecord> records;  // exactly 8760, hourly, in order
};

struct SynthOptions {
    double diurnal_amplitude_c = 5.0;  // minimum at 05:00, maximum at 15:00
    double diffuse_fraction = 0.25;    // clear-sky diffuse share of GHI
};

// Parses an EPW stream: 8 header lines (LOCATION first), then 8760
// comma-separated rows. Used fields: dry bulb (7), relative humidity (9),
// direct normal (15), diffuse horizontal (16), all 1-based. Missing-value
// sentinels are replaced by the previous valid hour (0 at start of file).
// Throws MalformedHeader, BadRecord (with line number), WrongLength.
WeatherSeries parse_epw(std::istream& in);

// Emits a minimal EPW: round-trips through parse_epw on the used fields.
void write_epw(const WeatherSeries& series, std::ostream& out);

// Builds a deterministic synthetic year from monthly normals: per-month
// constant humidity, dry bulb = normal + asymmetric diurnal wave evaluated
// at hour centers (daily sample sum cancels exactly, so monthly means
// reproduce the normals), and clear-sky irradiance from a Haurwitz-style
// global-horizontal model split by a fixed diffuse fraction.
// Throws BadInput on out-of-range humidity or invalid site.
WeatherSeries synth_weather(const std::array<double, 12>& monthly_dry_bulb_c,
                            const std::array<double, 12>& monthly_humidity_pct,
                            const SitePosition& site,
                            const SynthOptions& options = {});

struct MonthlyMeans {
    double dry_bulb_c = 0.0;
    double relative_humidity_pct = 0.0;
};

std::array<MonthlyMeans, 12> monthly_summary(const WeatherSeries& series);

}  // namespace rds

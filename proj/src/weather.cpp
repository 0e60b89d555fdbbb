#include "rds/weather.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "rds/errors.hpp"
#include "rds/solar.hpp"

namespace rds {

namespace {

constexpr double kPi = 3.14159265358979323846;

// EPW missing-value markers for the fields this parser uses.
constexpr double kMissingDryBulb = 99.9;
constexpr double kMissingHumidity = 999.0;
constexpr double kMissingIrradiance = 9999.0;

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

double parse_double(const std::string& text, int line_number,
                    const char* what) {
    try {
        size_t pos = 0;
        double v = std::stod(text, &pos);
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw BadRecord(line_number, std::string("non-numeric ") + what +
                                         " field '" + text + "'");
    }
}

bool dry_bulb_missing(double v) { return v >= kMissingDryBulb || v < -90.0 || v > 60.0; }
bool humidity_missing(double v) { return v < 0.0 || v > 100.0 || v >= kMissingHumidity; }
bool irradiance_missing(double v) { return v < 0.0 || v >= kMissingIrradiance; }

// Asymmetric diurnal wave in [-1, 1]: minimum at 05:00, maximum at 15:00,
// rising over 10 h and falling over 14 h. Each half is a half-cycle cosine,
// so the 24 hour-center samples of one day sum to zero exactly.
double diurnal_deviation(double hour) {
    double t = hour;
    if (t < 5.0) t += 24.0;  // fold 00:00-05:00 into the falling branch
    if (t <= 15.0) return -std::cos(kPi * (t - 5.0) / 10.0);
    return std::cos(kPi * (t - 15.0) / 14.0);
}

}  // namespace

void SitePosition::validate() const {
    if (std::abs(latitude_deg) > 90.0 || std::abs(longitude_deg) > 180.0)
        throw BadInput("site coordinates out of range");
    if (std::abs(timezone_hours) > 14.0)
        throw BadInput("timezone offset out of range");
}

WeatherSeries parse_epw(std::istream& in) {
    std::string line;
    int line_number = 0;

    if (!std::getline(in, line))
        throw MalformedHeader("empty EPW input");
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();

    auto header = split_csv(line);
    if (header.empty() || (header[0] != "LOCATION" && header[0] != "Location" &&
                           header[0] != "location"))
        throw MalformedHeader("first line is not a LOCATION header");
    if (header.size() < 9)
        throw MalformedHeader("LOCATION header has too few fields");

    WeatherSeries series;
    try {
        series.site.latitude_deg = std::stod(header[6]);
        series.site.longitude_deg = std::stod(header[7]);
        series.site.timezone_hours = std::stod(header[8]);
    } catch (const std::exception&) {
        throw MalformedHeader("LOCATION latitude/longitude/timezone not numeric");
    }
    series.site.validate();

    // Remaining 7 header lines (design conditions through data periods).
    for (int i = 0; i < 7; ++i) {
        if (!std::getline(in, line))
            throw MalformedHeader("EPW header shorter than 8 lines");
        ++line_number;
    }

    series.records.reserve(kHoursPerYear);
    double prev_dry_bulb = 0.0;
    double prev_humidity = 0.0;
    double prev_dni = 0.0;
    double prev_dhi = 0.0;

    int row = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        auto fields = split_csv(line);
        if (fields.size() < 31)
            throw BadRecord(line_number, "row has " +
                                             std::to_string(fields.size()) +
                                             " fields, expected >= 31");
        if (row >= kHoursPerYear)
            throw WrongLength("more than 8760 data rows");

        WeatherRecord rec;
        rec.time = hour_stamp_from_index(row);
        double dry_bulb = parse_double(fields[6], line_number, "dry bulb");
        double humidity = parse_double(fields[8], line_number, "relative humidity");
        double dni = parse_double(fields[14], line_number, "direct normal");
        double dhi = parse_double(fields[15], line_number, "diffuse horizontal");

        rec.dry_bulb_c = dry_bulb_missing(dry_bulb) ? prev_dry_bulb : dry_bulb;
        rec.relative_humidity_pct =
            humidity_missing(humidity) ? prev_humidity : humidity;
        rec.direct_normal_wm2 = irradiance_missing(dni) ? prev_dni : dni;
        rec.diffuse_horizontal_wm2 = irradiance_missing(dhi) ? prev_dhi : dhi;

        prev_dry_bulb = rec.dry_bulb_c;
        prev_humidity = rec.relative_humidity_pct;
        prev_dni = rec.direct_normal_wm2;
        prev_dhi = rec.diffuse_horizontal_wm2;

        series.records.push_back(rec);
        ++row;
    }

    if (row != kHoursPerYear)
        throw WrongLength("EPW has " + std::to_string(row) +
                          " data rows, expected 8760");
    return series;
}

void write_epw(const WeatherSeries& series, std::ostream& out) {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "LOCATION,Site,-,-,synthetic,000000,%.4f,%.4f,%.2f,0.0\n",
                  series.site.latitude_deg, series.site.longitude_deg,
                  series.site.timezone_hours);
    out << buf;
    out << "DESIGN CONDITIONS,0\n"
           "TYPICAL/EXTREME PERIODS,0\n"
           "GROUND TEMPERATURES,0\n"
           "HOLIDAYS/DAYLIGHT SAVINGS,No,0,0,0\n"
           "COMMENTS 1,generated\n"
           "COMMENTS 2,\n"
           "DATA PERIODS,1,1,Data,Monday,1/1,12/31\n";
    for (const auto& rec : series.records) {
        // Fields 1-6: date/time/flags; 7 dry bulb; 9 RH; 15 DNI; 16 DHI.
        // Unused fields carry zeros.
        std::snprintf(buf, sizeof buf,
                      "2001,%d,%d,%d,0,-,%.2f,0.0,%.1f,101325,0,0,0,0,%.1f,%."
                      "1f,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0\n",
                      rec.time.month, rec.time.day, rec.time.hour + 1,
                      rec.dry_bulb_c, rec.relative_humidity_pct,
                      rec.direct_normal_wm2, rec.diffuse_horizontal_wm2);
        out << buf;
    }
}

WeatherSeries synth_weather(const std::array<double, 12>& monthly_dry_bulb_c,
                            const std::array<double, 12>& monthly_humidity_pct,
                            const SitePosition& site,
                            const SynthOptions& options) {
    site.validate();
    for (double rh : monthly_humidity_pct)
        if (rh < 0.0 || rh > 100.0)
            throw BadInput("monthly humidity outside [0, 100]");
    for (double t : monthly_dry_bulb_c)
        if (t < -90.0 || t > 60.0)
            throw BadInput("monthly dry bulb outside [-90, 60]");

    WeatherSeries series;
    series.site = site;
    series.records.resize(kHoursPerYear);
    for (int h = 0; h < kHoursPerYear; ++h) {
        WeatherRecord& rec = series.records[h];
        rec.time = hour_stamp_from_index(h);
        int m = rec.time.month - 1;
        rec.dry_bulb_c = monthly_dry_bulb_c[m] +
                         options.diurnal_amplitude_c *
                             diurnal_deviation(rec.time.hour + 0.5);
        rec.relative_humidity_pct = monthly_humidity_pct[m];

        SolarPosition pos = solar_position(site, rec.time);
        if (pos.sun_up) {
            double sin_alt = std::sin(pos.altitude_deg * kPi / 180.0);
            double ghi = 1098.0 * sin_alt * std::exp(-0.057 / sin_alt);
            rec.diffuse_horizontal_wm2 = options.diffuse_fraction * ghi;
            rec.direct_normal_wm2 =
                (1.0 - options.diffuse_fraction) * ghi / sin_alt;
        } else {
            rec.direct_normal_wm2 = 0.0;
            rec.diffuse_horizontal_wm2 = 0.0;
        }
    }
    return series;
}

std::array<MonthlyMeans, 12> monthly_summary(const WeatherSeries& series) {
    std::array<MonthlyMeans, 12> means{};
    std::array<int, 12> count{};
    for (const auto& rec : series.records) {
        int m = rec.time.month - 1;
        means[m].dry_bulb_c += rec.dry_bulb_c;
        means[m].relative_humidity_pct += rec.relative_humidity_pct;
        ++count[m];
    }
    for (int m = 0; m < 12; ++m) {
        if (count[m] == 0) continue;
        means[m].dry_bulb_c /= count[m];
        means[m].relative_humidity_pct /= count[m];
    }
    return means;
}

}  // namespace rds

#pragma once

#include <array>
#include <cstdint>

namespace rds {

// The engine simulates a canonical non-leap year of 8760 hours.
// Day 1 (January 1) is a Monday.
inline constexpr int kHoursPerYear = 8760;
inline constexpr int kDaysPerYear = 365;

inline constexpr std::array<int, 12> kDaysInMonth = {31, 28, 31, 30, 31, 30,
                                                     31, 31, 30, 31, 30, 31};

// Days elapsed before the first of each month (0-based month index).
inline constexpr std::array<int, 12> kDaysBeforeMonth = {
    0, 31, 59, 90, 120, 151, 181, 212, 243, 273, 304, 334};

// One simulated hour: month 1-12, day 1-31, hour 0-23.
// Hour h covers the local-standard interval [h, h+1).
struct HourStamp {
    int month = 1;
    int day = 1;
    int hour = 0;

    int day_of_year() const { return kDaysBeforeMonth[month - 1] + day; }
    int hour_of_year() const { return (day_of_year() - 1) * 24 + hour; }

    // Monday = 0 ... Sunday = 6.
    int weekday() const { return (day_of_year() - 1) % 7; }
    bool is_weekday() const { return weekday() < 5; }

    bool operator==(const HourStamp&) const = default;
};

inline HourStamp hour_stamp_from_index(int hour_of_year) {
    HourStamp s;
    int day = hour_of_year / 24;
    s.hour = hour_of_year % 24;
    int m = 0;
    while (m < 11 && day >= kDaysBeforeMonth[m + 1]) ++m;
    s.month = m + 1;
    s.day = day - kDaysBeforeMonth[m] + 1;
    return s;
}

}  // namespace rds

#pragma once

#include <stdexcept>
#include <string>

namespace rds {

// Base class for all simulator errors. The CLI maps the three branches
// below onto its exit codes (config 2, weather 3, numeric/other 4).
struct SimError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : SimError {
    using SimError::SimError;
};

struct WeatherError : SimError {
    using SimError::SimError;
};

struct NumericError : SimError {
    using SimError::SimError;
};

// weather module
struct MalformedHeader : WeatherError {
    using WeatherError::WeatherError;
};
struct BadRecord : WeatherError {
    BadRecord(int line_number, const std::string& what)
        : WeatherError("line " + std::to_string(line_number) + ": " + what),
          line(line_number) {}
    int line;
};
struct WrongLength : WeatherError {
    using WeatherError::WeatherError;
};
struct BadInput : WeatherError {
    using WeatherError::WeatherError;
};

// solar module
struct SunBelowHorizon : NumericError {
    using NumericError::NumericError;
};

// blind_optics module
struct BadAngle : NumericError {
    using NumericError::NumericError;
};
struct NoBlindPresent : NumericError {
    using NumericError::NumericError;
};

// fenestration module
struct ConfigMismatch : NumericError {
    using NumericError::NumericError;
};

// control / comparison
struct MismatchedWeather : NumericError {
    using NumericError::NumericError;
};
struct ZeroBase : NumericError {
    using NumericError::NumericError;
};

}  // namespace rds

#pragma once

#include <stdexcept>
#include <string>

namespace uavbs {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent scenario configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

// Weather input that cannot be parsed or scheduled.
class WeatherError : public Error {
public:
    using Error::Error;
};

// A model input violated the operation's preconditions.
class ModelPreconditionError : public Error {
public:
    using Error::Error;
};

// A fixed-wing airframe was asked to fly at zero forward speed.
class FixedWingHoverError : public ModelPreconditionError {
public:
    FixedWingHoverError()
        : ModelPreconditionError("fixed-wing cannot hover: forward velocity must be > 0") {}
};

// Phase-shifter resolution missing from the per-element power table.
class UnknownBitResolutionError : public ModelPreconditionError {
public:
    explicit UnknownBitResolutionError(int bits)
        : ModelPreconditionError("no phase-shifter power entry for " + std::to_string(bits) +
                                 "-bit resolution"),
          bits_(bits) {}
    int bits() const noexcept { return bits_; }

private:
    int bits_;
};

}  // namespace uavbs

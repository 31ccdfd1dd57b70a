#pragma once
#include <stdexcept>
#include <string>

namespace chemlab {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Config load/validation failure; message names the offending key and constraint.
struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// A time step violated a scheme guarantee (CFL/positivity). Carries where and when.
struct StepFailure : Error {
    double time;
    long cell;
    StepFailure(const std::string& msg, double t, long c)
        : Error(msg + " at t=" + std::to_string(t) + ", cell=" + std::to_string(c)),
          time(t), cell(c) {}
};

} // namespace chemlab

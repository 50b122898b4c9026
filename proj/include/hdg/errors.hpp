#pragma once

#include <stdexcept>
#include <string>

namespace hdg {

// Bad user/run configuration (CLI exit code 2).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-finite state encountered during a run (CLI exit code 1).
class BlowupError : public std::runtime_error {
public:
    BlowupError(double t, int element, const std::string& msg)
        : std::runtime_error(msg), time(t), element(element) {}
    double time;
    int element;
};

} // namespace hdg

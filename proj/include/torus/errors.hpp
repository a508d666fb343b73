#pragma once

#include <stdexcept>
#include <string>

namespace torus {

// Internal inconsistency detected by the engine (strength out of range,
// unknown owner, impossible combat outcome). A game hitting this is aborted.
struct EngineFault : std::runtime_error {
    explicit EngineFault(const std::string& what) : std::runtime_error(what) {}
};

// Invalid parameters or usage supplied by the caller / command line.
struct ConfigError : std::invalid_argument {
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

// A file (replay, map) failed to load. `where` carries the offending field
// path or file location so callers can report it precisely.
struct ReadError : std::runtime_error {
    ReadError(const std::string& where, const std::string& what)
        : std::runtime_error(where + ": " + what), where(where) {}
    std::string where;
};

}  // namespace torus

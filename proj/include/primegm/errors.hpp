#pragma once

#include <stdexcept>
#include <string>

namespace primegm {

// Requested work exceeds a configured capacity (sieve limit, exact-mode cap).
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid configuration (segment size, memory budget, flag combinations).
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// A range that contains nothing to enumerate (e.g. sieve limit < 2).
class empty_range_error : public std::runtime_error {
public:
    explicit empty_range_error(const std::string& what) : std::runtime_error(what) {}
};

// An accumulator received events out of order.
class sequencing_error : public std::runtime_error {
public:
    explicit sequencing_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace primegm

#pragma once

#include <stdexcept>
#include <string>

namespace npcpt {

/// Invalid user-supplied configuration (bad K, negative penalty, unknown names).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed or unusable input data (non-finite values, unparseable cells).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace npcpt

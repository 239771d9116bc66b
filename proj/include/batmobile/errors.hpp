#pragma once

#include <stdexcept>
#include <string>

namespace batmobile {

// Invalid scenario or channel configuration; the message names the
// offending key and the violated constraint.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace batmobile

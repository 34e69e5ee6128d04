#pragma once

#include <stdexcept>
#include <string>

namespace floodopt {

// Raised for any domain or configuration validation failure. The CLI maps
// these to exit code 2; anything else that escapes is a runtime failure (3).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace floodopt

#pragma once

#include <stdexcept>
#include <string>

namespace srsim {

/// Bad parameters, malformed config/input files. CLI exit code 1.
class ValidationError : public std::runtime_error {
  public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Numeric failure during a run (divergence, rank deficiency, ...). CLI exit code 2.
class NumericError : public std::runtime_error {
  public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace srsim

#pragma once

#include <stdexcept>
#include <string>

namespace widthlab {

// A stated hypothesis of a bound or an evaluation certificate does not hold
// for the requested parameters.  Distinct from std::invalid_argument, which
// marks malformed configuration.
class precondition_error : public std::runtime_error {
 public:
  explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace widthlab

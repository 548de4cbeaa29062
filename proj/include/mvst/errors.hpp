#pragma once

#include <stdexcept>
#include <string>

namespace mvst {

// Thrown when a computation degrades numerically (lost grade purity,
// integration blow-up, missing root bracket). Validation problems use
// std::invalid_argument; the CLI maps the two onto distinct exit codes.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mvst

#pragma once

#include <stdexcept>
#include <string>

namespace splitoc {

// Malformed arguments: bad words, impossible degrees, inconsistent specs.
class invalid_input : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A polynomial was evaluated without a value for one of its unknowns.
class unbound_variable : public std::runtime_error {
public:
  explicit unbound_variable(const std::string& name)
      : std::runtime_error("unbound unknown: " + name), name_(name) {}

  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

// A numeric check was requested for inputs that do not satisfy its
// preconditions, so any residual would be meaningless.
class precondition_failed : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace splitoc

#pragma once

#include <stdexcept>
#include <string>

namespace chv {

// Thrown when a computation contradicts something the theory guarantees
// (a nonzero remainder in an exact division, a missing primitive prime, a
// product-formula mismatch). Reaching it means either a bug or a falsified
// theorem, so callers treat it as fatal.
class internal_error : public std::logic_error {
public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

// Invalid input at a public boundary. CLI exit code 2.
class usage_error : public std::runtime_error {
public:
  explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

// Work refused because it exceeds a configured size cap. CLI exit code 3.
class resource_error : public std::runtime_error {
public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace chv

#pragma once

#include <stdexcept>
#include <string>

namespace fanocert {

/// Raised for every precondition violation in the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fanocert

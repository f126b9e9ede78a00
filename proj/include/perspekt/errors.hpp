#pragma once

#include <stdexcept>
#include <string>

namespace perspekt {

// Thrown when an enumeration would exceed its configured cap.  Callers that
// surface exit codes map this to the resource-cap status.
class CapExceeded : public std::runtime_error {
  public:
    explicit CapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace perspekt

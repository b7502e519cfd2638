#pragma once

#include <stdexcept>
#include <string>

namespace hexarep {

// Thrown when an operation's precondition is violated or a construction
// invariant breaks. Verification *failures* are never faults; they are
// recorded in reports.
class Fault : public std::runtime_error {
 public:
  explicit Fault(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hexarep

#pragma once

#include <stdexcept>
#include <string>

namespace zerocycle {

// Tracking, root finding or series matching could not reach the requested accuracy.
class NumericalFailure : public std::runtime_error {
 public:
  explicit NumericalFailure(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration hit its configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& cap_name, long long cap)
      : std::runtime_error(cap_name + " exceeded (cap = " + std::to_string(cap) + ")"),
        cap_name_(cap_name), cap_(cap) {}
  const std::string& cap_name() const { return cap_name_; }
  long long cap() const { return cap_; }

 private:
  std::string cap_name_;
  long long cap_;
};

// Numeric and exact evidence disagree in a way the solver cannot resolve.
class InconsistentEvidence : public std::runtime_error {
 public:
  explicit InconsistentEvidence(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace zerocycle

#pragma once

#include <stdexcept>
#include <string>

namespace nodal {

/// A computed object failed one of the checks that certify a mathematical claim.
class VerificationError : public std::runtime_error {
 public:
  explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nodal

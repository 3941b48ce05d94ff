#pragma once

#include <stdexcept>
#include <string>

namespace kempf {

/// Malformed or inconsistent input (dimension mismatch, bad schema, violated
/// precondition). The CLI maps this to exit status 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured work bound was exceeded (lattice scan budget, group closure
/// bound). The CLI maps this to exit status 3.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kempf

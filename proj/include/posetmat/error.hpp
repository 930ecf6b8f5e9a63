#pragma once

#include <stdexcept>
#include <string>

namespace posetmat {

/// An exhaustive engine was asked for an instance above its configured cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace posetmat

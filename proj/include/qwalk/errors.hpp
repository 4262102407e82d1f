#pragma once

#include <stdexcept>

namespace qwalk {

// enumeration / dense-solve resource guard tripped; CLI maps this to exit 3
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qwalk

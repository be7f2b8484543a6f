#pragma once

#include <stdexcept>

namespace rankpd {

// The CLI maps these to exit codes: parse_error -> 2, invariant_error -> 3,
// unsupported_error -> 4.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct invariant_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct unsupported_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rankpd

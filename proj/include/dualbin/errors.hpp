#ifndef DUALBIN_ERRORS_HPP
#define DUALBIN_ERRORS_HPP

#include <stdexcept>

namespace dualbin {

// Malformed instance/BSP/advice input text.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configurable guard (DP state space, backtracking size) was exceeded.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Violation of the online protocol: corrupted advice, decisions out of
// order, or a stream/parameter mismatch detected mid-run.
struct ProtocolError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dualbin

#endif

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>

namespace selfstab {

// Malformed file content or unrecognized token.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Filesystem failure; the message carries the offending path.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A central-daemon trial ran out of moves without reaching a fixpoint.
struct NonConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace selfstab

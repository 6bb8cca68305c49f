// SPDX-License-Identifier: MIT
#pragma once

#include <stdexcept>
#include <string>

namespace finalg {

// Input / usage errors: malformed input, mixed-scalar operations, violated
// preconditions.  The command-line tool maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }

inline void require(bool cond, const std::string& msg) {
  if (!cond) fail(msg);
}

}  // namespace finalg

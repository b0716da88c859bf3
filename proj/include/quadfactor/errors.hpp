#pragma once

#include <stdexcept>
#include <string>

namespace quadfactor {

/// Malformed or unsupported user input (bad file, invalid disk, wrong shape).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal identity failed to hold. Always a bug, never a user error.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void check_invariant(bool cond, const std::string& what) {
  if (!cond) throw InvariantError(what);
}

}  // namespace quadfactor

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace minpres {

/// Malformed textual input (partitions, permutations, CLI arguments).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A parameter tuple violates its defining inequalities.  Each violated
/// constraint is reported by name.
struct InvalidTupleError : std::runtime_error {
  std::vector<std::string> violations;

  explicit InvalidTupleError(std::vector<std::string> v)
      : std::runtime_error(join(v)), violations(std::move(v)) {}

  static std::string join(const std::vector<std::string>& v) {
    std::string s = "invalid tuple:";
    for (const auto& x : v) s += " [" + x + "]";
    return s;
  }
};

/// An operation was called outside its contract (wrong shape class,
/// mismatched tuples, non-decomposable input, ...).
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Instance exceeds the desk-scale resource guard; overridable by force.
struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A brute-force search was refused because the instance is too big.
struct InstanceTooLargeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace minpres

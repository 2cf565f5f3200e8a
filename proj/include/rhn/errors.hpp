#pragma once

#include <stdexcept>
#include <string>

namespace rhn {

/// Index outside the domain n >= 1, m >= 0 (or a malformed table bound).
struct InvalidIndex : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct ZeroReciprocal : std::domain_error {
  ZeroReciprocal() : std::domain_error("reciprocal of zero") {}
};

/// A binary64 term or result was not finite.
struct Overflow : std::overflow_error {
  using std::overflow_error::overflow_error;
};

struct UnsupportedFormat : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace rhn

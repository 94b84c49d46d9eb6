#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rvd {

/// Malformed graph or coloring text. `location()` is a 1-based line number
/// for line-oriented formats and a 0-based byte offset for graph6.
class ParseError : public std::runtime_error {
 public:
  enum class Unit { Line, Byte };

  ParseError(const std::string& what, Unit unit, std::size_t location)
      : std::runtime_error(describe(what, unit, location)),
        unit_(unit),
        location_(location) {}

  Unit unit() const noexcept { return unit_; }
  std::size_t location() const noexcept { return location_; }

 private:
  static std::string describe(const std::string& what, Unit unit,
                              std::size_t location) {
    return (unit == Unit::Line ? "line " : "byte ") +
           std::to_string(location) + ": " + what;
  }

  Unit unit_;
  std::size_t location_;
};

/// A family descriptor whose parameters violate the hypotheses of the
/// closed form it would be evaluated with.
class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The exact solver refuses blocks larger than its configured cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural guarantee that the algorithms rely on did not hold. Seeing
/// this means either a bug or a counterexample to the underlying result.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rvd

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace latticestick {

enum class ErrorCode {
  // polygon construction
  EmptyInput,
  NotClosed,
  NotAxisAligned,
  SelfIntersecting,
  DegenerateBacktrack,
  TooFewSticks,
  CoordinateOutOfRange,
  MalformedInput,
  // leveling
  PlanarPolygon,
  NotProperlyLeveled,
  // diagrams
  UnknottedNoCrossings,
  WrongZStructure,
  // invariants
  TooManyCrossings,
  // census
  CompositionTooLarge,
  BudgetExceeded,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by polygon validation. For SelfIntersecting the offending pair of
/// stick indices (into the corner-normalized cycle) is attached.
class PolygonError : public Error {
 public:
  PolygonError(ErrorCode code, const std::string& what,
               std::optional<std::pair<std::size_t, std::size_t>> sticks = std::nullopt)
      : Error(code, what), sticks_(sticks) {}

  const std::optional<std::pair<std::size_t, std::size_t>>& offending_sticks() const noexcept {
    return sticks_;
  }

 private:
  std::optional<std::pair<std::size_t, std::size_t>> sticks_;
};

}  // namespace latticestick

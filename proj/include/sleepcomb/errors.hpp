#pragma once

#include <stdexcept>
#include <string>

namespace sleepcomb {

/// Thrown when an action is charged for an element that has no loss value
/// (typically a sleeping element).
struct MissingLoss : std::runtime_error {
  explicit MissingLoss(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an enumeration would exceed the configured cap.
struct TooLarge : std::runtime_error {
  explicit TooLarge(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown by the game loop when a learner plays an action that is not an
/// awake member of the decision set, or skips a round with awake actions.
struct ProtocolViolation : std::runtime_error {
  explicit ProtocolViolation(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown by solvers that require nonnegative losses when given negatives.
struct UnsupportedLossRange : std::runtime_error {
  explicit UnsupportedLossRange(const std::string& what) : std::runtime_error(what) {}
};

/// Signals a broken construction (e.g. no awake action where one is
/// guaranteed, or a non-unique awake member where uniqueness is required).
struct ConstructionDefect : std::runtime_error {
  explicit ConstructionDefect(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed text input (labels, graph files, streams).
struct FormatError : std::runtime_error {
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sleepcomb

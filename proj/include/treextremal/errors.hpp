#pragma once

#include <stdexcept>
#include <string>

namespace treextremal {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or invalid user input (text, labels, indices).
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};
class NotATreeSequence : public InputError {
 public:
  using InputError::InputError;
};
class InvalidTree : public InputError {
 public:
  using InputError::InputError;
};
class LengthMismatch : public InputError {
 public:
  using InputError::InputError;
};
class LabelOutOfRange : public InputError {
 public:
  using InputError::InputError;
};
class VertexOutOfRange : public InputError {
 public:
  using InputError::InputError;
};
class IndexOutOfRange : public InputError {
 public:
  using InputError::InputError;
};
class EmptySpine : public InputError {
 public:
  using InputError::InputError;
};
class NoInternalVertices : public InputError {
 public:
  using InputError::InputError;
};
class WrongK : public InputError {
 public:
  using InputError::InputError;
};
class ClosedFormUnavailable : public InputError {
 public:
  using InputError::InputError;
};
class NotApplicable : public InputError {
 public:
  using InputError::InputError;
};

/// Raised before work starts when a search would exceed its configured cap.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::string predicted)
      : Error(what), predicted_(std::move(predicted)) {}
  /// Predicted size of the refused search, as a decimal string.
  const std::string& predicted() const noexcept { return predicted_; }

 private:
  std::string predicted_;
};

/// The brute-force oracle refuses trees above its size guard.
class TooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace treextremal

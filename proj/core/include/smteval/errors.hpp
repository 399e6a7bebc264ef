#ifndef SMTEVAL_ERRORS_HPP
#define SMTEVAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace smteval {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input text is not valid UTF-8, or violates a basic corpus invariant.
class EncodingError : public Error {
 public:
  using Error::Error;
};

/// A function received empty input where at least one element is required.
class EmptyInputError : public Error {
 public:
  using Error::Error;
};

/// Malformed structured input (alignment pairs, CSV rows, model files).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Two inputs that must agree on dimensions do not.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A numeric argument is outside its documented range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Statistical test preconditions not met (too few pairs, ragged matrix,
/// zero-variance data).
class StatsError : public Error {
 public:
  using Error::Error;
};

}  // namespace smteval

#endif

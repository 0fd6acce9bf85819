#pragma once

#include <stdexcept>
#include <string>

namespace largecover {

// Base of every error raised by the library. The CLI maps each subclass to a
// distinct exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed instance text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// An enumeration, memory or arithmetic-range limit would be exceeded.
class GuardError : public Error {
 public:
  using Error::Error;
};

// Input violates a hypothesis the algorithm relies on.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

// A produced certificate failed re-verification.
class SoundnessError : public Error {
 public:
  using Error::Error;
};

}  // namespace largecover

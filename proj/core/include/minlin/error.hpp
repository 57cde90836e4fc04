#pragma once

#include <stdexcept>
#include <string>

namespace minlin {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value failed its type invariant (bad metric, size mismatch, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class UnknownPoint : public Error {
 public:
  using Error::Error;
};

/// A function has no point with a finite value.
class EmptyDomain : public Error {
 public:
  using Error::Error;
};

/// A real-valued function was required but +inf was found.
class NotFinite : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The minorant set A_Y(f) is empty.
class NoMinorant : public Error {
 public:
  using Error::Error;
};

/// The requested operation is not offered for the given function class.
class Unsupported : public Error {
 public:
  using Error::Error;
};

class MalformedProgram : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace minlin

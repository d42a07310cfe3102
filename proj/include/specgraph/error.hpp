#pragma once

#include <stdexcept>
#include <string>

namespace specgraph {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The module is larger than the configured enumeration bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// A graph was requested for an empty subset of the spectrum.
class EmptySubset : public Error {
 public:
  using Error::Error;
};

/// Backtracking isomorphism/embedding search refused an oversized input.
class SearchBoundExceeded : public Error {
 public:
  using Error::Error;
};

class UnsupportedFormat : public Error {
 public:
  using Error::Error;
};

/// A module spec document could not be read or has the wrong shape.
class MalformedSpec : public Error {
 public:
  using Error::Error;
};

/// A submodule index outside the enumeration.
class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

}  // namespace specgraph

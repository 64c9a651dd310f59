#pragma once

#include <stdexcept>
#include <string>

namespace baire {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two decorations (marks, functions) refer to different pattern trees.
struct ShapeMismatch : Error {
  using Error::Error;
};

struct InvalidAddress : Error {
  using Error::Error;
};

struct NotClosed : Error {
  using Error::Error;
};

// An operation that needs a nonempty subspace was handed the empty one.
struct EmptySubspaceError : Error {
  using Error::Error;
};

struct PreconditionFailed : Error {
  PreconditionFailed(const std::string& what, std::string witness_node = {})
      : Error(what), witness(std::move(witness_node)) {}
  std::string witness;
};

// Internal invariant tripwire: reaching this means the engine itself is wrong.
struct SoundnessFault : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& path, const std::string& msg)
      : Error(path + ": " + msg), json_path(path) {}
  std::string json_path;
};

}  // namespace baire

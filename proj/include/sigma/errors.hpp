#pragma once

#include <stdexcept>
#include <string>

namespace sigma {

// Malformed or ill-typed input document. The kind distinguishes the
// validation failures that callers are expected to tell apart.
class ParseError : public std::runtime_error {
 public:
  enum class Kind {
    malformed,
    duplicate_vertex,
    unknown_vertex,
    self_loop,
    duplicate_edge,
    bad_rational,
    missing_weight,
  };

  ParseError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Structurally valid input that violates an operation's domain
// (zero character, simplex not in the complex, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The queried value is undefined for this input (disconnected graph for a
// Bestvina-Brady query, Sigma^n asked below the finiteness length, ...).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configurable resource cap was exceeded.
class ResourceCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A complex was queried beyond its materialized dimension.
class NotMaterializedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sigma

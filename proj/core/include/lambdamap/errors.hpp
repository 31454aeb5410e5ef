#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lambdamap {

// A map whose permutations violate the structural invariants of its type.
class MalformedMap : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by operations whose result would be the vertexless map: smoothing
// the map of the identity term, or of the trivial map.
class VertexlessMap : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DisconnectedGraph : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition on the shape of the input (open term where a closed one is
// required, boundary where a closed map is required, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at offset " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

enum class LinearityViolation {
  variable_used_twice,
  unbound_variable,
  context_variable_unused,
  binder_unused,
  duplicate_context_variable,
};

const char* to_string(LinearityViolation kind) noexcept;

class LinearityError : public std::runtime_error {
 public:
  LinearityError(LinearityViolation kind, const std::string& variable);

  LinearityViolation kind() const noexcept { return kind_; }
  const std::string& variable() const noexcept { return variable_; }

 private:
  LinearityViolation kind_;
  std::string variable_;
};

// Signals a bug in this library rather than bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lambdamap

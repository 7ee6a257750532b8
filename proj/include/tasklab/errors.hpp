#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tasklab {

// Base class for all library failures worth catching by kind.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operands built over different variable counts.
struct dimension_error : error {
  using error::error;
};

// An enumeration or search would exceed the configured caps.
struct capacity_error : error {
  using error::error;
};

// A precondition on an argument value does not hold.
struct argument_error : error {
  using error::error;
};

// An ostensive definition cannot be made (or kept) proper.
struct properness_error : error {
  using error::error;
};

// A generated object came out empty or unusable.
struct generation_error : error {
  using error::error;
};

// A task, or a task file, violates the task invariants.
struct invalid_task_error : error {
  using error::error;
};

// Statement text rejected by the parser. `offset` is the byte offset into
// the input where the problem starts.
struct parse_error : error {
  enum class kind { syntax, scope, contradiction };

  parse_error(kind k, std::size_t offset, const std::string& what)
      : error(what), k(k), offset(offset) {}

  kind k;
  std::size_t offset;
};

}  // namespace tasklab

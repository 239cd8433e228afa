#ifndef FSG_ERRORS_HPP
#define FSG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fsg {

// Bad user-supplied parameters (graph families, file formats, CLI ranges).
struct ParameterError : std::runtime_error {
  explicit ParameterError(const std::string& what) : std::runtime_error(what) {}
};

// A routine was called outside its contract.
struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& what)
      : std::runtime_error(what) {}
};

// A move violated one of the two friendly-swap adjacency conditions.
struct IllegalMoveError : std::runtime_error {
  enum class Kind { not_y_adjacent, not_x_adjacent };
  IllegalMoveError(Kind kind, int index, const std::string& what)
      : std::runtime_error(what), kind(kind), index(index) {}
  Kind kind;
  int index;  // position in the sequence, -1 for a single move
};

struct StateBudgetError : std::runtime_error {
  explicit StateBudgetError(const std::string& what)
      : std::runtime_error(what) {}
};

struct UnsupportedInstanceError : std::runtime_error {
  explicit UnsupportedInstanceError(const std::string& what)
      : std::runtime_error(what) {}
};

struct DegreeConditionError : std::runtime_error {
  explicit DegreeConditionError(const std::string& what)
      : std::runtime_error(what) {}
};

// Violation of a property the theory guarantees; always a bug.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace fsg

#endif  // FSG_ERRORS_HPP

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace neutralize {

using EdgeId = std::size_t;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A weight or potential computation left the 64-bit signed range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Malformed graph file. `line()` is 1-based; 0 when the error is not tied to a line.
class FormatError : public Error {
 public:
  FormatError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A file could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// A vertex id, family parameter or size argument is out of range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// An input violates a documented precondition (e.g. negative weight given to Dijkstra).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The graph contains a negative cycle. The witness lists the cycle's edges in traversal order.
class NegativeCycleError : public Error {
 public:
  explicit NegativeCycleError(std::vector<EdgeId> witness)
      : Error("negative cycle detected (" + std::to_string(witness.size()) + " edges)"),
        witness_(std::move(witness)) {}

  const std::vector<EdgeId>& witness() const noexcept { return witness_; }

 private:
  std::vector<EdgeId> witness_;
};

/// The iteration cap was reached while strictly negative edges remained.
class IterationLimitError : public Error {
 public:
  IterationLimitError(std::size_t iterations, std::size_t negative_edges)
      : Error("iteration limit of " + std::to_string(iterations) + " reached with " +
              std::to_string(negative_edges) + " negative edges remaining"),
        iterations_(iterations),
        negative_edges_(negative_edges) {}

  std::size_t iterations() const noexcept { return iterations_; }
  std::size_t negative_edges() const noexcept { return negative_edges_; }

 private:
  std::size_t iterations_;
  std::size_t negative_edges_;
};

/// The zero-weight subgraph contains a cycle where an acyclic one is required.
class ZeroCycleError : public Error {
 public:
  using Error::Error;
};

/// A graph does not have the shape an operation requires (e.g. not a simple path).
class ShapeError : public Error {
 public:
  using Error::Error;
};

}  // namespace neutralize

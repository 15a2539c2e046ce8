#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace arith {

/// Base of every domain error raised by the library. The CLI maps these to exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GraphError : public Error {
 public:
  using Error::Error;
};

/// A vertex value does not divide the sum of its neighbours' values.
class DivisibilityError : public Error {
 public:
  explicit DivisibilityError(std::size_t vertex)
      : Error("r-value at vertex " + std::to_string(vertex + 1) +
              " does not divide the sum of its neighbours"),
        vertex_(vertex) {}
  std::size_t vertex() const noexcept { return vertex_; }

 private:
  std::size_t vertex_;
};

class KernelDimensionError : public Error {
 public:
  explicit KernelDimensionError(std::size_t dimension)
      : Error("kernel of diag(d) - A has dimension " + std::to_string(dimension) +
              ", expected 1"),
        dimension_(dimension) {}
  std::size_t dimension() const noexcept { return dimension_; }

 private:
  std::size_t dimension_;
};

class NonPositiveKernelError : public Error {
 public:
  NonPositiveKernelError()
      : Error("kernel of diag(d) - A is not spanned by a strictly positive vector") {}
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class NotSmoothableError : public Error {
 public:
  using Error::Error;
};

class NotSmoothError : public Error {
 public:
  using Error::Error;
};

class LeafSmoothableError : public Error {
 public:
  explicit LeafSmoothableError(std::size_t leaf)
      : Error("leaf l" + std::to_string(leaf) + " has d = 1; smooth it explicitly first"),
        leaf_(leaf) {}
  std::size_t leaf() const noexcept { return leaf_; }

 private:
  std::size_t leaf_;
};

class PositionError : public Error {
 public:
  using Error::Error;
};

class InvalidSequenceError : public Error {
 public:
  InvalidSequenceError(std::size_t index, std::string what)
      : Error(std::move(what)), index_(index) {}
  /// 1-based index of the first violating entry.
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class AssignmentError : public Error {
 public:
  using Error::Error;
};

class GcdError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class OracleMissError : public Error {
 public:
  OracleMissError(std::size_t q, std::size_t s)
      : Error("smooth-count oracle has no entry for CT(" + std::to_string(q) + "," +
              std::to_string(s) + ")"),
        q_(q),
        s_(s) {}
  std::size_t q() const noexcept { return q_; }
  std::size_t s() const noexcept { return s_; }

 private:
  std::size_t q_;
  std::size_t s_;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace arith

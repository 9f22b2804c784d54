#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace orderkit {

/// Base class of every error raised by the library.
class OrderError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The reflexive-transitive closure of the input pairs is not antisymmetric.
class CycleError : public OrderError {
 public:
  CycleError(std::string first, std::string second)
      : OrderError("order relation has a cycle through '" + first + "' and '" + second + "'"),
        first_(std::move(first)), second_(std::move(second)) {}
  const std::string& first() const { return first_; }
  const std::string& second() const { return second_; }

 private:
  std::string first_, second_;
};

class UnknownLabel : public OrderError {
 public:
  explicit UnknownLabel(const std::string& label)
      : OrderError("unknown element label '" + label + "'"), label_(label) {}
  const std::string& label() const { return label_; }

 private:
  std::string label_;
};

/// A pair of elements without a join or meet.
class NotALattice : public OrderError {
 public:
  NotALattice(std::string a, std::string b, const std::string& what)
      : OrderError("not a lattice: '" + a + "' and '" + b + "' have no " + what),
        a_(std::move(a)), b_(std::move(b)) {}
  NotALattice() : OrderError("not a lattice: empty carrier") {}
  const std::string& first() const { return a_; }
  const std::string& second() const { return b_; }

 private:
  std::string a_, b_;
};

/// An exhaustive enumeration would exceed its configured cap.
class SizeLimit : public OrderError {
 public:
  /// `size` is the offending size (element count or object count); `exact`
  /// tells whether it is an exact count or only a lower bound.
  SizeLimit(const std::string& what, std::size_t size, std::size_t cap, bool exact = true)
      : OrderError(what + ": " + (exact ? "" : "more than ") + std::to_string(size) +
                   " exceeds limit " + std::to_string(cap)),
        size_(size), cap_(cap), exact_(exact) {}
  std::size_t size() const { return size_; }
  std::size_t cap() const { return cap_; }
  bool exact() const { return exact_; }

 private:
  std::size_t size_, cap_;
  bool exact_;
};

/// Malformed poset file; `line` is 1-based.
class SyntaxError : public OrderError {
 public:
  SyntaxError(std::size_t line, const std::string& msg)
      : OrderError("line " + std::to_string(line) + ": " + msg), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Malformed predicate expression; `position` is a 0-based column.
class ParseError : public OrderError {
 public:
  ParseError(std::size_t position, const std::string& msg)
      : OrderError("column " + std::to_string(position + 1) + ": " + msg), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownName : public OrderError {
 public:
  explicit UnknownName(const std::string& name) : OrderError("unknown structure name '" + name + "'") {}
};

}  // namespace orderkit

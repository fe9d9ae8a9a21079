#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fgc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A generator index outside 1..rank.
class InvalidLetter : public Error {
public:
  using Error::Error;
};

/// Malformed textual or JSON input. `line`/`column` are 1-based; 0 when unknown.
class ParseError : public Error {
public:
  explicit ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// The folded core graph is not a covering: the subgroup has infinite index.
class InfiniteIndex : public Error {
public:
  using Error::Error;
};

/// Permutation data whose action on the vertex set is not transitive.
class NotTransitive : public Error {
public:
  using Error::Error;
};

/// Residue requested at a point that is not a root of the denominator.
class NotAPole : public Error {
public:
  using Error::Error;
};

/// Residue requested at a pole of order greater than one.
class NotSimple : public Error {
public:
  using Error::Error;
};

/// A theorem checker was handed a family of cosets that is not a partition.
class NotAPartition : public Error {
public:
  using Error::Error;
};

/// Brute-force oracle refused a request beyond its hard size cap.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

}  // namespace fgc

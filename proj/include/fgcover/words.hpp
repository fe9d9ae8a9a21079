#pragma once

// Words over the free group F_n and the free monoid on its generators.
//
// Generators are numbered 1..n. Text syntax: lowercase a, b, c, ... are the
// generators 1, 2, 3, ... and uppercase A, B, C, ... their inverses; the
// empty string is the identity. Ranks above 26 use the numbered form
// x1 x2 ... (generators) and X1 X2 ... (inverses).

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fgc {

class Alphabet {
public:
  explicit Alphabet(int rank);

  int rank() const noexcept { return rank_; }
  bool operator==(const Alphabet&) const = default;

private:
  int rank_;
};

struct Letter {
  int generator = 1;  // 1..rank
  int sign = +1;      // +1 or -1

  Letter inverse() const noexcept { return {generator, -sign}; }
  bool operator==(const Letter&) const = default;

  // Letter order a < A < b < B < ...
  int order_key() const noexcept { return 2 * (generator - 1) + (sign < 0 ? 1 : 0); }
};

/// A word over the generators only.
class PositiveWord {
public:
  PositiveWord() = default;
  explicit PositiveWord(std::vector<int> generators) : generators_(std::move(generators)) {}

  std::span<const int> generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return generators_.size(); }
  bool empty() const noexcept { return generators_.empty(); }

  PositiveWord operator*(const PositiveWord& rhs) const;

  bool operator==(const PositiveWord&) const = default;
  std::strong_ordering operator<=>(const PositiveWord& rhs) const;  // shortlex

private:
  std::vector<int> generators_;
};

/// A freely reduced element of F_n. Only `reduce` and the products below
/// create values, so every GroupWord is reduced.
class GroupWord {
public:
  GroupWord() = default;

  static GroupWord from_positive(const PositiveWord& w);

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  bool is_positive() const noexcept;

  GroupWord inverse() const;
  GroupWord operator*(const GroupWord& rhs) const;

  bool operator==(const GroupWord&) const = default;
  std::strong_ordering operator<=>(const GroupWord& rhs) const;  // shortlex

private:
  friend GroupWord reduce(std::span<const Letter> raw, int rank);
  std::vector<Letter> letters_;
};

/// Freely reduces `raw`. Throws InvalidLetter for generators outside 1..rank
/// or signs other than +-1.
GroupWord reduce(std::span<const Letter> raw, int rank);

/// Parses the text syntax described above and reduces the result.
/// Throws ParseError for bad characters and InvalidLetter for out-of-range
/// generators.
GroupWord parse_word(std::string_view text, int rank);

std::string format_word(const GroupWord& w, int rank);
std::string format_word(const PositiveWord& w, int rank);

/// All n^k positive words of length k in lexicographic order.
std::vector<PositiveWord> enumerate_positive(int rank, std::size_t length);

/// All reduced words of length <= max_length in shortlex order with letters
/// ordered a < A < b < B < ...
std::vector<GroupWord> enumerate_reduced(int rank, std::size_t max_length);

}  // namespace fgc

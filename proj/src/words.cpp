#include "fgcover/words.hpp"

#include <algorithm>
#include <cctype>

#include "fgcover/error.hpp"

namespace fgc {

Alphabet::Alphabet(int rank) : rank_(rank) {
  if (rank < 1) throw std::invalid_argument("alphabet rank must be >= 1");
}

PositiveWord PositiveWord::operator*(const PositiveWord& rhs) const {
  std::vector<int> out = generators_;
  out.insert(out.end(), rhs.generators_.begin(), rhs.generators_.end());
  return PositiveWord(std::move(out));
}

std::strong_ordering PositiveWord::operator<=>(const PositiveWord& rhs) const {
  if (auto c = size() <=> rhs.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(generators_.begin(), generators_.end(),
                                                rhs.generators_.begin(), rhs.generators_.end());
}

GroupWord GroupWord::from_positive(const PositiveWord& w) {
  GroupWord out;
  out.letters_.reserve(w.size());
  for (int g : w.generators()) out.letters_.push_back({g, +1});
  return out;
}

bool GroupWord::is_positive() const noexcept {
  return std::all_of(letters_.begin(), letters_.end(), [](const Letter& l) { return l.sign > 0; });
}

GroupWord GroupWord::inverse() const {
  GroupWord out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(it->inverse());
  return out;
}

GroupWord GroupWord::operator*(const GroupWord& rhs) const {
  GroupWord out = *this;
  for (const Letter& l : rhs.letters_) {
    if (!out.letters_.empty() && out.letters_.back() == l.inverse())
      out.letters_.pop_back();
    else
      out.letters_.push_back(l);
  }
  return out;
}

std::strong_ordering GroupWord::operator<=>(const GroupWord& rhs) const {
  if (auto c = size() <=> rhs.size(); c != 0) return c;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (auto c = letters_[i].order_key() <=> rhs.letters_[i].order_key(); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

GroupWord reduce(std::span<const Letter> raw, int rank) {
  GroupWord out;
  for (const Letter& l : raw) {
    if (l.generator < 1 || l.generator > rank)
      throw InvalidLetter("generator " + std::to_string(l.generator) + " outside 1.." +
                          std::to_string(rank));
    if (l.sign != 1 && l.sign != -1) throw InvalidLetter("letter sign must be +1 or -1");
    if (!out.letters_.empty() && out.letters_.back() == l.inverse())
      out.letters_.pop_back();
    else
      out.letters_.push_back(l);
  }
  return out;
}

GroupWord parse_word(std::string_view text, int rank) {
  std::vector<Letter> raw;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if ((c == 'x' || c == 'X') && i + 1 < text.size() &&
        std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
      std::size_t j = i + 1;
      long value = 0;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
        value = value * 10 + (text[j] - '0');
        if (value > 1'000'000) throw InvalidLetter("generator index too large in '" + std::string(text) + "'");
        ++j;
      }
      raw.push_back({static_cast<int>(value), c == 'x' ? +1 : -1});
      i = j;
    } else if (c >= 'a' && c <= 'z') {
      raw.push_back({c - 'a' + 1, +1});
      ++i;
    } else if (c >= 'A' && c <= 'Z') {
      raw.push_back({c - 'A' + 1, -1});
      ++i;
    } else {
      throw ParseError("unexpected character '" + std::string(1, c) + "' at offset " + std::to_string(i) +
                       " in word '" + std::string(text) + "'");
    }
  }
  return reduce(raw, rank);
}

namespace {

void append_letter(std::string& out, int generator, bool inverse, int rank) {
  if (rank <= 26) {
    out.push_back(static_cast<char>((inverse ? 'A' : 'a') + generator - 1));
  } else {
    out.push_back(inverse ? 'X' : 'x');
    out += std::to_string(generator);
  }
}

}  // namespace

std::string format_word(const GroupWord& w, int rank) {
  std::string out;
  for (const Letter& l : w.letters()) append_letter(out, l.generator, l.sign < 0, rank);
  return out;
}

std::string format_word(const PositiveWord& w, int rank) {
  std::string out;
  for (int g : w.generators()) append_letter(out, g, false, rank);
  return out;
}

std::vector<PositiveWord> enumerate_positive(int rank, std::size_t length) {
  Alphabet alphabet(rank);
  std::vector<PositiveWord> out;
  std::vector<int> digits(length, 1);
  while (true) {
    out.emplace_back(digits);
    // odometer increment, last position fastest
    std::size_t pos = length;
    while (pos > 0 && digits[pos - 1] == rank) {
      digits[pos - 1] = 1;
      --pos;
    }
    if (pos == 0) break;
    ++digits[pos - 1];
  }
  return out;
}

std::vector<GroupWord> enumerate_reduced(int rank, std::size_t max_length) {
  Alphabet alphabet(rank);
  std::vector<Letter> letters;
  for (int g = 1; g <= rank; ++g) {
    letters.push_back({g, +1});
    letters.push_back({g, -1});
  }
  std::vector<GroupWord> out{GroupWord{}};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (const Letter& l : letters) {
        const GroupWord& base = out[i];
        if (!base.empty() && base.letters().back() == l.inverse()) continue;
        std::vector<Letter> raw(base.letters().begin(), base.letters().end());
        raw.push_back(l);
        out.push_back(reduce(raw, rank));
      }
    }
    level_begin = level_end;
  }
  return out;
}

}  // namespace fgc

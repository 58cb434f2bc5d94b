#include "trilink/braid.hpp"

#include <charconv>
#include <cstdlib>
#include <sstream>

#include "trilink/errors.hpp"

namespace trilink {

namespace {

void check_strands(int strands) {
  if (strands < 2) {
    throw precondition_error("braid words need at least 2 strands, got " + std::to_string(strands));
  }
}

void check_letter(const Letter& letter, int strands) {
  if (letter.index < 1 || letter.index > strands - 1) {
    throw precondition_error("generator index " + std::to_string(letter.index) +
                             " outside 1.." + std::to_string(strands - 1));
  }
  if (letter.sign != 1 && letter.sign != -1) {
    throw precondition_error("letter sign must be +1 or -1");
  }
}

Letter letter_from_signed(int value) {
  return {std::abs(value), value > 0 ? 1 : -1};
}

}  // namespace

BraidWord::BraidWord(int strands) : strands_(strands) { check_strands(strands); }

BraidWord::BraidWord(int strands, std::vector<Letter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  check_strands(strands);
  for (const auto& letter : letters_) {
    check_letter(letter, strands);
  }
}

BraidWord BraidWord::from_signed(int strands, std::span<const int> values) {
  std::vector<Letter> letters;
  letters.reserve(values.size());
  for (int v : values) {
    if (v == 0) {
      throw precondition_error("0 is not a generator");
    }
    letters.push_back(letter_from_signed(v));
  }
  return BraidWord(strands, std::move(letters));
}

std::vector<int> BraidWord::to_signed() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (const auto& letter : letters_) {
    out.push_back(letter.to_signed());
  }
  return out;
}

BraidWord BraidWord::slice(std::size_t first, std::size_t count) const {
  if (first > letters_.size() || count > letters_.size() - first) {
    throw precondition_error("slice out of range");
  }
  return BraidWord(strands_, std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(first),
                                                 letters_.begin() + static_cast<std::ptrdiff_t>(first + count)));
}

BraidWord parse_word(std::string_view text, int strands) {
  if (strands < 2) {
    throw parse_error("strand count must be at least 2");
  }
  std::vector<Letter> letters;
  std::size_t i = 0;
  const auto is_sep = [](char c) {
    return c == ' ' || c == ',' || c == '\t' || c == '\n' || c == '\r';
  };
  while (i < text.size()) {
    if (is_sep(text[i])) {
      ++i;
      continue;
    }
    std::size_t end = i;
    while (end < text.size() && !is_sep(text[end])) {
      ++end;
    }
    const std::string_view token = text.substr(i, end - i);
    std::string_view digits = token;
    if (!digits.empty() && digits.front() == '+') {
      digits.remove_prefix(1);
    }
    int value = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
      throw parse_error("malformed token '" + std::string(token) + "'");
    }
    if (value == 0) {
      throw parse_error("0 is not a generator");
    }
    if (std::abs(value) > strands - 1) {
      throw parse_error("generator " + std::string(token) + " out of range for " +
                        std::to_string(strands) + " strands (|k| <= " +
                        std::to_string(strands - 1) + ")");
    }
    letters.push_back(letter_from_signed(value));
    i = end;
  }
  return BraidWord(strands, std::move(letters));
}

std::string format_word(const BraidWord& word) {
  std::ostringstream out;
  bool first = true;
  for (const auto& letter : word.letters()) {
    if (!first) {
      out << ' ';
    }
    out << letter.to_signed();
    first = false;
  }
  return out.str();
}

BraidWord compose(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) {
    throw precondition_error("cannot compose words on " + std::to_string(u.strands()) + " and " +
                             std::to_string(v.strands()) + " strands");
  }
  std::vector<Letter> letters = u.letters();
  letters.insert(letters.end(), v.letters().begin(), v.letters().end());
  return BraidWord(u.strands(), std::move(letters));
}

BraidWord operator*(const BraidWord& u, const BraidWord& v) { return compose(u, v); }

BraidWord inverse(const BraidWord& u) {
  std::vector<Letter> letters;
  letters.reserve(u.length());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) {
    letters.push_back(it->inverse());
  }
  return BraidWord(u.strands(), std::move(letters));
}

BraidWord power(const BraidWord& u, int exponent) {
  const BraidWord base = exponent < 0 ? inverse(u) : u;
  const int times = std::abs(exponent);
  std::vector<Letter> letters;
  letters.reserve(base.length() * static_cast<std::size_t>(times));
  for (int t = 0; t < times; ++t) {
    letters.insert(letters.end(), base.letters().begin(), base.letters().end());
  }
  return BraidWord(u.strands(), std::move(letters));
}

BraidWord ascending_cycle(int strands) {
  check_strands(strands);
  std::vector<Letter> letters;
  for (int i = 1; i < strands; ++i) {
    letters.push_back({i, 1});
  }
  return BraidWord(strands, std::move(letters));
}

BraidWord full_twist(int strands, int n) {
  return power(ascending_cycle(strands), strands * n);
}

}  // namespace trilink

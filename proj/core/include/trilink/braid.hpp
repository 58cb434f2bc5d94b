#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace trilink {

/// One standard generator sigma_index^sign.
struct Letter {
  int index = 1;
  int sign = 1;

  [[nodiscard]] constexpr Letter inverse() const noexcept { return {index, -sign}; }
  [[nodiscard]] constexpr int to_signed() const noexcept { return sign * index; }
  [[nodiscard]] constexpr bool positive() const noexcept { return sign > 0; }

  friend constexpr bool operator==(Letter, Letter) = default;
};

/// A word in sigma_1^{+-1} .. sigma_{m-1}^{+-1} on an explicit number of
/// strands. Words are immutable values; no free cancellation ever happens
/// implicitly.
class BraidWord {
 public:
  /// The identity word on `strands` strands. Throws precondition_error if
  /// strands < 2.
  explicit BraidWord(int strands);
  BraidWord(int strands, std::vector<Letter> letters);

  /// Builds a word from the signed-integer form (k -> sigma_k, -k -> sigma_k^-1).
  static BraidWord from_signed(int strands, std::span<const int> values);

  [[nodiscard]] int strands() const noexcept { return strands_; }
  [[nodiscard]] std::size_t length() const noexcept { return letters_.size(); }
  [[nodiscard]] bool empty() const noexcept { return letters_.empty(); }
  [[nodiscard]] const std::vector<Letter>& letters() const noexcept { return letters_; }
  [[nodiscard]] const Letter& operator[](std::size_t i) const { return letters_[i]; }

  [[nodiscard]] std::vector<int> to_signed() const;

  /// Letters [first, first + count) as a word on the same strands.
  [[nodiscard]] BraidWord slice(std::size_t first, std::size_t count) const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<Letter> letters_;
};

/// Parses whitespace- or comma-separated nonzero integers. Throws parse_error
/// on malformed or zero tokens and on indices outside 1..strands-1.
BraidWord parse_word(std::string_view text, int strands);

/// Signed-integer text form, single spaces; parse_word(format_word(w)) == w.
std::string format_word(const BraidWord& word);

BraidWord compose(const BraidWord& u, const BraidWord& v);
BraidWord operator*(const BraidWord& u, const BraidWord& v);
BraidWord inverse(const BraidWord& u);

/// u^exponent; negative exponents repeat inverse(u).
BraidWord power(const BraidWord& u, int exponent);

/// ((sigma_1 ... sigma_{m-1})^m)^n, the inverse word for n < 0.
BraidWord full_twist(int strands, int n = 1);

/// sigma_1 sigma_2 ... sigma_{m-1}
BraidWord ascending_cycle(int strands);

}  // namespace trilink

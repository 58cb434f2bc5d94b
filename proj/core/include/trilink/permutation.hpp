#pragma once

#include <span>
#include <string>
#include <vector>

#include "trilink/braid.hpp"

namespace trilink {

/// A permutation of {1..m}. For a braid word, image(p) is the final position
/// of the strand that starts at position p.
class Permutation {
 public:
  explicit Permutation(int size);  // identity

  /// From 1-based images; throws precondition_error unless a bijection.
  static Permutation from_images(std::span<const int> images);
  /// The transposition (a b).
  static Permutation transposition(int size, int a, int b);

  [[nodiscard]] int size() const noexcept { return static_cast<int>(images_.size()); }
  [[nodiscard]] int operator()(int p) const { return images_.at(p - 1); }
  [[nodiscard]] std::vector<int> images() const { return images_; }

  /// Apply *this first, then `next`.
  [[nodiscard]] Permutation then(const Permutation& next) const;
  [[nodiscard]] Permutation inverse() const;
  [[nodiscard]] bool is_identity() const noexcept;

  /// Cycle notation, e.g. "(1 3)" or "e".
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Left-to-right product of the transpositions (l l+1), one per letter,
/// ignoring signs.
Permutation permutation_of(const BraidWord& word);

bool is_pure(const BraidWord& word);

}  // namespace trilink

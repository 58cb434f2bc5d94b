#pragma once

#include <vector>

#include "trilink/braid.hpp"

namespace trilink {

/// A freely reduced word in x_1..x_m: +g stands for x_g, -g for x_g^-1.
class FreeWord {
 public:
  FreeWord() = default;
  static FreeWord generator(int g) { return FreeWord{g}; }

  [[nodiscard]] const std::vector<int>& symbols() const noexcept { return symbols_; }
  [[nodiscard]] std::size_t length() const noexcept { return symbols_.size(); }

  /// Appends with free reduction at the seam.
  FreeWord& append(const FreeWord& tail);
  [[nodiscard]] FreeWord inverse() const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  explicit FreeWord(int g) : symbols_{g} {}
  std::vector<int> symbols_;
};

/// The images of x_1..x_m under the Artin automorphism of the free group
/// induced by a braid word:
///   sigma_i:      x_i -> x_i x_{i+1} x_i^-1,  x_{i+1} -> x_i
///   sigma_i^-1:   x_i -> x_{i+1},             x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
/// The action is faithful, so two words are the same braid iff their actions
/// agree on every generator.
class ArtinAction {
 public:
  explicit ArtinAction(const BraidWord& word);

  [[nodiscard]] const std::vector<FreeWord>& images() const noexcept { return images_; }
  [[nodiscard]] bool is_identity() const;

  friend bool operator==(const ArtinAction&, const ArtinAction&) = default;

 private:
  std::vector<FreeWord> images_;
};

bool artin_is_identity(const BraidWord& word);

/// Element equality in the braid group. Throws precondition_error on
/// mismatched strand counts.
bool braid_equal(const BraidWord& u, const BraidWord& v);

/// True iff a b a^-1 b^-1 is the identity braid.
bool commutes(const BraidWord& a, const BraidWord& b);

}  // namespace trilink

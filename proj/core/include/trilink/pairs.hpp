#pragma once

#include <utility>

#include "trilink/braid.hpp"

namespace trilink {

/// Two pure braids on the same strands whose commutation has been certified
/// by the word problem. Only obtainable through certify().
class CommutingPair {
 public:
  /// Throws precondition_error if the words are not pure or have different
  /// strand counts, not_commuting_error if a b != b a.
  static CommutingPair certify(BraidWord a, BraidWord b);

  [[nodiscard]] const BraidWord& a() const noexcept { return a_; }
  [[nodiscard]] const BraidWord& b() const noexcept { return b_; }
  [[nodiscard]] int strands() const noexcept { return a_.strands(); }

 private:
  CommutingPair(BraidWord a, BraidWord b) : a_(std::move(a)), b_(std::move(b)) {}
  BraidWord a_;
  BraidWord b_;
};

/// A commuting pair of pure 3-braids presented as
///   a = Delta^twists_a * w^powers_a,   b = Delta^twists_b * w^powers_b.
/// Delta is central, so any pure w gives a commuting pair.
struct StructuredPair3 {
  BraidWord w{3};
  int twists_a = 0;   // k1
  int powers_a = 0;   // l1
  int twists_b = 0;   // k2
  int powers_b = 0;   // l2

  /// Throws precondition_error unless w is a pure 3-strand word.
  void validate() const;
  [[nodiscard]] BraidWord a() const;
  [[nodiscard]] BraidWord b() const;
};

CommutingPair expand_structured(const StructuredPair3& pair);

}  // namespace trilink

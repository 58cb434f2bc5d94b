#pragma once

#include <cstddef>
#include <string>

#include "trilink/braid.hpp"
#include "trilink/pairs.hpp"
#include "trilink/rewriting.hpp"
#include "trilink/tensor.hpp"

namespace trilink {

/// A constructed sequence with its declared endpoint and extracted data.
struct SequenceBundle {
  TransformationSequence seq;
  BraidWord target;
  std::size_t r3_count = 0;
  TripleLinkingTensor tensor;  // labels are start positions
  std::string provenance;
};

/// Records moves against a live word. Fragments built on their own are
/// spliced in at an offset; the window they start from must match.
class SequenceBuilder {
 public:
  explicit SequenceBuilder(BraidWord start);

  [[nodiscard]] const BraidWord& word() const noexcept { return word_; }
  [[nodiscard]] const TransformationSequence& sequence() const noexcept { return seq_; }

  void apply(const Move& move);
  /// Replays `fragment` with positions shifted by `offset` letters. Throws
  /// std::logic_error if the window at offset is not fragment.start.
  void splice(const TransformationSequence& fragment, std::size_t offset);

  /// Far-commutes the window starting at `offset` into `target`. Throws
  /// std::logic_error if the two are not related by far commutations.
  void commute_into(const BraidWord& target, std::size_t offset = 0);

  /// Rewrites the window [offset, offset + length) into `target` with pair
  /// deletions followed by pair insertions. Both must have the same free
  /// reduction.
  void free_bridge(std::size_t offset, std::size_t length, const BraidWord& target);

  [[nodiscard]] SequenceBundle finish(std::string provenance) const;

 private:
  BraidWord word_;
  TransformationSequence seq_;
};

/// sigma_j (sigma_1 ... sigma_{m-1}) -> (sigma_1 ... sigma_{m-1}) sigma_{j-1},
/// one R3. Requires 2 <= j <= m-1.
SequenceBundle seq_slide(int j, int m);

/// sigma_1 (sigma_1 ... sigma_{m-1})^2 -> (sigma_1 ... sigma_{m-1})^2 sigma_{m-1},
/// m-2 R3s. Requires m >= 3.
SequenceBundle seq_wrap(int m);

/// sigma_i^sign Delta -> Delta sigma_i^sign with 2(m-2) R3s. Negative letters
/// are conjugated through: insert sigma_i sigma_i^-1 at the end, run the
/// positive sequence backwards on the inner Delta sigma_i, delete the
/// leading sigma_i^-1 sigma_i.
SequenceBundle seq_sigma_past_delta(int i, int sign, int m);

/// letter Delta^twist -> Delta^twist letter for twist = +1 or -1. Crossing
/// Delta^-1 inserts Delta^-1 Delta in front, runs the Delta crossing
/// backwards and deletes Delta Delta^-1; the R3 count is still 2(m-2).
SequenceBundle seq_letter_past_twist(Letter letter, int twist, int m);

/// u Delta^k -> Delta^k u, moving u's letters right one at a time, last
/// letter first, through each twist. Works for any sign of k.
SequenceBundle seq_word_past_twists(const BraidWord& u, int k);

/// b Delta^n -> Delta^n b with 2(m-2) n len(b) R3s. Requires n >= 0 and
/// m >= 3.
SequenceBundle seq_b_delta_n(const BraidWord& b, int n);

/// a b -> b a for a = Delta^k1 w^l1, b = Delta^k2 w^l2:
///   Delta^k1 (w^l1 Delta^k2) w^l2 -> Delta^k1 Delta^k2 w^l1 w^l2
///   (regroup)                      -> Delta^k2 (Delta^k1 w^l2) w^l1
///                                  -> Delta^k2 w^l2 Delta^k1 w^l1
SequenceBundle seq_structured3(const StructuredPair3& pair);

}  // namespace trilink

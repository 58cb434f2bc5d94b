#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trilink/braid.hpp"
#include "trilink/pairs.hpp"
#include "trilink/tensor.hpp"

namespace trilink {

enum class MoveKind {
  insert_pair,  // w w' -> w s s^-1 w'
  delete_pair,  // w s s^-1 w' -> w w'
  far_commute,  // s_i s_j -> s_j s_i, |i - j| > 1
  r3,           // s_i s_j s_i -> s_j s_i s_j, |i - j| = 1, all positive
};

std::string_view to_string(MoveKind kind);
std::optional<MoveKind> move_kind_from_string(std::string_view name);

/// A single rewriting step. `pos` is the 1-based index of the first letter
/// the move touches (for insertions: where the first inserted letter lands,
/// 1..length+1).
struct Move {
  MoveKind kind = MoveKind::far_commute;
  std::size_t pos = 1;
  Letter inserted{};  // insert_pair only: the pair is inserted, inserted^-1

  static Move insert(std::size_t pos, Letter first) { return {MoveKind::insert_pair, pos, first}; }
  static Move erase(std::size_t pos) { return {MoveKind::delete_pair, pos, {}}; }
  static Move commute(std::size_t pos) { return {MoveKind::far_commute, pos, {}}; }
  static Move reidemeister3(std::size_t pos) { return {MoveKind::r3, pos, {}}; }

  friend bool operator==(const Move&, const Move&) = default;
};

/// Why `move` cannot be applied to `word`, or nullopt if it can.
std::optional<std::string> move_obstruction(const BraidWord& word, const Move& move);

/// Throws move_error on a pattern mismatch or out-of-range position.
BraidWord apply_move(const BraidWord& word, const Move& move);

/// A start word and the moves applied to it, in order.
struct TransformationSequence {
  BraidWord start;
  std::vector<Move> moves;

  /// start followed by the word after each move. Throws move_error.
  [[nodiscard]] std::vector<BraidWord> words() const;
  [[nodiscard]] BraidWord final_word() const;
  [[nodiscard]] std::size_t r3_count() const noexcept;
};

/// The sequence run backwards: starts at the final word, ends at start.
TransformationSequence reversed(const TransformationSequence& seq);

struct StepReport {
  enum class Status { ok, inapplicable, skipped };

  std::size_t step = 0;  // 1-based
  Status status = Status::ok;
  std::string message;
  // Filled only by audited validation.
  std::optional<bool> braid_equal_to_start;
};

struct ValidationReport {
  std::vector<StepReport> steps;
  std::optional<BraidWord> final_word;  // empty if replay stopped early
  bool endpoint_matches = false;
  bool audited = false;

  [[nodiscard]] bool all_moves_applicable() const;
  [[nodiscard]] bool audit_passed() const;
  [[nodiscard]] bool valid() const;
};

/// Replays every move, checks the endpoint against `target` letter by
/// letter, and with `audit` also checks each intermediate word is the same
/// braid as the start. Never throws for bad moves; failures are reported.
ValidationReport validate_sequence(const TransformationSequence& seq, const BraidWord& target,
                                   bool audit = false);

/// One triple point read off an R3 move.
struct TriplePointRecord {
  int sign = 1;
  Triple type;                 // (top, middle, bottom) component labels
  std::size_t move_index = 0;  // 0-based index into seq.moves
};

/// One record per R3 move. For w s_i s_j s_i w' -> w s_j s_i s_j w' with
/// k = min(i, j) and tau the inverse of the permutation of w, the sign is +1
/// when i < j and -1 otherwise, and the type is (tau(k+2), tau(k+1), tau(k)).
/// Components are labelled by start position. Throws move_error if the
/// sequence does not replay.
std::vector<TriplePointRecord> triple_points(const TransformationSequence& seq);

struct SequenceTlk {
  TripleLinkingTensor tensor;
  std::size_t r3_count = 0;
};

/// Per-type signed sums of triple_points(seq).
SequenceTlk tlk_from_sequence(const TransformationSequence& seq);

/// As above, after checking seq runs from a*b to b*a (endpoint_error
/// otherwise).
SequenceTlk tlk_from_sequence(const TransformationSequence& seq, const CommutingPair& pair);

}  // namespace trilink

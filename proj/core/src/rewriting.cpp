#include "trilink/rewriting.hpp"

#include <cstdlib>
#include <numeric>

#include "trilink/errors.hpp"
#include "trilink/word_problem.hpp"

namespace trilink {

std::string_view to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::insert_pair:
      return "insert";
    case MoveKind::delete_pair:
      return "delete";
    case MoveKind::far_commute:
      return "commute";
    case MoveKind::r3:
      return "r3";
  }
  return "?";
}

std::optional<MoveKind> move_kind_from_string(std::string_view name) {
  if (name == "insert") return MoveKind::insert_pair;
  if (name == "delete") return MoveKind::delete_pair;
  if (name == "commute") return MoveKind::far_commute;
  if (name == "r3") return MoveKind::r3;
  return std::nullopt;
}

namespace {

std::string where(const Move& move) {
  return std::string(to_string(move.kind)) + " at " + std::to_string(move.pos);
}

// Letters the move reads, starting at pos.
std::size_t span_of(MoveKind kind) {
  switch (kind) {
    case MoveKind::insert_pair:
      return 0;
    case MoveKind::delete_pair:
    case MoveKind::far_commute:
      return 2;
    case MoveKind::r3:
      return 3;
  }
  return 0;
}

}  // namespace

std::optional<std::string> move_obstruction(const BraidWord& word, const Move& move) {
  const std::size_t n = word.length();
  if (move.pos < 1) {
    return where(move) + ": positions are 1-based";
  }
  if (move.kind == MoveKind::insert_pair) {
    if (move.pos > n + 1) {
      return where(move) + ": position past end of word of length " + std::to_string(n);
    }
    const Letter& s = move.inserted;
    if (s.index < 1 || s.index > word.strands() - 1 || (s.sign != 1 && s.sign != -1)) {
      return where(move) + ": inserted generator out of range";
    }
    return std::nullopt;
  }
  const std::size_t span = span_of(move.kind);
  if (move.pos + span - 1 > n) {
    return where(move) + ": needs " + std::to_string(span) + " letters, word has " + std::to_string(n);
  }
  const std::size_t p = move.pos - 1;
  switch (move.kind) {
    case MoveKind::delete_pair:
      if (word[p + 1] != word[p].inverse()) {
        return where(move) + ": letters do not cancel";
      }
      break;
    case MoveKind::far_commute:
      if (std::abs(word[p].index - word[p + 1].index) <= 1) {
        return where(move) + ": generators " + std::to_string(word[p].index) + " and " +
               std::to_string(word[p + 1].index) + " are not far apart";
      }
      break;
    case MoveKind::r3: {
      const Letter& x = word[p];
      const Letter& y = word[p + 1];
      const Letter& z = word[p + 2];
      if (!x.positive() || !y.positive() || !z.positive()) {
        return where(move) + ": Reidemeister III needs three positive letters";
      }
      if (x.index != z.index || std::abs(x.index - y.index) != 1) {
        return where(move) + ": letters do not read s_i s_j s_i with |i - j| = 1";
      }
      break;
    }
    case MoveKind::insert_pair:
      break;
  }
  return std::nullopt;
}

BraidWord apply_move(const BraidWord& word, const Move& move) {
  if (auto why = move_obstruction(word, move)) {
    throw move_error(*why);
  }
  std::vector<Letter> letters = word.letters();
  const auto p = static_cast<std::ptrdiff_t>(move.pos - 1);
  switch (move.kind) {
    case MoveKind::insert_pair:
      letters.insert(letters.begin() + p, {move.inserted, move.inserted.inverse()});
      break;
    case MoveKind::delete_pair:
      letters.erase(letters.begin() + p, letters.begin() + p + 2);
      break;
    case MoveKind::far_commute:
      std::swap(letters[static_cast<std::size_t>(p)], letters[static_cast<std::size_t>(p + 1)]);
      break;
    case MoveKind::r3: {
      const auto q = static_cast<std::size_t>(p);
      const Letter outer = letters[q];
      const Letter middle = letters[q + 1];
      letters[q] = middle;
      letters[q + 1] = outer;
      letters[q + 2] = middle;
      break;
    }
  }
  return BraidWord(word.strands(), std::move(letters));
}

std::vector<BraidWord> TransformationSequence::words() const {
  std::vector<BraidWord> out;
  out.reserve(moves.size() + 1);
  out.push_back(start);
  for (const auto& move : moves) {
    out.push_back(apply_move(out.back(), move));
  }
  return out;
}

BraidWord TransformationSequence::final_word() const {
  BraidWord word = start;
  for (const auto& move : moves) {
    word = apply_move(word, move);
  }
  return word;
}

std::size_t TransformationSequence::r3_count() const noexcept {
  std::size_t count = 0;
  for (const auto& move : moves) {
    count += move.kind == MoveKind::r3 ? 1 : 0;
  }
  return count;
}

TransformationSequence reversed(const TransformationSequence& seq) {
  const auto words = seq.words();
  TransformationSequence out{words.back(), {}};
  out.moves.reserve(seq.moves.size());
  for (std::size_t t = seq.moves.size(); t-- > 0;) {
    const Move& move = seq.moves[t];
    switch (move.kind) {
      case MoveKind::insert_pair:
        out.moves.push_back(Move::erase(move.pos));
        break;
      case MoveKind::delete_pair:
        out.moves.push_back(Move::insert(move.pos, words[t][move.pos - 1]));
        break;
      case MoveKind::far_commute:
      case MoveKind::r3:
        out.moves.push_back(move);
        break;
    }
  }
  return out;
}

bool ValidationReport::all_moves_applicable() const {
  for (const auto& step : steps) {
    if (step.status != StepReport::Status::ok) {
      return false;
    }
  }
  return true;
}

bool ValidationReport::audit_passed() const {
  if (!audited) {
    return true;
  }
  for (const auto& step : steps) {
    if (step.braid_equal_to_start != true) {
      return false;
    }
  }
  return true;
}

bool ValidationReport::valid() const { return all_moves_applicable() && endpoint_matches && audit_passed(); }

ValidationReport validate_sequence(const TransformationSequence& seq, const BraidWord& target, bool audit) {
  ValidationReport report;
  report.audited = audit;
  std::optional<ArtinAction> start_action;
  if (audit) {
    start_action.emplace(seq.start);
  }
  BraidWord word = seq.start;
  bool stopped = false;
  for (std::size_t t = 0; t < seq.moves.size(); ++t) {
    StepReport step;
    step.step = t + 1;
    if (stopped) {
      step.status = StepReport::Status::skipped;
      step.message = "not replayed after an earlier failure";
    } else if (auto why = move_obstruction(word, seq.moves[t])) {
      step.status = StepReport::Status::inapplicable;
      step.message = *why;
      stopped = true;
    } else {
      word = apply_move(word, seq.moves[t]);
      if (audit) {
        step.braid_equal_to_start = ArtinAction(word) == *start_action;
      }
    }
    report.steps.push_back(std::move(step));
  }
  if (!stopped) {
    report.endpoint_matches = word == target;
    report.final_word = std::move(word);
  }
  return report;
}

std::vector<TriplePointRecord> triple_points(const TransformationSequence& seq) {
  std::vector<TriplePointRecord> records;
  BraidWord word = seq.start;
  const int m = word.strands();
  for (std::size_t t = 0; t < seq.moves.size(); ++t) {
    const Move& move = seq.moves[t];
    if (move.kind == MoveKind::r3) {
      if (auto why = move_obstruction(word, move)) {
        throw move_error("step " + std::to_string(t + 1) + ": " + *why);
      }
      // at[pos] = label (start position) of the strand at pos after the
      // prefix, i.e. tau = inverse of the prefix permutation.
      std::vector<int> at(static_cast<std::size_t>(m));
      std::iota(at.begin(), at.end(), 1);
      for (std::size_t p = 0; p + 1 < move.pos; ++p) {
        const int l = word[p].index;
        std::swap(at[static_cast<std::size_t>(l - 1)], at[static_cast<std::size_t>(l)]);
      }
      const int i = word[move.pos - 1].index;
      const int j = word[move.pos].index;
      const int k = std::min(i, j);
      const auto tau = [&at](int pos) { return at[static_cast<std::size_t>(pos - 1)]; };
      records.push_back({i < j ? 1 : -1, Triple{tau(k + 2), tau(k + 1), tau(k)}, t});
    }
    word = apply_move(word, move);
  }
  return records;
}

SequenceTlk tlk_from_sequence(const TransformationSequence& seq) {
  SequenceTlk out{TripleLinkingTensor(seq.start.strands()), 0};
  for (const auto& record : triple_points(seq)) {
    out.tensor.add(record.type, record.sign);
    ++out.r3_count;
  }
  return out;
}

SequenceTlk tlk_from_sequence(const TransformationSequence& seq, const CommutingPair& pair) {
  if (seq.start != pair.a() * pair.b()) {
    throw endpoint_error("sequence does not start at a*b");
  }
  if (seq.final_word() != pair.b() * pair.a()) {
    throw endpoint_error("sequence does not end at b*a");
  }
  return tlk_from_sequence(seq);
}

}  // namespace trilink

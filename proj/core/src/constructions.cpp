#include "trilink/constructions.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include "trilink/errors.hpp"

namespace trilink {

SequenceBuilder::SequenceBuilder(BraidWord start) : word_(start), seq_{std::move(start), {}} {}

void SequenceBuilder::apply(const Move& move) {
  word_ = apply_move(word_, move);
  seq_.moves.push_back(move);
}

void SequenceBuilder::splice(const TransformationSequence& fragment, std::size_t offset) {
  const std::size_t len = fragment.start.length();
  if (offset + len > word_.length() ||
      !std::equal(fragment.start.letters().begin(), fragment.start.letters().end(),
                  word_.letters().begin() + static_cast<std::ptrdiff_t>(offset))) {
    throw std::logic_error("fragment start '" + format_word(fragment.start) + "' not found at offset " +
                           std::to_string(offset) + " of '" + format_word(word_) + "'");
  }
  for (Move move : fragment.moves) {
    move.pos += offset;
    apply(move);
  }
}

void SequenceBuilder::commute_into(const BraidWord& target, std::size_t offset) {
  const std::size_t len = target.length();
  if (offset + len > word_.length()) {
    throw std::logic_error("commute_into: window past end of word");
  }
  // Work on a copy so a failed rewrite leaves the builder untouched.
  SequenceBuilder scratch = *this;
  for (std::size_t p = 0; p < len; ++p) {
    const Letter want = target[p];
    std::size_t q = p;
    while (q < len && scratch.word_[offset + q] != want) {
      ++q;
    }
    if (q == len) {
      throw std::logic_error("commute_into: '" + format_word(target) + "' is not a rearrangement of the window");
    }
    for (std::size_t r = q; r > p; --r) {
      // letters at window indices r-1, r sit at 1-based position offset + r
      const Move move = Move::commute(offset + r);
      if (move_obstruction(scratch.word_, move)) {
        throw std::logic_error("commute_into: '" + format_word(target) +
                               "' needs a swap of adjacent generators");
      }
      scratch.apply(move);
    }
  }
  *this = std::move(scratch);
}

namespace {

// Delete-pair moves freely reducing `word`, leftmost-first.
TransformationSequence free_reduction(const BraidWord& word) {
  TransformationSequence seq{word, {}};
  std::vector<Letter> stack;
  for (const auto& letter : word.letters()) {
    if (!stack.empty() && stack.back() == letter.inverse()) {
      seq.moves.push_back(Move::erase(stack.size()));
      stack.pop_back();
    } else {
      stack.push_back(letter);
    }
  }
  return seq;
}

int sign_of(int v) { return v < 0 ? -1 : 1; }

void require_strands_for_twists(int m) {
  if (m < 3) {
    throw precondition_error("twist constructions need at least 3 strands");
  }
}

}  // namespace

void SequenceBuilder::free_bridge(std::size_t offset, std::size_t length, const BraidWord& target) {
  const BraidWord window = word_.slice(offset, length);
  const TransformationSequence down = free_reduction(window);
  const TransformationSequence up = reversed(free_reduction(target));
  if (down.final_word() != up.start) {
    throw std::logic_error("free_bridge: '" + format_word(window) + "' and '" + format_word(target) +
                           "' are different free-group elements");
  }
  splice(down, offset);
  splice(up, offset);
}

SequenceBundle SequenceBuilder::finish(std::string provenance) const {
  SequenceTlk tlk = tlk_from_sequence(seq_);
  return SequenceBundle{seq_, word_, tlk.r3_count, std::move(tlk.tensor), std::move(provenance)};
}

SequenceBundle seq_slide(int j, int m) {
  if (m < 3 || j < 2 || j > m - 1) {
    throw precondition_error("slide needs 2 <= j <= m-1 (j=" + std::to_string(j) + ", m=" + std::to_string(m) + ")");
  }
  const BraidWord cycle = ascending_cycle(m);
  SequenceBuilder builder(BraidWord(m, {{j, 1}}) * cycle);

  // s_1 .. s_{j-2} (s_j s_{j-1} s_j) s_{j+1} .. s_{m-1}
  std::vector<Letter> before;
  for (int l = 1; l <= j - 2; ++l) before.push_back({l, 1});
  before.insert(before.end(), {{j, 1}, {j - 1, 1}, {j, 1}});
  for (int l = j + 1; l <= m - 1; ++l) before.push_back({l, 1});
  builder.commute_into(BraidWord(m, std::move(before)));

  builder.apply(Move::reidemeister3(static_cast<std::size_t>(j - 1)));

  builder.commute_into(cycle * BraidWord(m, {{j - 1, 1}}));
  return builder.finish("slide(j=" + std::to_string(j) + ",m=" + std::to_string(m) + ")");
}

SequenceBundle seq_wrap(int m) {
  if (m < 3) {
    throw precondition_error("wrap needs m >= 3");
  }
  const BraidWord cycle = ascending_cycle(m);
  const BraidWord s1(m, {{1, 1}});
  SequenceBuilder builder(s1 * cycle * cycle);

  // s_1 s_1 (s_2 s_1)(s_3 s_2) ... (s_{m-1} s_{m-2}) s_{m-1}
  std::vector<Letter> interleaved{{1, 1}, {1, 1}};
  for (int l = 2; l <= m - 1; ++l) {
    interleaved.push_back({l, 1});
    interleaved.push_back({l - 1, 1});
  }
  interleaved.push_back({m - 1, 1});
  builder.commute_into(BraidWord(m, std::move(interleaved)));

  // s_l s_{l+1} s_l -> s_{l+1} s_l s_{l+1}, marching right
  for (int l = 1; l <= m - 2; ++l) {
    builder.apply(Move::reidemeister3(static_cast<std::size_t>(2 * l)));
  }

  builder.commute_into(cycle * cycle * BraidWord(m, {{m - 1, 1}}));
  return builder.finish("wrap(m=" + std::to_string(m) + ")");
}

SequenceBundle seq_sigma_past_delta(int i, int sign, int m) {
  require_strands_for_twists(m);
  if (i < 1 || i > m - 1) {
    throw precondition_error("generator index " + std::to_string(i) + " outside 1.." + std::to_string(m - 1));
  }
  if (sign != 1 && sign != -1) {
    throw precondition_error("sign must be +1 or -1");
  }
  const BraidWord delta = full_twist(m, 1);
  const std::string name =
      "sigma_past_delta(i=" + std::to_string(i) + ",sign=" + std::to_string(sign) + ",m=" + std::to_string(m) + ")";

  if (sign > 0) {
    SequenceBuilder builder(BraidWord(m, {{i, 1}}) * delta);
    std::size_t at = 0;  // 0-based position of the travelling letter
    int index = i;
    int blocks = m;  // copies of s_1 .. s_{m-1} still ahead of it
    while (blocks > 0) {
      if (index >= 2) {
        builder.splice(seq_slide(index, m).seq, at);
        at += static_cast<std::size_t>(m - 1);
        index -= 1;
        blocks -= 1;
      } else {
        if (blocks < 2) {
          throw std::logic_error("sigma_past_delta: wrap needs two blocks");
        }
        builder.splice(seq_wrap(m).seq, at);
        at += 2 * static_cast<std::size_t>(m - 1);
        index = m - 1;
        blocks -= 2;
      }
    }
    if (index != i) {
      throw std::logic_error("sigma_past_delta: letter left the twist with the wrong index");
    }
    return builder.finish(name);
  }

  const Letter up{i, 1};
  const Letter down{i, -1};
  const TransformationSequence forward = seq_sigma_past_delta(i, 1, m).seq;
  SequenceBuilder builder(BraidWord(m, {down}) * delta);
  builder.apply(Move::insert(delta.length() + 2, up));  // s^-1 Delta s s^-1
  builder.splice(reversed(forward), 1);                  // s^-1 s Delta s^-1
  builder.apply(Move::erase(1));                         // Delta s^-1
  return builder.finish(name);
}

SequenceBundle seq_letter_past_twist(Letter letter, int twist, int m) {
  if (twist == 1) {
    return seq_sigma_past_delta(letter.index, letter.sign, m);
  }
  if (twist != -1) {
    throw precondition_error("twist must be +1 or -1");
  }
  const BraidWord delta = full_twist(m, 1);
  const BraidWord inv_delta = inverse(delta);
  const std::size_t len = delta.length();
  SequenceBuilder builder(BraidWord(m, {letter}) * inv_delta);
  builder.free_bridge(0, 0, inv_delta * delta);  // Delta^-1 Delta s Delta^-1
  builder.splice(reversed(seq_sigma_past_delta(letter.index, letter.sign, m).seq), len);
  builder.free_bridge(len + 1, 2 * len, BraidWord(m));  // Delta^-1 s
  return builder.finish("letter_past_inverse_delta(letter=" + std::to_string(letter.to_signed()) +
                        ",m=" + std::to_string(m) + ")");
}

SequenceBundle seq_word_past_twists(const BraidWord& u, int k) {
  const int m = u.strands();
  const BraidWord twists = full_twist(m, k);
  SequenceBuilder builder(u * twists);
  if (!u.empty() && k != 0) {
    require_strands_for_twists(m);
    const int direction = sign_of(k);
    const std::size_t step = full_twist(m, 1).length();
    std::map<int, TransformationSequence> crossings;  // keyed by signed letter
    for (std::size_t r = u.length(); r-- > 0;) {
      const Letter letter = u[r];
      auto it = crossings.find(letter.to_signed());
      if (it == crossings.end()) {
        it = crossings.emplace(letter.to_signed(), seq_letter_past_twist(letter, direction, m).seq).first;
      }
      std::size_t at = r;
      for (int t = 0; t < std::abs(k); ++t) {
        builder.splice(it->second, at);
        at += step;
      }
    }
  }
  if (builder.word() != twists * u) {
    throw std::logic_error("word_past_twists ended at the wrong word");
  }
  return builder.finish("word_past_twists(k=" + std::to_string(k) + ")");
}

SequenceBundle seq_b_delta_n(const BraidWord& b, int n) {
  if (n < 0) {
    throw precondition_error("n must be non-negative");
  }
  require_strands_for_twists(b.strands());
  SequenceBundle bundle = seq_word_past_twists(b, n);
  bundle.provenance = "b_delta_n(n=" + std::to_string(n) + ")";
  return bundle;
}

SequenceBundle seq_structured3(const StructuredPair3& pair) {
  pair.validate();
  const int m = 3;
  const BraidWord twists_a = full_twist(m, pair.twists_a);
  const BraidWord twists_b = full_twist(m, pair.twists_b);
  const BraidWord powers_a = power(pair.w, pair.powers_a);
  const BraidWord powers_b = power(pair.w, pair.powers_b);

  SequenceBuilder builder(twists_a * powers_a * twists_b * powers_b);

  // Delta^k1 (w^l1 Delta^k2) w^l2 -> Delta^k1 Delta^k2 w^l1 w^l2
  builder.splice(seq_word_past_twists(powers_a, pair.twists_b).seq, twists_a.length());

  // regroup as Delta^k2 Delta^k1 w^l2 w^l1; only differs when signs differ
  const std::size_t twist_len = twists_a.length() + twists_b.length();
  if (twists_a * twists_b != twists_b * twists_a) {
    builder.free_bridge(0, twist_len, twists_b * twists_a);
  }
  if (powers_a * powers_b != powers_b * powers_a) {
    builder.free_bridge(twist_len, powers_a.length() + powers_b.length(), powers_b * powers_a);
  }

  // Delta^k2 (Delta^k1 w^l2) w^l1 -> Delta^k2 w^l2 Delta^k1 w^l1
  builder.splice(reversed(seq_word_past_twists(powers_b, pair.twists_a).seq), twists_b.length());

  if (builder.word() != pair.b() * pair.a()) {
    throw std::logic_error("structured3 ended at the wrong word");
  }
  return builder.finish("structured3(k1=" + std::to_string(pair.twists_a) + ",l1=" +
                        std::to_string(pair.powers_a) + ",k2=" + std::to_string(pair.twists_b) +
                        ",l2=" + std::to_string(pair.powers_b) + ")");
}

}  // namespace trilink

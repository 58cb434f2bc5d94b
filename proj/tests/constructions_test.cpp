#include <gtest/gtest.h>

#include "generators.hpp"
#include "trilink/constructions.hpp"
#include "trilink/errors.hpp"
#include "trilink/invariants.hpp"
#include "trilink/word_problem.hpp"

namespace trilink {
namespace {

void expect_sound(const SequenceBundle& bundle) {
  const auto report = validate_sequence(bundle.seq, bundle.target, true);
  EXPECT_TRUE(report.valid()) << bundle.provenance;
  EXPECT_TRUE(report.audit_passed()) << bundle.provenance;
  EXPECT_EQ(bundle.seq.r3_count(), bundle.r3_count);
  EXPECT_EQ(tlk_from_sequence(bundle.seq).tensor, bundle.tensor);
}

TEST(SeqSlide, ThreeStrands) {
  const auto bundle = seq_slide(2, 3);
  EXPECT_EQ(bundle.seq.start, parse_word("2 1 2", 3));
  EXPECT_EQ(bundle.target, parse_word("1 2 1", 3));
  EXPECT_EQ(bundle.r3_count, 1U);
  expect_sound(bundle);
}

TEST(SeqSlide, AnyValidIndex) {
  EXPECT_EQ(seq_slide(2, 5).r3_count, 1U);
  for (int m = 3; m <= 8; ++m) {
    for (int j = 2; j <= m - 1; ++j) {
      const auto bundle = seq_slide(j, m);
      EXPECT_EQ(bundle.seq.start, BraidWord(m, {{j, 1}}) * ascending_cycle(m));
      EXPECT_EQ(bundle.target, ascending_cycle(m) * BraidWord(m, {{j - 1, 1}}));
      EXPECT_EQ(bundle.r3_count, 1U);
      expect_sound(bundle);
    }
  }
  EXPECT_THROW(seq_slide(1, 3), precondition_error);
  EXPECT_THROW(seq_slide(3, 3), precondition_error);
}

TEST(SeqWrap, CountsAndEndpoint) {
  EXPECT_EQ(seq_wrap(3).r3_count, 1U);
  EXPECT_EQ(seq_wrap(4).r3_count, 2U);
  const auto six = seq_wrap(6);
  EXPECT_EQ(six.r3_count, 4U);
  EXPECT_EQ(six.target, parse_word("1 2 3 4 5 1 2 3 4 5 5", 6));
  for (int m = 3; m <= 8; ++m) {
    const auto bundle = seq_wrap(m);
    EXPECT_EQ(bundle.r3_count, static_cast<std::size_t>(m - 2));
    expect_sound(bundle);
  }
  EXPECT_THROW(seq_wrap(2), precondition_error);
}

TEST(SeqSigmaPastDelta, Counts) {
  EXPECT_EQ(seq_sigma_past_delta(1, 1, 3).r3_count, 2U);
  EXPECT_EQ(seq_sigma_past_delta(2, 1, 5).r3_count, 6U);
  const auto negative = seq_sigma_past_delta(1, -1, 3);
  EXPECT_EQ(negative.r3_count, 2U);
  EXPECT_EQ(negative.seq.start, parse_word("-1", 3) * full_twist(3, 1));
  EXPECT_EQ(negative.target, full_twist(3, 1) * parse_word("-1", 3));
  expect_sound(negative);
}

TEST(SeqSigmaPastDelta, EveryLetterAndSize) {
  for (int m = 3; m <= 7; ++m) {
    for (int i = 1; i <= m - 1; ++i) {
      for (int sign : {1, -1}) {
        const auto bundle = seq_sigma_past_delta(i, sign, m);
        EXPECT_EQ(bundle.r3_count, static_cast<std::size_t>(2 * (m - 2)));
        EXPECT_EQ(bundle.target, full_twist(m, 1) * BraidWord(m, {{i, sign}}));
        expect_sound(bundle);
      }
    }
  }
  EXPECT_THROW(seq_sigma_past_delta(3, 1, 3), precondition_error);
}

TEST(SeqLetterPastTwist, InverseTwist) {
  for (int m = 3; m <= 5; ++m) {
    for (int i = 1; i <= m - 1; ++i) {
      for (int sign : {1, -1}) {
        const auto bundle = seq_letter_past_twist({i, sign}, -1, m);
        EXPECT_EQ(bundle.seq.start, BraidWord(m, {{i, sign}}) * full_twist(m, -1));
        EXPECT_EQ(bundle.target, full_twist(m, -1) * BraidWord(m, {{i, sign}}));
        EXPECT_EQ(bundle.r3_count, static_cast<std::size_t>(2 * (m - 2)));
        expect_sound(bundle);
      }
    }
  }
}

TEST(SeqWordPastTwists, AnySignOfK) {
  testing::Rng rng(91);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = testing::uniform(rng, 3, 5);
    const int k = testing::uniform(rng, -2, 2);
    const BraidWord u = testing::random_word(rng, m, static_cast<std::size_t>(testing::uniform(rng, 0, 4)));
    const auto bundle = seq_word_past_twists(u, k);
    EXPECT_EQ(bundle.seq.start, u * full_twist(m, k));
    EXPECT_EQ(bundle.target, full_twist(m, k) * u);
    EXPECT_EQ(bundle.r3_count, static_cast<std::size_t>(2 * (m - 2) * std::abs(k)) * u.length());
    expect_sound(bundle);
  }
}

TEST(SeqBDeltaN, SingleClasp) {
  const auto bundle = seq_b_delta_n(parse_word("2 2", 3), 1);
  EXPECT_EQ(bundle.r3_count, 4U);
  EXPECT_EQ(static_cast<long long>(bundle.r3_count), thm2_bound(parse_word("2 2", 3), 1).lower_bound);
  expect_sound(bundle);
}

TEST(SeqBDeltaN, IdentityWordHasNoMoves) {
  const auto bundle = seq_b_delta_n(BraidWord(4), 5);
  EXPECT_TRUE(bundle.seq.moves.empty());
  EXPECT_TRUE(bundle.tensor.is_zero());
}

TEST(SeqBDeltaN, AlternatingClasps) {
  const BraidWord b = parse_word("-1 -1 2 2", 3);
  const auto bundle = seq_b_delta_n(b, 1);
  EXPECT_EQ(bundle.r3_count, 8U);
  EXPECT_EQ(tlk_abs_sum(bundle.tensor), 8);
  EXPECT_EQ(thm2_bound(b, 1).lower_bound, 8);
}

TEST(SeqBDeltaN, CountLawAndOracle) {
  testing::Rng rng(92);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = testing::uniform(rng, 3, 5);
    const int n = testing::uniform(rng, 0, 2);
    const BraidWord b = testing::random_pure_word(rng, m, 8);
    const auto bundle = seq_b_delta_n(b, n);
    EXPECT_EQ(bundle.r3_count, static_cast<std::size_t>(2 * (m - 2) * n) * b.length());
    EXPECT_EQ(bundle.tensor, tlk_formula(CommutingPair::certify(b, full_twist(m, n))));
    EXPECT_EQ(tlk_from_sequence(reversed(bundle.seq)).tensor, -bundle.tensor);
    EXPECT_EQ(reversed(bundle.seq).r3_count(), bundle.r3_count);
  }
}

TEST(SeqBDeltaN, Preconditions) {
  EXPECT_THROW(seq_b_delta_n(parse_word("1 1", 3), -1), precondition_error);
  EXPECT_THROW(seq_b_delta_n(parse_word("1 1", 2), 1), precondition_error);
}

TEST(SeqStructured3, SquareAndTwist) {
  StructuredPair3 p;
  p.w = parse_word("1 1", 3);
  p.powers_a = 1;
  p.twists_b = 1;
  const auto bundle = seq_structured3(p);
  EXPECT_EQ(bundle.r3_count, 4U);
  EXPECT_EQ(bundle.tensor, tlk_formula(expand_structured(p)));
  EXPECT_EQ(bundle.tensor(3, 2, 1), 1);
  expect_sound(bundle);
}

TEST(SeqStructured3, TrivialFirstComponent) {
  StructuredPair3 p;
  p.w = parse_word("1 1 2 2", 3);
  p.twists_b = 2;
  p.powers_b = -1;
  const auto bundle = seq_structured3(p);
  EXPECT_TRUE(bundle.tensor.is_zero());
  expect_sound(bundle);
}

TEST(SeqStructured3, MixedPowers) {
  StructuredPair3 p;
  p.w = parse_word("1 1 2 2", 3);
  p.twists_a = 1;
  p.powers_a = 1;
  p.powers_b = 2;
  const auto bundle = seq_structured3(p);
  EXPECT_EQ(bundle.tensor, tlk_formula(expand_structured(p)));
  expect_sound(bundle);
}

TEST(SeqStructured3, OppositePowersAreBridged) {
  testing::Rng rng(93);
  for (int trial = 0; trial < 20; ++trial) {
    StructuredPair3 p = testing::random_structured_pair(rng, 2, 6);
    p.powers_b = -p.powers_a;
    const auto bundle = seq_structured3(p);
    EXPECT_EQ(bundle.tensor, tlk_formula(expand_structured(p)));
    EXPECT_EQ(reversed(bundle.seq).r3_count(), bundle.r3_count);
    expect_sound(bundle);
  }
}

TEST(SequenceBuilder, SpliceChecksTheWindow) {
  SequenceBuilder builder(parse_word("1 2 1 2", 3));
  EXPECT_THROW(builder.splice(seq_slide(2, 3).seq, 0), std::logic_error);
  builder.splice(seq_slide(2, 3).seq, 1);
  EXPECT_EQ(builder.word(), parse_word("1 1 2 1", 3));
}

TEST(SequenceBuilder, CommuteIntoAndFreeBridge) {
  SequenceBuilder builder(parse_word("1 3 -1 1", 4));
  builder.commute_into(parse_word("3 1 -1 1", 4));
  EXPECT_EQ(builder.word(), parse_word("3 1 -1 1", 4));
  EXPECT_THROW(builder.commute_into(parse_word("1 1 -1 3", 4)), std::logic_error);
  builder.free_bridge(1, 3, parse_word("2 -2 1", 4));
  EXPECT_EQ(builder.word(), parse_word("3 2 -2 1", 4));
  EXPECT_EQ(builder.sequence().r3_count(), 0U);
  EXPECT_TRUE(validate_sequence(builder.sequence(), builder.word(), true).valid());
}

}  // namespace
}  // namespace trilink

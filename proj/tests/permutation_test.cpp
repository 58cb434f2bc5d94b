#include <gtest/gtest.h>

#include "generators.hpp"
#include "trilink/braid.hpp"
#include "trilink/errors.hpp"
#include "trilink/permutation.hpp"

namespace trilink {
namespace {

TEST(PermutationOf, SingleLetterIsAdjacentTransposition) {
  const Permutation p = permutation_of(parse_word("1", 3));
  EXPECT_EQ(p, Permutation::transposition(3, 1, 2));
  EXPECT_EQ(p.to_string(), "(1 2)");
}

TEST(PermutationOf, PrefixSwapsOuterStrands) {
  // w2 = s1^2 s2 s1 s2, the prefix in front of the third move
  const Permutation p = permutation_of(parse_word("1 1 2 1 2", 3));
  EXPECT_EQ(p.to_string(), "(1 3)");
  EXPECT_EQ(p.inverse(), p);
}

TEST(PermutationOf, EmptyWordIsIdentity) {
  EXPECT_TRUE(permutation_of(BraidWord(5)).is_identity());
  EXPECT_EQ(permutation_of(BraidWord(5)).to_string(), "e");
}

TEST(PermutationOf, FollowsTheStartingStrand) {
  // s1 s2: the strand starting at 1 ends at 3
  const Permutation p = permutation_of(parse_word("1 2", 3));
  EXPECT_EQ(p(1), 3);
  EXPECT_EQ(p(2), 1);
  EXPECT_EQ(p(3), 2);
}

TEST(PermutationOf, IsAHomomorphism) {
  testing::Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = testing::uniform(rng, 2, 7);
    const BraidWord u = testing::random_word(rng, m, static_cast<std::size_t>(testing::uniform(rng, 0, 12)));
    const BraidWord v = testing::random_word(rng, m, static_cast<std::size_t>(testing::uniform(rng, 0, 12)));
    EXPECT_EQ(permutation_of(u * v), permutation_of(u).then(permutation_of(v)));
    EXPECT_EQ(permutation_of(inverse(u)), permutation_of(u).inverse());
  }
}

TEST(IsPure, Examples) {
  EXPECT_TRUE(is_pure(parse_word("1 1", 3)));
  EXPECT_FALSE(is_pure(parse_word("1", 3)));
  EXPECT_TRUE(is_pure(full_twist(3, 1)));
  for (int m = 2; m <= 8; ++m) {
    EXPECT_TRUE(is_pure(full_twist(m, 1)));
  }
}

TEST(Permutation, FromImagesRejectsNonBijections) {
  const std::vector<int> bad{1, 1, 3};
  EXPECT_THROW(Permutation::from_images(bad), precondition_error);
  const std::vector<int> out_of_range{1, 4, 2};
  EXPECT_THROW(Permutation::from_images(out_of_range), precondition_error);
  const std::vector<int> ok{2, 3, 1};
  EXPECT_EQ(Permutation::from_images(ok).to_string(), "(1 2 3)");
}

}  // namespace
}  // namespace trilink

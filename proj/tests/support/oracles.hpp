#pragma once

// Reference computations that share no code path with the library routines
// they check.

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "trilink/braid.hpp"
#include "trilink/constructions.hpp"
#include "trilink/rewriting.hpp"

namespace trilink::testing {

/// Lk_{i,j} counted the classical way: signed crossings where component i
/// passes over component j. In sigma_k the strand at position k crosses over
/// the strand at k+1; in sigma_k^-1 the strand at k+1 is on top. For a
/// closed pure braid this is half the total signed i-j crossing count.
inline std::vector<std::vector<int>> over_crossing_linking(const BraidWord& word) {
  const int m = word.strands();
  std::vector<std::vector<int>> lk(static_cast<std::size_t>(m + 1), std::vector<int>(static_cast<std::size_t>(m + 1), 0));
  std::vector<int> at(static_cast<std::size_t>(m + 1));
  std::iota(at.begin(), at.end(), 0);
  for (const auto& letter : word.letters()) {
    const int lo = at[static_cast<std::size_t>(letter.index)];
    const int hi = at[static_cast<std::size_t>(letter.index + 1)];
    const int over = letter.sign > 0 ? lo : hi;
    const int under = letter.sign > 0 ? hi : lo;
    lk[static_cast<std::size_t>(over)][static_cast<std::size_t>(under)] += letter.sign;
    std::swap(at[static_cast<std::size_t>(letter.index)], at[static_cast<std::size_t>(letter.index + 1)]);
  }
  return lk;
}

struct DirectBound {
  long long mu = 0;
  long long nu = 0;
  long long lower_bound = 0;
};

/// mu, nu and 4n(mu(m-2) - nu) evaluated straight from their definitions on
/// over-crossing linking numbers.
inline DirectBound direct_bound(const BraidWord& b, int n) {
  const int m = b.strands();
  const auto lk = over_crossing_linking(b);
  const auto at = [&](int i, int j) {
    return static_cast<long long>(lk[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  };
  const auto overlap = [&](int i, int j, int k) {
    return at(i, j) * at(j, k) > 0 ? std::min(std::llabs(at(i, j)), std::llabs(at(j, k))) : 0LL;
  };
  DirectBound r;
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      r.mu += std::llabs(at(i, j));
      for (int k = j + 1; k <= m; ++k) {
        r.nu += overlap(i, j, k) + overlap(j, k, i) + overlap(k, i, j);
      }
    }
  }
  r.lower_bound = 4LL * n * (r.mu * (m - 2) - r.nu);
  return r;
}

/// For 3 strands, (Tlk_{1,2,3}, Tlk_{2,3,1}, Tlk_{3,1,2}) as minus the cross
/// product of (Lk_31, Lk_12, Lk_23)(a) and the same vector for b.
inline std::array<long long, 3> cross_product_tlk(const std::array<long long, 3>& a, const std::array<long long, 3>& b) {
  return {-(a[1] * b[2] - a[2] * b[1]), -(a[2] * b[0] - a[0] * b[2]), -(a[0] * b[1] - a[1] * b[0])};
}

/// b Delta^n -> Delta^n b where each full twist in turn is carried left past
/// all of b (twist-major), instead of each letter of b being carried right
/// through all twists (letter-major, the library's order).
inline TransformationSequence twist_major_b_delta_n(const BraidWord& b, int n) {
  const int m = b.strands();
  const std::size_t len = full_twist(m, 1).length();
  SequenceBuilder builder(b * full_twist(m, n));
  for (int t = 0; t < n; ++t) {
    // current word: Delta^t b Delta^(n-t); move b past the next twist
    const std::size_t base = static_cast<std::size_t>(t) * len;
    for (std::size_t r = b.length(); r-- > 0;) {
      builder.splice(seq_sigma_past_delta(b[r].index, b[r].sign, m).seq, base + r);
    }
  }
  return builder.sequence();
}

/// The transformation sequence A Delta -> Delta A written out by hand:
///   s1 s1 (s1 s2 s1) s2 s1 s2 -> s1 s1 s2 s1 s2 (s2 s1 s2)
///   -> s1 (s1 s2 s1) s2 s1 s2 s1 -> s1 s2 s1 s2 (s2 s1 s2) s1 -> Delta s1 s1
inline TransformationSequence hand_written_square_twist_sequence() {
  return TransformationSequence{BraidWord::from_signed(3, std::array{1, 1, 1, 2, 1, 2, 1, 2}),
                                {Move::reidemeister3(3), Move::reidemeister3(6), Move::reidemeister3(2),
                                 Move::reidemeister3(5)}};
}

}  // namespace trilink::testing

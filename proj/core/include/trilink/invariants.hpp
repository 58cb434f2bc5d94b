#pragma once

#include <map>
#include <optional>

#include "trilink/braid.hpp"
#include "trilink/pairs.hpp"
#include "trilink/tensor.hpp"

namespace trilink {

/// Tlk_{i,j,k}(S_m(a, b)) = -Lk_{i,j}(a) Lk_{j,k}(b) + Lk_{i,j}(b) Lk_{j,k}(a).
/// Requires at least 3 strands.
TripleLinkingTensor tlk_formula(const CommutingPair& pair);

/// Sum of |Tlk_{i,j,k}| over all admissible triples.
long long tlk_abs_sum(const TripleLinkingTensor& tensor);

/// Tlk_{i,j,k}(S_m(b, Delta^n)) = -n (Lk_{i,j}(b) - Lk_{j,k}(b)).
/// Requires a pure b on at least 3 strands; any integer n.
TripleLinkingTensor tlk_b_delta(const BraidWord& b, int n);

struct BoundReport {
  int m = 0;
  int n = 0;
  long long mu = 0;
  long long nu = 0;
  std::map<Triple, long long> nu_terms;  // nonzero nu_{i,j,k}, keyed as written
  long long lower_bound = 0;
  long long tlk_abs_sum = 0;
  std::optional<long long> realized_r3_count;
};

/// Triple point lower bound for S_m(b, Delta^n):
///   mu = sum_{i<j} |Lk_{i,j}(b)|
///   nu_{i,j,k} = min(|Lk_{i,j}|, |Lk_{j,k}|) if Lk_{i,j} Lk_{j,k} > 0, else 0
///   nu = sum_{i<j<k} nu_{i,j,k} + nu_{j,k,i} + nu_{k,i,j}
///   lower_bound = 4 n (mu (m - 2) - nu)
/// The closed form is checked against tlk_abs_sum(tlk_formula(b, Delta^n))
/// on every call; a mismatch throws std::logic_error.
/// Throws precondition_error for non-pure b, m < 3 or n < 0.
BoundReport thm2_bound(const BraidWord& b, int n);

}  // namespace trilink

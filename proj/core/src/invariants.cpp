#include "trilink/invariants.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "trilink/errors.hpp"
#include "trilink/linking.hpp"
#include "trilink/permutation.hpp"

namespace trilink {

namespace {

void require_three_strands(int m) {
  if (m < 3) {
    throw precondition_error("triple linking numbers need at least 3 strands");
  }
}

}  // namespace

TripleLinkingTensor tlk_formula(const CommutingPair& pair) {
  const int m = pair.strands();
  require_three_strands(m);
  const LinkingMatrix lk_a = linking_matrix(pair.a());
  const LinkingMatrix lk_b = linking_matrix(pair.b());
  TripleLinkingTensor out(m);
  for (const auto& t : admissible_triples(m)) {
    out.set(t, -lk_a(t.i, t.j) * lk_b(t.j, t.k) + lk_b(t.i, t.j) * lk_a(t.j, t.k));
  }
  return out;
}

long long tlk_abs_sum(const TripleLinkingTensor& tensor) {
  long long sum = 0;
  for (const auto& [t, v] : tensor.nonzero()) {
    sum += std::llabs(v);
  }
  return sum;
}

TripleLinkingTensor tlk_b_delta(const BraidWord& b, int n) {
  require_three_strands(b.strands());
  const LinkingMatrix lk = linking_matrix(b);
  TripleLinkingTensor out(b.strands());
  for (const auto& t : admissible_triples(b.strands())) {
    out.set(t, -n * (lk(t.i, t.j) - lk(t.j, t.k)));
  }
  return out;
}

BoundReport thm2_bound(const BraidWord& b, int n) {
  const int m = b.strands();
  require_three_strands(m);
  if (n < 0) {
    throw precondition_error("the twist exponent n must be non-negative");
  }
  if (!is_pure(b)) {
    throw precondition_error("b is not a pure braid");
  }
  const LinkingMatrix lk = linking_matrix(b);

  BoundReport report;
  report.m = m;
  report.n = n;
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      report.mu += std::abs(lk(i, j));
    }
  }
  const auto nu_term = [&lk](int i, int j, int k) -> long long {
    const int x = lk(i, j);
    const int y = lk(j, k);
    return x * y > 0 ? std::min(std::abs(x), std::abs(y)) : 0;
  };
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      for (int k = j + 1; k <= m; ++k) {
        for (const Triple t : {Triple{i, j, k}, Triple{j, k, i}, Triple{k, i, j}}) {
          if (const long long v = nu_term(t.i, t.j, t.k); v != 0) {
            report.nu_terms[t] = v;
            report.nu += v;
          }
        }
      }
    }
  }
  report.lower_bound = 4LL * n * (report.mu * (m - 2) - report.nu);

  const auto pair = CommutingPair::certify(b, full_twist(m, n));
  report.tlk_abs_sum = tlk_abs_sum(tlk_formula(pair));
  if (report.tlk_abs_sum != report.lower_bound || report.lower_bound < 0) {
    throw std::logic_error("sum |Tlk| = " + std::to_string(report.tlk_abs_sum) +
                           " disagrees with 4n(mu(m-2)-nu) = " + std::to_string(report.lower_bound));
  }
  return report;
}

}  // namespace trilink

#include "trilink/pairs.hpp"

#include "trilink/errors.hpp"
#include "trilink/permutation.hpp"
#include "trilink/word_problem.hpp"

namespace trilink {

CommutingPair CommutingPair::certify(BraidWord a, BraidWord b) {
  if (a.strands() != b.strands()) {
    throw precondition_error("pair members have different strand counts");
  }
  if (!is_pure(a)) {
    throw precondition_error("a is not a pure braid");
  }
  if (!is_pure(b)) {
    throw precondition_error("b is not a pure braid");
  }
  if (!commutes(a, b)) {
    throw not_commuting_error("a and b do not commute");
  }
  return CommutingPair(std::move(a), std::move(b));
}

void StructuredPair3::validate() const {
  if (w.strands() != 3) {
    throw precondition_error("structured pairs live on 3 strands");
  }
  if (!is_pure(w)) {
    throw precondition_error("w is not a pure braid");
  }
}

BraidWord StructuredPair3::a() const { return full_twist(3, twists_a) * power(w, powers_a); }

BraidWord StructuredPair3::b() const { return full_twist(3, twists_b) * power(w, powers_b); }

CommutingPair expand_structured(const StructuredPair3& pair) {
  pair.validate();
  return CommutingPair::certify(pair.a(), pair.b());
}

}  // namespace trilink

#include "trilink/word_problem.hpp"

#include "trilink/errors.hpp"

namespace trilink {

FreeWord& FreeWord::append(const FreeWord& tail) {
  for (int s : tail.symbols_) {
    if (!symbols_.empty() && symbols_.back() == -s) {
      symbols_.pop_back();
    } else {
      symbols_.push_back(s);
    }
  }
  return *this;
}

FreeWord FreeWord::inverse() const {
  FreeWord out;
  out.symbols_.reserve(symbols_.size());
  for (auto it = symbols_.rbegin(); it != symbols_.rend(); ++it) {
    out.symbols_.push_back(-*it);
  }
  return out;
}

namespace {

FreeWord conjugate(const FreeWord& by, const FreeWord& x) {
  FreeWord out = by;
  out.append(x);
  out.append(by.inverse());
  return out;
}

}  // namespace

ArtinAction::ArtinAction(const BraidWord& word) {
  const int m = word.strands();
  images_.reserve(static_cast<std::size_t>(m));
  for (int g = 1; g <= m; ++g) {
    images_.push_back(FreeWord::generator(g));
  }
  // images_[g] holds phi_prefix(x_g); appending a letter s substitutes the
  // current images into phi_s(x_g).
  for (const auto& letter : word.letters()) {
    auto& lo = images_[static_cast<std::size_t>(letter.index - 1)];
    auto& hi = images_[static_cast<std::size_t>(letter.index)];
    if (letter.positive()) {
      FreeWord new_lo = conjugate(lo, hi);
      hi = std::move(lo);
      lo = std::move(new_lo);
    } else {
      FreeWord new_hi = conjugate(hi.inverse(), lo);
      lo = std::move(hi);
      hi = std::move(new_hi);
    }
  }
}

bool ArtinAction::is_identity() const {
  for (std::size_t g = 0; g < images_.size(); ++g) {
    if (images_[g].symbols().size() != 1 || images_[g].symbols().front() != static_cast<int>(g) + 1) {
      return false;
    }
  }
  return true;
}

bool artin_is_identity(const BraidWord& word) { return ArtinAction(word).is_identity(); }

bool braid_equal(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) {
    throw precondition_error("cannot compare braids on different strand counts");
  }
  return ArtinAction(u) == ArtinAction(v);
}

bool commutes(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) {
    throw precondition_error("cannot test commutation of braids on different strand counts");
  }
  return artin_is_identity(a * b * inverse(a) * inverse(b));
}

}  // namespace trilink

#include "trilink/permutation.hpp"

#include <numeric>
#include <sstream>

#include "trilink/errors.hpp"

namespace trilink {

Permutation::Permutation(int size) : images_(static_cast<std::size_t>(size)) {
  if (size < 1) {
    throw precondition_error("permutation size must be positive");
  }
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::from_images(std::span<const int> images) {
  Permutation p(static_cast<int>(images.size()));
  std::vector<bool> seen(images.size() + 1, false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    const int v = images[i];
    if (v < 1 || v > static_cast<int>(images.size()) || seen[static_cast<std::size_t>(v)]) {
      throw precondition_error("images do not form a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
    p.images_[i] = v;
  }
  return p;
}

Permutation Permutation::transposition(int size, int a, int b) {
  Permutation p(size);
  std::swap(p.images_.at(static_cast<std::size_t>(a - 1)), p.images_.at(static_cast<std::size_t>(b - 1)));
  return p;
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.size() != size()) {
    throw precondition_error("permutation sizes differ");
  }
  Permutation out(size());
  for (int p = 1; p <= size(); ++p) {
    out.images_[static_cast<std::size_t>(p - 1)] = next((*this)(p));
  }
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out(size());
  for (int p = 1; p <= size(); ++p) {
    out.images_[static_cast<std::size_t>((*this)(p) - 1)] = p;
  }
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i) + 1) {
      return false;
    }
  }
  return true;
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  std::vector<bool> done(images_.size(), false);
  for (int start = 1; start <= size(); ++start) {
    if (done[static_cast<std::size_t>(start - 1)] || (*this)(start) == start) {
      continue;
    }
    out << '(';
    int p = start;
    bool first = true;
    do {
      if (!first) {
        out << ' ';
      }
      out << p;
      done[static_cast<std::size_t>(p - 1)] = true;
      p = (*this)(p);
      first = false;
    } while (p != start);
    out << ')';
  }
  const std::string s = out.str();
  return s.empty() ? "e" : s;
}

Permutation permutation_of(const BraidWord& word) {
  const int m = word.strands();
  // at[pos] = starting position of the strand currently at pos
  std::vector<int> at(static_cast<std::size_t>(m));
  std::iota(at.begin(), at.end(), 1);
  for (const auto& letter : word.letters()) {
    std::swap(at[static_cast<std::size_t>(letter.index - 1)], at[static_cast<std::size_t>(letter.index)]);
  }
  std::vector<int> images(static_cast<std::size_t>(m));
  for (int pos = 1; pos <= m; ++pos) {
    images[static_cast<std::size_t>(at[static_cast<std::size_t>(pos - 1)] - 1)] = pos;
  }
  return Permutation::from_images(images);
}

bool is_pure(const BraidWord& word) { return permutation_of(word).is_identity(); }

}  // namespace trilink

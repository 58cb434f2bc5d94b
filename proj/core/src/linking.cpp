#include "trilink/linking.hpp"

#include <numeric>
#include <stdexcept>

#include "trilink/errors.hpp"
#include "trilink/permutation.hpp"

namespace trilink {

LinkingMatrix::LinkingMatrix(int size)
    : size_(size), entries_(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), 0) {
  if (size < 1) {
    throw precondition_error("linking matrix size must be positive");
  }
}

std::size_t LinkingMatrix::flat(int i, int j) const {
  if (i < 1 || i > size_ || j < 1 || j > size_) {
    throw precondition_error("component index out of range");
  }
  return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(size_) + static_cast<std::size_t>(j - 1);
}

void LinkingMatrix::set(int i, int j, int value) {
  if (i == j) {
    if (value != 0) {
      throw precondition_error("diagonal of a linking matrix is zero");
    }
    return;
  }
  entries_[flat(i, j)] = value;
  entries_[flat(j, i)] = value;
}

std::vector<std::vector<int>> LinkingMatrix::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(size_));
  for (int i = 1; i <= size_; ++i) {
    for (int j = 1; j <= size_; ++j) {
      out[static_cast<std::size_t>(i - 1)].push_back((*this)(i, j));
    }
  }
  return out;
}

LinkingMatrix operator+(const LinkingMatrix& x, const LinkingMatrix& y) {
  if (x.size_ != y.size_) {
    throw precondition_error("linking matrices of different sizes");
  }
  LinkingMatrix out(x.size_);
  for (std::size_t e = 0; e < out.entries_.size(); ++e) {
    out.entries_[e] = x.entries_[e] + y.entries_[e];
  }
  return out;
}

LinkingMatrix operator-(const LinkingMatrix& x) {
  LinkingMatrix out(x.size_);
  for (std::size_t e = 0; e < out.entries_.size(); ++e) {
    out.entries_[e] = -x.entries_[e];
  }
  return out;
}

LinkingMatrix linking_matrix(const BraidWord& word) {
  if (!is_pure(word)) {
    throw precondition_error("linking numbers need a pure braid (closure components = strands)");
  }
  const int m = word.strands();
  std::vector<int> tally(static_cast<std::size_t>(m * m), 0);
  std::vector<int> at(static_cast<std::size_t>(m));
  std::iota(at.begin(), at.end(), 1);
  for (const auto& letter : word.letters()) {
    auto& lower = at[static_cast<std::size_t>(letter.index - 1)];
    auto& upper = at[static_cast<std::size_t>(letter.index)];
    tally[static_cast<std::size_t>((lower - 1) * m + (upper - 1))] += letter.sign;
    tally[static_cast<std::size_t>((upper - 1) * m + (lower - 1))] += letter.sign;
    std::swap(lower, upper);
  }
  LinkingMatrix out(m);
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      const int t = tally[static_cast<std::size_t>((i - 1) * m + (j - 1))];
      if (t % 2 != 0) {
        throw std::logic_error("odd crossing tally between components " + std::to_string(i) + " and " +
                               std::to_string(j));
      }
      out.set(i, j, t / 2);
    }
  }
  return out;
}

}  // namespace trilink

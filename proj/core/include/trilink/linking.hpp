#pragma once

#include <vector>

#include "trilink/braid.hpp"

namespace trilink {

/// Pairwise linking numbers of the closure of a pure braid. Component l is
/// the one containing the strand that starts at position l.
class LinkingMatrix {
 public:
  explicit LinkingMatrix(int size);

  [[nodiscard]] int size() const noexcept { return size_; }
  /// Lk_{i,j}, 1-based; Lk_{i,i} = 0.
  [[nodiscard]] int operator()(int i, int j) const { return entries_.at(flat(i, j)); }
  /// Sets Lk_{i,j} and Lk_{j,i} together.
  void set(int i, int j, int value);

  [[nodiscard]] std::vector<std::vector<int>> rows() const;

  friend bool operator==(const LinkingMatrix&, const LinkingMatrix&) = default;
  friend LinkingMatrix operator+(const LinkingMatrix& x, const LinkingMatrix& y);
  friend LinkingMatrix operator-(const LinkingMatrix& x);

 private:
  [[nodiscard]] std::size_t flat(int i, int j) const;
  int size_;
  std::vector<int> entries_;
};

/// Walks the word tracking which component sits at each position; every
/// letter sigma_i^e adds e to the crossing tally of the two components at i
/// and i+1. Lk is half that tally.
///
/// Throws precondition_error for non-pure words. An odd tally would mean the
/// closure is not a link of m components and raises std::logic_error.
LinkingMatrix linking_matrix(const BraidWord& word);

}  // namespace trilink

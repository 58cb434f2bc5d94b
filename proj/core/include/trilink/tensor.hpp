#pragma once

#include <compare>
#include <map>
#include <vector>

namespace trilink {

/// A component triple (top, middle, bottom), 1-based.
struct Triple {
  int i = 0;
  int j = 0;
  int k = 0;

  friend auto operator<=>(const Triple&, const Triple&) = default;
};

/// All (i, j, k) in 1..m with i != j and j != k, lexicographic.
std::vector<Triple> admissible_triples(int size);

/// Tlk_{i,j,k} for i != j, j != k. Only nonzero values are stored; equality
/// compares every admissible entry.
class TripleLinkingTensor {
 public:
  explicit TripleLinkingTensor(int size);

  [[nodiscard]] int size() const noexcept { return size_; }
  [[nodiscard]] int operator()(int i, int j, int k) const;
  [[nodiscard]] int operator()(const Triple& t) const { return (*this)(t.i, t.j, t.k); }

  void add(const Triple& t, int delta);
  void set(const Triple& t, int value);

  /// Nonzero entries in lexicographic order.
  [[nodiscard]] const std::map<Triple, int>& nonzero() const noexcept { return values_; }
  [[nodiscard]] bool is_zero() const noexcept { return values_.empty(); }

  /// Tlk_{k,j,i} = -Tlk_{i,j,k} for distinct i, j, k and Tlk_{i,j,i} = 0.
  [[nodiscard]] bool is_antisymmetric() const;

  friend bool operator==(const TripleLinkingTensor& x, const TripleLinkingTensor& y);
  friend TripleLinkingTensor operator-(const TripleLinkingTensor& x);

 private:
  void check(const Triple& t) const;
  int size_;
  std::map<Triple, int> values_;
};

}  // namespace trilink

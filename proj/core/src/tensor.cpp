#include "trilink/tensor.hpp"

#include "trilink/errors.hpp"

namespace trilink {

std::vector<Triple> admissible_triples(int size) {
  std::vector<Triple> out;
  for (int i = 1; i <= size; ++i) {
    for (int j = 1; j <= size; ++j) {
      if (j == i) {
        continue;
      }
      for (int k = 1; k <= size; ++k) {
        if (k != j) {
          out.push_back({i, j, k});
        }
      }
    }
  }
  return out;
}

TripleLinkingTensor::TripleLinkingTensor(int size) : size_(size) {
  if (size < 1) {
    throw precondition_error("tensor size must be positive");
  }
}

void TripleLinkingTensor::check(const Triple& t) const {
  const auto in_range = [this](int c) { return c >= 1 && c <= size_; };
  if (!in_range(t.i) || !in_range(t.j) || !in_range(t.k)) {
    throw precondition_error("component index out of range");
  }
  if (t.i == t.j || t.j == t.k) {
    throw precondition_error("Tlk_{i,j,k} needs i != j and j != k");
  }
}

int TripleLinkingTensor::operator()(int i, int j, int k) const {
  const Triple t{i, j, k};
  check(t);
  const auto it = values_.find(t);
  return it == values_.end() ? 0 : it->second;
}

void TripleLinkingTensor::add(const Triple& t, int delta) { set(t, (*this)(t) + delta); }

void TripleLinkingTensor::set(const Triple& t, int value) {
  check(t);
  if (value == 0) {
    values_.erase(t);
  } else {
    values_[t] = value;
  }
}

bool TripleLinkingTensor::is_antisymmetric() const {
  for (const auto& t : admissible_triples(size_)) {
    if (t.i == t.k) {
      if ((*this)(t) != 0) {
        return false;
      }
    } else if ((*this)(t.k, t.j, t.i) != -(*this)(t)) {
      return false;
    }
  }
  return true;
}

bool operator==(const TripleLinkingTensor& x, const TripleLinkingTensor& y) {
  if (x.size_ != y.size_) {
    return false;
  }
  for (const auto& t : admissible_triples(x.size_)) {
    if (x(t) != y(t)) {
      return false;
    }
  }
  return true;
}

TripleLinkingTensor operator-(const TripleLinkingTensor& x) {
  TripleLinkingTensor out(x.size_);
  for (const auto& [t, v] : x.values_) {
    out.values_[t] = -v;
  }
  return out;
}

}  // namespace trilink

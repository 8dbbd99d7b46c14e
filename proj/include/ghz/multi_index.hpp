#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace ghz {

/// Strictly increasing tuple of qubit positions (1-based) inside an ambient
/// register of n qubits. Flip classes, reduced-density subsets and gtilde
/// labels are all MultiIndex values. Qubit i maps to bit (n - i) of a basis
/// index, so qubit 1 is the most significant bit.
class MultiIndex {
 public:
  MultiIndex(int n, std::vector<int> indices);

  static MultiIndex empty(int n) { return MultiIndex(n, {}); }
  static MultiIndex from_mask(int n, std::uint32_t mask);

  int ambient() const { return n_; }
  const std::vector<int>& indices() const { return indices_; }
  int size() const { return static_cast<int>(indices_.size()); }
  bool is_empty() const { return indices_.empty(); }
  bool is_full() const { return size() == n_; }
  bool contains(int qubit) const;

  std::uint32_t mask() const;
  MultiIndex complement() const;

  /// "(1,2)"; "()" for the empty set.
  std::string str() const;

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) = default;
  /// Orders by cardinality first, then lexicographically on the indices.
  friend std::strong_ordering operator<=>(const MultiIndex& a,
                                          const MultiIndex& b);

 private:
  int n_;
  std::vector<int> indices_;
};

}  // namespace ghz

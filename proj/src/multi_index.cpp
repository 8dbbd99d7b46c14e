#include "ghz/multi_index.hpp"

#include <stdexcept>

namespace ghz {

MultiIndex::MultiIndex(int n, std::vector<int> indices)
    : n_(n), indices_(std::move(indices)) {
  if (n < 1 || n > 24)
    throw std::invalid_argument("MultiIndex: ambient size outside 1..24");
  int prev = 0;
  for (int i : indices_) {
    if (i <= prev)
      throw std::invalid_argument(
          "MultiIndex: indices must be strictly increasing");
    if (i > n) throw std::invalid_argument("MultiIndex: index exceeds n");
    prev = i;
  }
}

MultiIndex MultiIndex::from_mask(int n, std::uint32_t mask) {
  std::vector<int> idx;
  for (int q = 1; q <= n; ++q)
    if ((mask >> (n - q)) & 1u) idx.push_back(q);
  return MultiIndex(n, std::move(idx));
}

bool MultiIndex::contains(int qubit) const {
  for (int i : indices_)
    if (i == qubit) return true;
  return false;
}

std::uint32_t MultiIndex::mask() const {
  std::uint32_t m = 0;
  for (int i : indices_) m |= 1u << (n_ - i);
  return m;
}

MultiIndex MultiIndex::complement() const {
  std::vector<int> idx;
  idx.reserve(static_cast<size_t>(n_ - size()));
  for (int q = 1, j = 0; q <= n_; ++q) {
    if (j < size() && indices_[static_cast<size_t>(j)] == q) {
      ++j;
    } else {
      idx.push_back(q);
    }
  }
  return MultiIndex(n_, std::move(idx));
}

std::string MultiIndex::str() const {
  std::string s = "(";
  for (size_t j = 0; j < indices_.size(); ++j) {
    if (j) s += ',';
    s += std::to_string(indices_[j]);
  }
  s += ')';
  return s;
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return a.indices_ <=> b.indices_;
}

}  // namespace ghz

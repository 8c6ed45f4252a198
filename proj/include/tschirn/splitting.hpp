#pragma once

#include <numeric>
#include <string>
#include <vector>

namespace tschirn {

// Multiset of line bundle degrees, kept sorted descending.
struct SplittingType {
  std::vector<int> d;

  static SplittingType of(std::vector<int> v);

  size_t rank() const { return d.size(); }
  long sum() const { return std::accumulate(d.begin(), d.end(), 0L); }

  friend bool operator==(const SplittingType& a, const SplittingType& b) { return a.d == b.d; }
  friend bool operator!=(const SplittingType& a, const SplittingType& b) { return !(a == b); }

  std::string str() const;
};

}  // namespace tschirn

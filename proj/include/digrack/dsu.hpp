#pragma once

#include <numeric>
#include <vector>

namespace digrack {

// Union-find over {0, ..., n-1}.
class DisjointSets {
public:
  explicit DisjointSets(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

  int component_count() {
    int roots = 0;
    for (int x = 0; x < static_cast<int>(parent_.size()); ++x)
      if (find(x) == x) ++roots;
    return roots;
  }

private:
  std::vector<int> parent_;
};

}  // namespace digrack

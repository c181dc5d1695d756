#pragma once

#include <numeric>
#include <vector>

namespace cobkh {

struct UnionFind {
  explicit UnionFind(int n = 0) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  int add() {
    parent.push_back(static_cast<int>(parent.size()));
    return parent.back();
  }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  bool merge(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (y < x) std::swap(x, y);
    parent[y] = x;
    return true;
  }

  std::vector<int> parent;
};

}  // namespace cobkh

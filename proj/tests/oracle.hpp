#pragma once

// Brute-force state-sum Khovanov homology for closed classical diagrams.
// Uses only crossing slots and types: its own loop tracing, Frobenius
// maps, cube signs and integer diagonalization.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cobkh/diagram.hpp"
#include "cobkh/homology.hpp"

namespace cobkh::oracle {

using Mat = std::vector<std::vector<std::int64_t>>;

// Diagonal entries after integer row/column reduction.
inline std::vector<std::int64_t> diagonalize(Mat a) {
  std::vector<std::int64_t> diag;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows;) {
    // smallest nonzero in the remaining block
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = r; i < rows; ++i)
      for (std::size_t j = c; j < cols; ++j)
        if (a[i][j] != 0 && (pr == rows || std::llabs(a[i][j]) < std::llabs(a[pr][pc]))) pr = i, pc = j;
    if (pr == rows) break;
    std::swap(a[r], a[pr]);
    for (auto& row : a) std::swap(row[c], row[pc]);
    bool clean = true;
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::int64_t q = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= q * a[r][j];
      clean = clean && a[i][c] == 0;
    }
    for (std::size_t j = c + 1; j < cols; ++j) {
      const std::int64_t q = a[r][j] / a[r][c];
      for (std::size_t i = r; i < rows; ++i) a[i][j] -= q * a[i][c];
      clean = clean && a[r][j] == 0;
    }
    if (!clean) continue;  // retry with a smaller pivot
    diag.push_back(std::llabs(a[r][c]));
    ++r;
    ++c;
  }
  return diag;
}

// Invariant factors from arbitrary diagonal entries.
inline std::vector<std::int64_t> invariant_factors(std::vector<std::int64_t> d) {
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      const std::int64_t g = std::gcd(d[i], d[j]);
      const std::int64_t l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  std::vector<std::int64_t> out;
  for (auto x : d)
    if (x > 1) out.push_back(x);
  return out;
}

struct Loops {
  std::vector<std::vector<int>> loops;  // sorted edge labels, sorted list
  int loop_of(int label) const {
    for (std::size_t i = 0; i < loops.size(); ++i)
      if (std::binary_search(loops[i].begin(), loops[i].end(), label)) return static_cast<int>(i);
    throw std::logic_error("oracle: label on no loop");
  }
};

// bit k of `state` set: crossing k takes its 1-smoothing.
inline Loops trace(const TangleDiagram& d, std::uint32_t state) {
  std::map<int, int> parent;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& c : d.crossings)
    for (int e : c.slots) parent[e] = e;
  for (std::size_t k = 0; k < d.crossings.size(); ++k) {
    const auto& c = d.crossings[k];
    if (c.type != CrossingType::Pos && c.type != CrossingType::Neg)
      throw std::logic_error("oracle: classical crossings only");
    // oriented smoothing joins each incoming slot (0, 1) to its adjacent
    // outgoing slot: 0-3, 1-2; the other smoothing joins 0-1, 2-3
    const bool one = state >> k & 1;
    const bool oriented = (c.type == CrossingType::Pos) != one;
    const auto& s = c.slots;
    if (oriented) {
      parent[find(s[0])] = find(s[3]);
      parent[find(s[1])] = find(s[2]);
    } else {
      parent[find(s[0])] = find(s[1]);
      parent[find(s[2])] = find(s[3]);
    }
  }
  std::map<int, std::vector<int>> groups;
  for (auto& [e, p] : parent) groups[find(e)].push_back(e);
  Loops out;
  for (auto& [r, g] : groups) out.loops.push_back(g);
  for (int l : d.loops) out.loops.push_back({l});
  std::sort(out.loops.begin(), out.loops.end());
  return out;
}

inline HomologyTable khovanov(const TangleDiagram& d) {
  const int n = static_cast<int>(d.crossings.size());
  int npos = 0, nneg = 0;
  for (const auto& c : d.crossings) (c.type == CrossingType::Pos ? npos : nneg)++;
  struct Gen {
    std::uint32_t state;
    std::uint32_t xs;  // loops labelled X
  };
  std::map<std::pair<int, int>, std::vector<Gen>> gens;  // (h, q)
  std::vector<Loops> loops(std::size_t{1} << n);
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    loops[s] = trace(d, s);
    const int r = std::popcount(s);
    const int m = static_cast<int>(loops[s].loops.size());
    for (std::uint32_t x = 0; x < (1u << m); ++x)
      gens[{r - nneg, m - 2 * std::popcount(x) + r + npos - 2 * nneg}].push_back({s, x});
  }
  auto index = [&](const std::vector<Gen>& v, Gen g) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i].state == g.state && v[i].xs == g.xs) return static_cast<int>(i);
    throw std::logic_error("oracle: missing generator");
  };
  // d: (h, q) -> (h + 1, q)
  auto differential = [&](int h, int q) {
    const auto& src = gens[{h, q}];
    const auto& tgt = gens[{h + 1, q}];
    Mat m(tgt.size(), std::vector<std::int64_t>(src.size(), 0));
    for (std::size_t col = 0; col < src.size(); ++col) {
      const Gen g = src[col];
      for (int k = 0; k < n; ++k) {
        if (g.state >> k & 1) continue;
        const std::uint32_t t = g.state | (1u << k);
        const int sign = std::popcount(g.state & ((1u << k) - 1)) % 2 ? -1 : 1;
        const Loops &a = loops[g.state], &b = loops[t];
        const auto& slots = d.crossings[k].slots;
        std::set<int> touched_a{a.loop_of(slots[0]), a.loop_of(slots[1]), a.loop_of(slots[2]), a.loop_of(slots[3])};
        std::set<int> touched_b{b.loop_of(slots[0]), b.loop_of(slots[1]), b.loop_of(slots[2]), b.loop_of(slots[3])};
        // untouched loops carry their labels across
        std::uint32_t base = 0;
        for (std::size_t i = 0; i < a.loops.size(); ++i) {
          if (touched_a.count(static_cast<int>(i))) continue;
          const int j = static_cast<int>(std::find(b.loops.begin(), b.loops.end(), a.loops[i]) - b.loops.begin());
          if (g.xs >> i & 1) base |= 1u << j;
        }
        int xs_in = 0;
        for (int i : touched_a) xs_in += g.xs >> i & 1;
        std::vector<std::uint32_t> outs;
        if (touched_a.size() == 2 && touched_b.size() == 1) {
          const int c = *touched_b.begin();
          if (xs_in == 0) outs.push_back(base);
          if (xs_in == 1) outs.push_back(base | 1u << c);
        } else if (touched_a.size() == 1 && touched_b.size() == 2) {
          const int c1 = *touched_b.begin(), c2 = *touched_b.rbegin();
          if (xs_in == 0) {
            outs.push_back(base | 1u << c1);
            outs.push_back(base | 1u << c2);
          } else {
            outs.push_back(base | 1u << c1 | 1u << c2);
          }
        } else {
          throw std::logic_error("oracle: non-orientable saddle");
        }
        for (auto x : outs) m[index(tgt, {t, x})][col] += sign;
      }
    }
    return m;
  };
  auto rank_of = [](const Mat& m) { return static_cast<int>(oracle::diagonalize(m).size()); };
  HomologyTable out;
  std::set<std::pair<int, int>> keys;
  for (auto& [k, v] : gens) keys.insert(k);
  for (auto [h, q] : keys) {
    const int dim = static_cast<int>(gens[{h, q}].size());
    if (dim == 0) continue;
    const int r_out = rank_of(differential(h, q));
    const auto in_diag = diagonalize(differential(h - 1, q));
    HomologyGroup g{dim - r_out - static_cast<int>(in_diag.size()), invariant_factors(in_diag)};
    if (g.rank || !g.torsion.empty()) out[{h, q}] = g;
  }
  return out;
}

}  // namespace cobkh::oracle

#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cobkh/cobordism.hpp"
#include "cobkh/diagram.hpp"
#include "cobkh/flat_tangle.hpp"

namespace cobkh::testing {

inline std::uint64_t seed() {
  if (const char* s = std::getenv("COBKH_SEED")) return std::strtoull(s, nullptr, 10);
  return 20240611;
}

inline int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// random non-crossing matching of points [lo, hi)
inline void random_matching(std::mt19937_64& rng, int lo, int hi, std::vector<int>& mate) {
  if (lo >= hi) return;
  const int j = lo + 1 + 2 * uniform(rng, 0, (hi - lo) / 2 - 1);
  mate[lo] = j;
  mate[j] = lo;
  random_matching(rng, lo + 1, j, mate);
  random_matching(rng, j + 1, hi, mate);
}

/// Random flat tangle with 2k boundary points and loop ids drawn from {1..5}.
inline FlatTangle random_tangle(std::mt19937_64& rng, int boundary, int max_loops) {
  std::vector<int> mate(boundary);
  random_matching(rng, 0, boundary, mate);
  std::vector<int> ids{1, 2, 3, 4, 5};
  std::shuffle(ids.begin(), ids.end(), rng);
  ids.resize(uniform(rng, 0, max_loops));
  return FlatTangle(mate, ids);
}

/// Random unreduced surface: the boundary cycles are grouped at random,
/// closed components added, genus and dots in {0, 1, 2}.
inline PreSurface random_presurface(std::mt19937_64& rng, const FlatTangle& s, const FlatTangle& t) {
  const CycleMap cm(s, t);
  const int groups = uniform(rng, 1, std::max(1, cm.count));
  std::vector<int> group_of(cm.count);
  for (auto& g : group_of) g = uniform(rng, 0, groups - 1);
  PreSurface p{s, t, {}, uniform(rng, 1, 3) * (uniform(rng, 0, 1) ? 1 : -1)};
  for (int g = 0; g < groups; ++g) {
    PreComponent c;
    for (int i = 0; i < s.circle_count(); ++i)
      if (group_of[cm.source_cycle[i]] == g) c.source_circles.push_back(i);
    for (int i = 0; i < t.circle_count(); ++i)
      if (group_of[cm.target_cycle[i]] == g) c.target_circles.push_back(i);
    if (c.source_circles.empty() && c.target_circles.empty()) continue;
    c.genus = uniform(rng, 0, 2) == 2 ? 1 : 0;
    c.dots = uniform(rng, 0, 3) == 3 ? 2 : uniform(rng, 0, 1);
    p.components.push_back(std::move(c));
  }
  if (uniform(rng, 0, 3) == 0) p.components.push_back({{}, {}, uniform(rng, 0, 1), uniform(rng, 0, 1)});
  return p;
}

/// Random generator: normal form of a random surface with the same-shape
/// (genus 0, at most one dot) restriction.
inline Cobordism random_generator(std::mt19937_64& rng, const FlatTangle& s, const FlatTangle& t) {
  PreSurface p = random_presurface(rng, s, t);
  p.coeff = 1;
  for (auto& c : p.components) {
    c.genus = 0;
    c.dots = std::min(c.dots, 1);
    if (c.source_circles.empty() && c.target_circles.empty()) c.dots = 1;
  }
  return normalize(p);
}

using Matching = std::vector<std::pair<int, int>>;

inline std::vector<Matching> planar_matchings(int lo, int hi) {
  if (lo >= hi) return {{}};
  std::vector<Matching> out;
  for (int j = lo + 1; j < hi; j += 2)
    for (const auto& in : planar_matchings(lo + 1, j))
      for (const auto& rest : planar_matchings(j + 1, hi)) {
        Matching m = in;
        m.emplace_back(lo, j);
        m.insert(m.end(), rest.begin(), rest.end());
        out.push_back(m);
      }
  return out;
}

/// Planar closures joining each incoming boundary point to an outgoing one.
inline std::vector<Matching> oriented_closures(const TangleDiagram& d) {
  std::vector<Matching> out;
  for (const auto& m : planar_matchings(0, d.boundary)) {
    bool ok = true;
    for (auto [p, q] : m) ok = ok && d.orientation[p] != d.orientation[q];
    if (ok) out.push_back(m);
  }
  return out;
}

}  // namespace cobkh::testing

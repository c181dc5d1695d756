#include "cobkh/flat_tangle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cobkh/union_find.hpp"

namespace cobkh {

bool is_planar_matching(const std::vector<int>& mate) {
  // Non-crossing iff scanning the cyclic order behaves like balanced brackets.
  std::vector<int> stack;
  const int n = static_cast<int>(mate.size());
  for (int p = 0; p < n; ++p) {
    const int q = mate[p];
    if (q > p) {
      stack.push_back(p);
    } else {
      if (stack.empty() || stack.back() != q) return false;
      stack.pop_back();
    }
  }
  return stack.empty();
}

FlatTangle::FlatTangle(std::vector<int> mate, std::vector<int> loops)
    : mate_(std::move(mate)), loops_(std::move(loops)) {
  const int n = boundary();
  if (n % 2 != 0) throw InputError("flat tangle: odd number of boundary points");
  for (int p = 0; p < n; ++p) {
    const int q = mate_[p];
    if (q < 0 || q >= n || q == p || mate_[q] != p)
      throw InputError("flat tangle: arcs do not form a perfect matching at point " +
                       std::to_string(p));
  }
  if (!is_planar_matching(mate_)) throw InputError("flat tangle: arcs cross");
  std::sort(loops_.begin(), loops_.end());
  if (std::adjacent_find(loops_.begin(), loops_.end()) != loops_.end())
    throw InputError("flat tangle: duplicate loop identifier");

  arc_of_point_.assign(n, -1);
  for (int p = 0; p < n; ++p) {
    if (mate_[p] > p) {
      arc_of_point_[p] = arc_of_point_[mate_[p]] = static_cast<int>(arc_starts_.size());
      arc_starts_.push_back(p);
    }
  }
}

FlatTangle FlatTangle::from_arcs(int boundary, const std::vector<std::pair<int, int>>& arcs,
                                 std::vector<int> loops) {
  std::vector<int> mate(boundary, -1);
  for (auto [p, q] : arcs) {
    if (p < 0 || q < 0 || p >= boundary || q >= boundary || mate[p] != -1 || mate[q] != -1)
      throw InputError("flat tangle: invalid arc list");
    mate[p] = q;
    mate[q] = p;
  }
  return FlatTangle(std::move(mate), std::move(loops));
}

int FlatTangle::loop_index(int id) const {
  auto it = std::lower_bound(loops_.begin(), loops_.end(), id);
  if (it == loops_.end() || *it != id)
    throw InputError("flat tangle: no loop with id " + std::to_string(id));
  return arc_count() + static_cast<int>(it - loops_.begin());
}

bool FlatTangle::has_loop(int id) const {
  return std::binary_search(loops_.begin(), loops_.end(), id);
}

int FlatTangle::index_of(const Circle& c) const {
  if (c.kind == Circle::Kind::Loop) return loop_index(c.key);
  if (c.key < 0 || c.key >= boundary())
    throw InputError("flat tangle: no boundary point " + std::to_string(c.key));
  return arc_index(c.key);
}

FlatTangle FlatTangle::with_loop(int id) const {
  if (has_loop(id)) throw InputError("flat tangle: loop id already present");
  auto loops = loops_;
  loops.push_back(id);
  return FlatTangle(mate_, std::move(loops));
}

FlatTangle FlatTangle::without_loop(int id) const {
  auto loops = loops_;
  auto it = std::find(loops.begin(), loops.end(), id);
  if (it == loops.end()) throw InputError("flat tangle: no loop with id " + std::to_string(id));
  loops.erase(it);
  return FlatTangle(mate_, std::move(loops));
}

std::string FlatTangle::to_string() const {
  std::ostringstream out;
  out << "{";
  for (int i = 0; i < arc_count(); ++i) {
    if (i) out << " ";
    out << arc_starts_[i] << "-" << mate_[arc_starts_[i]];
  }
  for (int id : loops_) out << " O" << id;
  out << "}";
  return out.str();
}

CycleMap::CycleMap(const FlatTangle& source, const FlatTangle& target) {
  const int n = source.boundary();
  if (target.boundary() != n) throw InputError("cobordism: boundary mismatch");
  UnionFind uf(n);
  for (int p = 0; p < n; ++p) {
    uf.merge(p, source.mate()[p]);
    uf.merge(p, target.mate()[p]);
  }
  std::vector<int> cycle_of_root(n, -1);
  std::vector<int> cycle_of_point(n, -1);
  for (int p = 0; p < n; ++p) {
    const int r = uf.find(p);
    if (cycle_of_root[r] < 0) cycle_of_root[r] = arc_cycles++;
    cycle_of_point[p] = cycle_of_root[r];
  }
  source_cycle.resize(source.circle_count());
  target_cycle.resize(target.circle_count());
  for (int i = 0; i < source.arc_count(); ++i)
    source_cycle[i] = cycle_of_point[source.arc_start(i)];
  for (int i = 0; i < target.arc_count(); ++i)
    target_cycle[i] = cycle_of_point[target.arc_start(i)];
  count = arc_cycles;
  for (int i = source.arc_count(); i < source.circle_count(); ++i) source_cycle[i] = count++;
  for (int i = target.arc_count(); i < target.circle_count(); ++i) target_cycle[i] = count++;
}

}  // namespace cobkh

#include "cobkh/tqft.hpp"

#include <bit>
#include <stdexcept>

#include "cobkh/checked.hpp"

namespace cobkh {

namespace {

void require_closed(const FlatTangle& t) {
  if (!t.closed()) throw InputError("tqft: flat tangle has boundary points");
}

// Element a0*1 + a1*X of Z[X]/(X^2).
struct Elem {
  std::int64_t a0 = 1, a1 = 0;
};

Elem times_x(Elem e) { return {0, e.a0}; }

}  // namespace

GradedBasis eval_object(const FlatTangle& t, int shift) {
  require_closed(t);
  const int loops = t.loop_count();
  if (loops > 30) throw std::length_error("tqft: too many loops");
  GradedBasis b;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << loops); ++m) {
    b.masks.push_back(m);
    b.q.push_back(loops - 2 * std::popcount(m) + shift);
  }
  return b;
}

IntMatrix eval_map(const Cobordism& c) {
  require_closed(c.source());
  require_closed(c.target());
  const int ns = c.source().loop_count(), nt = c.target().loop_count();
  IntMatrix m = IntMatrix::Zero(std::int64_t{1} << nt, std::int64_t{1} << ns);
  const CycleMap& cm = c.cycles();
  for (const Term& t : c.terms()) {
    std::uint64_t in = 0, out = 0;
    for (int i = 0; i < ns; ++i)
      if (!(t.mask >> cm.source_cycle[i] & 1)) in |= std::uint64_t{1} << i;
    for (int j = 0; j < nt; ++j)
      if (t.mask >> cm.target_cycle[j] & 1) out |= std::uint64_t{1} << j;
    m(out, in) = checked_add(m(out, in), t.coeff);
  }
  return m;
}

IntMatrix eval_presurface(const PreSurface& p) {
  require_closed(p.source);
  require_closed(p.target);
  const int ns = p.source.loop_count(), nt = p.target.loop_count();
  IntMatrix m = IntMatrix::Zero(std::int64_t{1} << nt, std::int64_t{1} << ns);
  for (std::uint64_t in = 0; in < (std::uint64_t{1} << ns); ++in) {
    // partial outputs: (mask, coefficient)
    std::vector<std::pair<std::uint64_t, std::int64_t>> acc{{0, p.coeff}};
    for (const PreComponent& comp : p.components) {
      Elem y;
      for (int i : comp.source_circles)
        if (in >> i & 1) y = times_x(y);
      for (int k = 0; k < comp.dots; ++k) y = times_x(y);
      for (int g = 0; g < comp.genus; ++g) {
        y = times_x(y);
        y.a1 = checked_mul(y.a1, 2);
      }
      std::vector<std::pair<std::uint64_t, std::int64_t>> dist;
      const auto& outs = comp.target_circles;
      if (outs.empty()) {
        dist.emplace_back(0, y.a1);
      } else {
        std::uint64_t all = 0;
        for (int j : outs) all |= std::uint64_t{1} << j;
        if (y.a1 != 0) dist.emplace_back(all, y.a1);
        if (y.a0 != 0)
          for (int j : outs) dist.emplace_back(all & ~(std::uint64_t{1} << j), y.a0);
      }
      std::vector<std::pair<std::uint64_t, std::int64_t>> next;
      for (const auto& [ma, ca] : acc)
        for (const auto& [mb, cb] : dist)
          if (cb != 0) next.emplace_back(ma | mb, checked_mul(ca, cb));
      acc = std::move(next);
    }
    for (const auto& [out, c] : acc) m(out, in) = checked_add(m(out, in), c);
  }
  return m;
}

int IntComplex::size(int n) const {
  auto it = q.find(n);
  return it == q.end() ? 0 : static_cast<int>(it->second.size());
}

IntMatrix IntComplex::diff(int n) const {
  auto it = d.find(n);
  if (it != d.end()) return it->second;
  return IntMatrix::Zero(size(n + 1), size(n));
}

IntComplex eval_complex(const Complex& c) {
  IntComplex out;
  std::map<int, std::vector<int>> offsets;
  for (const auto& [n, objs] : c.objects) {
    auto& qs = out.q[n];
    auto& off = offsets[n];
    for (const auto& s : objs) {
      off.push_back(static_cast<int>(qs.size()));
      const GradedBasis b = eval_object(s.tangle, s.q);
      qs.insert(qs.end(), b.q.begin(), b.q.end());
    }
  }
  for (const auto& [n, m] : c.d) {
    IntMatrix dm = IntMatrix::Zero(out.size(n + 1), out.size(n));
    for (const auto& [key, x] : m.entries()) {
      const IntMatrix e = eval_map(x);
      dm.block(offsets[n + 1][key.first], offsets[n][key.second], e.rows(), e.cols()) += e;
    }
    out.d.emplace(n, std::move(dm));
  }
  return out;
}

}  // namespace cobkh

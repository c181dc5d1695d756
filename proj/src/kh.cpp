#include "cobkh/kh.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cobkh/union_find.hpp"

namespace cobkh {

namespace {

int local_degree(const TangleDiagram& d, int k, int idx) { return local_complex(d.crossings[k].type)[idx].degree; }

int koszul(const TangleDiagram& d, const State& s, int k) {
  int sum = 0;
  for (int j = 0; j < k; ++j) sum += local_degree(d, j, s[j]);
  return (sum % 2 == 0) ? 1 : -1;
}

int local_sign(CrossingType t, int idx) {
  switch (t) {
    case CrossingType::Neg: return 1;
    case CrossingType::Pos: return -1;
    case CrossingType::Sing: return idx == 1 ? 1 : -1;
    default: break;
  }
  throw std::logic_error("local_sign: smoothing has no differential");
}

Circle slot_circle(const Resolution& r, int label) { return r.tangle.circle(r.circle_of(label)); }

}  // namespace

Cobordism crossing_face(const TangleDiagram& d, const State& state, int k) {
  const auto& lc = local_complex(d.crossings[k].type);
  if (state[k] + 1 >= static_cast<int>(lc.size())) throw std::out_of_range("crossing_face: no face");
  if (lc[state[k]].smoothing == lc[state[k] + 1].smoothing) return phi_at(d, state, k);
  State next = state;
  ++next[k];
  const Resolution a = resolve(d, state);
  const Resolution b = resolve(d, next);
  std::vector<CircleRef> circles;
  for (int l : d.crossings[k].slots) {
    circles.push_back(CircleRef::src(slot_circle(a, l)));
    circles.push_back(CircleRef::tgt(slot_circle(b, l)));
  }
  return local_surface(a.tangle, b.tangle, circles);
}

Cobordism phi_at(const TangleDiagram& d, const State& state, int k) {
  const Resolution r = resolve(d, state);
  const Cobordism id = Cobordism::identity(r.tangle);
  const auto& slots = d.crossings[k].slots;
  return id.with_dot(CircleRef::src(slot_circle(r, slots[0]))) - id.with_dot(CircleRef::src(slot_circle(r, slots[1])));
}

Cobordism phi() {
  const FlatTangle v = FlatTangle::from_arcs(4, {{0, 3}, {1, 2}});
  const Cobordism id = Cobordism::identity(v);
  return id.with_dot(CircleRef::src(Circle::arc(0))) - id.with_dot(CircleRef::src(Circle::arc(1)));
}

Complex kh_complex(const TangleDiagram& d) {
  Complex c;
  c.name = d.name;
  const auto states = enumerate_states(d);
  for (const auto& s : states) c.objects[s.degree].push_back({s.tangle, s.qshift, s.state});
  for (const auto& s : states) {
    const auto [n, col] = *c.find(s.state);
    for (std::size_t k = 0; k < d.crossings.size(); ++k) {
      const auto& lc = local_complex(d.crossings[k].type);
      if (s.state[k] + 1 >= static_cast<int>(lc.size())) continue;
      State next = s.state;
      ++next[k];
      const int row = c.find(next)->second;
      const int sign = local_sign(d.crossings[k].type, s.state[k]) * koszul(d, s.state, static_cast<int>(k));
      auto it = c.d.find(n);
      if (it == c.d.end()) it = c.d.emplace(n, CobMatrix(c.size(n + 1), c.size(n))).first;
      it->second.add(row, col, sign * crossing_face(d, s.state, static_cast<int>(k)));
    }
  }
  return c;
}

ComplexPtr kh_ptr(const TangleDiagram& d) { return std::make_shared<const Complex>(kh_complex(d)); }

HomElement state_map(ComplexPtr source, ComplexPtr target, int degree,
                     const std::function<StateEntries(const State&)>& entries) {
  HomElement f = HomElement::zero(source, target, degree);
  for (const auto& [n, objs] : source->objects) {
    for (int col = 0; col < static_cast<int>(objs.size()); ++col) {
      for (const auto& [t, x] : entries(objs[col].label)) {
        const auto pos = target->find(t);
        if (!pos || pos->first != n + degree) throw std::logic_error("state_map: target state out of place");
        f.add_entry(n, pos->second, col, x);
      }
    }
  }
  return f;
}

HomElement phi_hat(const TangleDiagram& d, const std::string& c, ComplexPtr source, ComplexPtr target) {
  const int k = d.crossing_index(c);
  if (d.crossings[k].type != CrossingType::Neg) throw InputError("phi_hat: crossing '" + c + "' is not negative");
  return state_map(source, target, 0, [&](const State& s) {
    StateEntries out;
    if (s[k] == 1) {
      State t = s;
      t[k] = 0;
      out.emplace_back(t, phi_at(d, s, k));
    }
    return out;
  });
}

HomElement smoothing_change(const TangleDiagram& from, const TangleDiagram& to, const std::string& c,
                            ComplexPtr source, ComplexPtr target) {
  const int k = from.crossing_index(c);
  const auto& slots = from.crossings[k].slots;
  return state_map(source, target, 0, [&](const State& s) {
    const Resolution a = resolve(from, s);
    const Resolution b = resolve(to, s);
    std::vector<CircleRef> circles;
    for (int l : slots) {
      circles.push_back(CircleRef::src(slot_circle(a, l)));
      circles.push_back(CircleRef::tgt(slot_circle(b, l)));
    }
    return StateEntries{{s, local_surface(a.tangle, b.tangle, circles)}};
  });
}

FlatTangle close_tangle(const FlatTangle& t, const std::vector<std::pair<int, int>>& matching) {
  const int n = t.boundary();
  std::vector<int> pm(n, -1);
  for (auto [p, q] : matching) {
    if (p < 0 || q < 0 || p >= n || q >= n || p == q || pm[p] >= 0 || pm[q] >= 0)
      throw InputError("closure: matching is not a perfect matching of the boundary");
    pm[p] = q;
    pm[q] = p;
  }
  if (std::find(pm.begin(), pm.end(), -1) != pm.end())
    throw InputError("closure: matching is not a perfect matching of the boundary");
  if (!is_planar_matching(pm)) throw InputError("closure: matching is not planar");
  UnionFind uf(n);
  for (int p = 0; p < n; ++p) {
    uf.merge(p, t.mate()[p]);
    uf.merge(p, pm[p]);
  }
  std::vector<int> loops = t.loops();
  for (int id : loops)
    if (id >= kClosureLoopBase) throw InputError("closure: loop id collides with closure ids");
  for (int p = 0; p < n; ++p)
    if (uf.find(p) == p) loops.push_back(kClosureLoopBase + p);
  return FlatTangle({}, loops);
}

Cobordism close_cobordism(const Cobordism& c, const std::vector<std::pair<int, int>>& matching) {
  const FlatTangle& S = c.source();
  const FlatTangle& T = c.target();
  const FlatTangle S2 = close_tangle(S, matching);
  const FlatTangle T2 = close_tangle(T, matching);
  const CycleMap& cm = c.cycles();
  UnionFind uf(cm.count);
  for (auto [p, q] : matching) uf.merge(cm.source_cycle[S.arc_index(p)], cm.source_cycle[S.arc_index(q)]);
  std::map<int, int> comp_of_root;
  std::vector<PreComponent> comps;
  std::vector<int> comp_of_cycle(cm.count);
  std::vector<int> chi;
  for (int i = 0; i < cm.count; ++i) {
    const int r = uf.find(i);
    auto [it, fresh] = comp_of_root.emplace(r, static_cast<int>(comps.size()));
    if (fresh) {
      comps.emplace_back();
      chi.push_back(0);
    }
    comp_of_cycle[i] = it->second;
    ++chi[it->second];
  }
  for (auto [p, q] : matching) --chi[comp_of_cycle[cm.source_cycle[S.arc_index(p)]]];
  auto cycle_of_closed = [&](const FlatTangle& orig, const FlatTangle& closed, int idx, const std::vector<int>& side) {
    const int id = closed.loop_id(idx);
    return id >= kClosureLoopBase ? side[orig.arc_index(id - kClosureLoopBase)] : side[orig.loop_index(id)];
  };
  for (int i = 0; i < S2.circle_count(); ++i)
    comps[comp_of_cycle[cycle_of_closed(S, S2, i, cm.source_cycle)]].source_circles.push_back(i);
  for (int j = 0; j < T2.circle_count(); ++j)
    comps[comp_of_cycle[cycle_of_closed(T, T2, j, cm.target_cycle)]].target_circles.push_back(j);
  for (std::size_t k = 0; k < comps.size(); ++k) {
    const int b = static_cast<int>(comps[k].source_circles.size() + comps[k].target_circles.size());
    const int twice = 2 - b - chi[k];
    if (twice < 0 || twice % 2 != 0) throw std::logic_error("close_cobordism: non-orientable gluing");
    comps[k].genus = twice / 2;
  }
  Cobordism out(S2, T2);
  for (const Term& term : c.terms()) {
    PreSurface p{S2, T2, comps, term.coeff};
    for (int i = 0; i < cm.count; ++i)
      if (term.mask >> i & 1) ++p.components[comp_of_cycle[i]].dots;
    out += normalize(p);
  }
  return out;
}

Complex close_complex(const Complex& c, const std::vector<std::pair<int, int>>& matching) {
  Complex out;
  out.name = c.name;
  for (const auto& [n, objs] : c.objects) {
    auto& o = out.objects[n];
    for (const auto& s : objs) o.push_back({close_tangle(s.tangle, matching), s.q, s.label});
  }
  for (const auto& [n, m] : c.d) {
    CobMatrix mm(m.rows(), m.cols());
    for (const auto& [key, x] : m.entries()) mm.add(key.first, key.second, close_cobordism(x, matching));
    if (!mm.is_zero()) out.d.emplace(n, std::move(mm));
  }
  return out;
}

HomElement close_map(const HomElement& f, ComplexPtr source, ComplexPtr target,
                     const std::vector<std::pair<int, int>>& matching) {
  HomElement g = HomElement::zero(source, target, f.degree);
  for (const auto& [n, m] : f.maps)
    for (const auto& [key, x] : m.entries()) g.add_entry(n, key.first, key.second, close_cobordism(x, matching));
  return g;
}

}  // namespace cobkh

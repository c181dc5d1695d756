#include "cobkh/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "cobkh/union_find.hpp"

namespace cobkh {

std::string to_string(CrossingType t) {
  switch (t) {
    case CrossingType::Pos: return "pos";
    case CrossingType::Neg: return "neg";
    case CrossingType::Sing: return "sing";
    case CrossingType::SmoothH: return "smooth_h";
    case CrossingType::SmoothV: return "smooth_v";
  }
  return "?";
}

CrossingType crossing_type_from(const std::string& s) {
  if (s == "pos") return CrossingType::Pos;
  if (s == "neg") return CrossingType::Neg;
  if (s == "sing") return CrossingType::Sing;
  if (s == "smooth_h") return CrossingType::SmoothH;
  if (s == "smooth_v") return CrossingType::SmoothV;
  throw InputError("unknown crossing type '" + s + "'");
}

std::array<int, 4> smoothing_partner(Smoothing s) {
  if (s == Smoothing::V) return {3, 2, 1, 0};
  return {1, 0, 3, 2};
}

const std::vector<LocalState>& local_complex(CrossingType t) {
  using S = Smoothing;
  static const std::vector<LocalState> neg{{S::H, -1, -2}, {S::V, 0, -1}};
  static const std::vector<LocalState> pos{{S::V, 0, 1}, {S::H, 1, 2}};
  static const std::vector<LocalState> sing{{S::H, -2, -2}, {S::V, -1, -1}, {S::V, 0, 1}, {S::H, 1, 2}};
  static const std::vector<LocalState> smooth_h{{S::H, 0, 0}};
  static const std::vector<LocalState> smooth_v{{S::V, 0, 0}};
  switch (t) {
    case CrossingType::Pos: return pos;
    case CrossingType::Neg: return neg;
    case CrossingType::Sing: return sing;
    case CrossingType::SmoothH: return smooth_h;
    case CrossingType::SmoothV: return smooth_v;
  }
  return pos;
}

int TangleDiagram::crossing_index(const std::string& id) const {
  for (std::size_t i = 0; i < crossings.size(); ++i)
    if (crossings[i].id == id) return static_cast<int>(i);
  throw InputError("diagram " + name + ": no crossing '" + id + "'");
}

namespace {

// One occurrence of an edge label: at a crossing slot or a boundary point.
struct End {
  int crossing;  // -1 for boundary
  int slot;      // slot, or boundary point
};

std::string where(const TangleDiagram& d, const End& e) {
  if (e.crossing < 0) return "boundary point " + std::to_string(e.slot);
  return "crossing '" + d.crossings[e.crossing].id + "' slot " + std::to_string(e.slot);
}

std::map<int, std::vector<End>> collect_ends(const TangleDiagram& d) {
  std::map<int, std::vector<End>> ends;
  for (std::size_t c = 0; c < d.crossings.size(); ++c)
    for (int k = 0; k < 4; ++k) ends[d.crossings[c].slots[k]].push_back({static_cast<int>(c), k});
  for (int p = 0; p < d.boundary; ++p) ends[d.boundary_edges[p]].push_back({-1, p});
  return ends;
}

}  // namespace

void validate(TangleDiagram& d) {
  const std::string who = "diagram" + (d.name.empty() ? std::string() : " '" + d.name + "'");
  if (d.boundary < 0 || d.boundary % 2 != 0) throw InputError(who + ": boundary count must be even");
  if (static_cast<int>(d.boundary_edges.size()) != d.boundary)
    throw InputError(who + ": expected " + std::to_string(d.boundary) + " boundary edges");
  if (d.orientation.empty()) d.orientation.assign(d.boundary, 0);
  if (static_cast<int>(d.orientation.size()) != d.boundary)
    throw InputError(who + ": orientation must list every boundary point");
  std::set<std::string> ids;
  for (const auto& c : d.crossings)
    if (c.id.empty() || !ids.insert(c.id).second) throw InputError(who + ": duplicate or empty crossing id '" + c.id + "'");

  auto ends = collect_ends(d);
  for (const auto& [label, es] : ends) {
    if (label < 0) throw InputError(who + ": negative edge label at " + where(d, es.front()));
    if (es.size() != 2)
      throw InputError(who + ": edge " + std::to_string(label) + " has " + std::to_string(es.size()) +
                       " ends (first at " + where(d, es.front()) + ")");
  }
  std::set<int> loop_set;
  for (int l : d.loops) {
    if (l < 0 || ends.count(l) || !loop_set.insert(l).second)
      throw InputError(who + ": loop label " + std::to_string(l) + " reused");
  }

  // orientation: every edge runs from a tail (outgoing slot / incoming boundary) to a head
  for (const auto& [label, es] : ends) {
    int dir[2];
    for (int i = 0; i < 2; ++i) {
      const End& e = es[i];
      if (e.crossing >= 0)
        dir[i] = e.slot < 2 ? -1 : +1;  // +1 tail, -1 head
      else
        dir[i] = d.orientation[e.slot];
    }
    if (dir[0] == 0 && dir[1] == 0) {
      dir[0] = 1;
      dir[1] = -1;
    } else if (dir[0] == 0) {
      dir[0] = -dir[1];
    } else if (dir[1] == 0) {
      dir[1] = -dir[0];
    }
    if (dir[0] == dir[1])
      throw InputError(who + ": inconsistent orientation on edge " + std::to_string(label) + " between " +
                       where(d, es[0]) + " and " + where(d, es[1]));
    for (int i = 0; i < 2; ++i)
      if (es[i].crossing < 0) d.orientation[es[i].slot] = dir[i];
  }

  // planarity: faces of the rotation system, boundary as one vertex seen from outside
  const int nc = static_cast<int>(d.crossings.size());
  const bool has_outer = d.boundary > 0;
  const int nv = nc + (has_outer ? 1 : 0);
  if (nv == 0) return;
  auto degree = [&](int v) { return v < nc ? 4 : d.boundary; };
  auto dart_of = [&](const End& e) -> std::pair<int, int> {
    if (e.crossing >= 0) return {e.crossing, e.slot};
    return {nc, d.boundary - 1 - e.slot};
  };
  std::vector<int> offset(nv + 1, 0);
  for (int v = 0; v < nv; ++v) offset[v + 1] = offset[v] + degree(v);
  std::vector<int> other(offset[nv], -1);
  UnionFind comps(nv);
  for (const auto& [label, es] : ends) {
    auto [v0, i0] = dart_of(es[0]);
    auto [v1, i1] = dart_of(es[1]);
    other[offset[v0] + i0] = offset[v1] + i1;
    other[offset[v1] + i1] = offset[v0] + i0;
    comps.merge(v0, v1);
  }
  std::vector<int> vertex_of(offset[nv]);
  for (int v = 0; v < nv; ++v)
    for (int i = offset[v]; i < offset[v + 1]; ++i) vertex_of[i] = v;
  std::vector<char> seen(offset[nv], 0);
  int faces = 0;
  for (int start = 0; start < offset[nv]; ++start) {
    if (seen[start]) continue;
    ++faces;
    int h = start;
    while (!seen[h]) {
      seen[h] = 1;
      const int t = other[h];
      const int v = vertex_of[t];
      h = offset[v] + (t - offset[v] + 1) % degree(v);
    }
  }
  int components = 0;
  for (int v = 0; v < nv; ++v)
    if (comps.find(v) == v) ++components;
  const int edges = static_cast<int>(ends.size());
  if (nv - edges + faces != 2 * components)
    throw InputError(who + ": rotation system is not planar (Euler characteristic " +
                     std::to_string(nv - edges + faces) + ")");
}

TangleDiagram parse_diagram(const nlohmann::json& j) {
  try {
    TangleDiagram d;
    d.name = j.value("name", "");
    d.boundary = j.at("boundary").get<int>();
    for (const auto& c : j.value("crossings", nlohmann::json::array())) {
      Crossing x;
      x.id = c.at("id").get<std::string>();
      x.type = crossing_type_from(c.at("type").get<std::string>());
      const auto slots = c.at("slots").get<std::vector<int>>();
      if (slots.size() != 4) throw InputError("crossing '" + x.id + "' must have 4 slots");
      std::copy(slots.begin(), slots.end(), x.slots.begin());
      d.crossings.push_back(x);
    }
    d.boundary_edges = j.value("edges", std::vector<int>{});
    d.loops = j.value("loops", std::vector<int>{});
    if (j.contains("orientation")) {
      for (const auto& o : j.at("orientation")) {
        if (o.is_string()) {
          const auto s = o.get<std::string>();
          if (s == "in")
            d.orientation.push_back(1);
          else if (s == "out")
            d.orientation.push_back(-1);
          else
            throw InputError("orientation entries must be \"in\" or \"out\"");
        } else {
          d.orientation.push_back(o.get<int>());
        }
      }
    }
    validate(d);
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("diagram json: ") + e.what());
  }
}

TangleDiagram parse_diagram_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("diagram syntax error: ") + e.what());
  }
  return parse_diagram(j);
}

nlohmann::json diagram_json(const TangleDiagram& d) {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : d.crossings)
    cs.push_back({{"id", c.id}, {"type", to_string(c.type)}, {"slots", c.slots}});
  nlohmann::json orient = nlohmann::json::array();
  for (int o : d.orientation) orient.push_back(o > 0 ? "in" : "out");
  return {{"name", d.name},     {"boundary", d.boundary}, {"crossings", cs},
          {"edges", d.boundary_edges}, {"loops", d.loops},  {"orientation", orient}};
}

int Resolution::circle_of(int label) const {
  auto it = std::lower_bound(edge_labels.begin(), edge_labels.end(), label);
  if (it == edge_labels.end() || *it != label) throw InputError("resolution: unknown edge " + std::to_string(label));
  return circle_of_edge[it - edge_labels.begin()];
}

Resolution resolve_smoothings(const TangleDiagram& d, const std::vector<Smoothing>& smoothings) {
  if (smoothings.size() != d.crossings.size()) throw InputError("resolve: state does not cover the crossings");
  Resolution r;
  for (const auto& c : d.crossings)
    for (int l : c.slots) r.edge_labels.push_back(l);
  for (int l : d.boundary_edges) r.edge_labels.push_back(l);
  for (int l : d.loops) r.edge_labels.push_back(l);
  std::sort(r.edge_labels.begin(), r.edge_labels.end());
  r.edge_labels.erase(std::unique(r.edge_labels.begin(), r.edge_labels.end()), r.edge_labels.end());
  auto idx = [&](int label) {
    return static_cast<int>(std::lower_bound(r.edge_labels.begin(), r.edge_labels.end(), label) - r.edge_labels.begin());
  };
  const int n = static_cast<int>(r.edge_labels.size());
  UnionFind uf(n);
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    const auto partner = smoothing_partner(smoothings[c]);
    for (int k = 0; k < 4; ++k) uf.merge(idx(d.crossings[c].slots[k]), idx(d.crossings[c].slots[partner[k]]));
  }
  std::vector<int> mate(d.boundary, -1);
  std::map<int, int> first_point;
  for (int p = 0; p < d.boundary; ++p) {
    const int root = uf.find(idx(d.boundary_edges[p]));
    auto [it, inserted] = first_point.emplace(root, p);
    if (!inserted) {
      mate[p] = it->second;
      mate[it->second] = p;
    }
  }
  // roots are minimal indices, hence minimal labels
  std::vector<int> loop_ids;
  for (int i = 0; i < n; ++i)
    if (uf.find(i) == i && !first_point.count(i)) loop_ids.push_back(r.edge_labels[i]);
  r.tangle = FlatTangle(mate, loop_ids);
  r.circle_of_edge.resize(n);
  for (int i = 0; i < n; ++i) {
    const int root = uf.find(i);
    auto it = first_point.find(root);
    r.circle_of_edge[i] = it != first_point.end() ? r.tangle.arc_index(it->second)
                                                  : r.tangle.loop_index(r.edge_labels[root]);
  }
  return r;
}

Resolution resolve(const TangleDiagram& d, const State& state) {
  if (state.size() != d.crossings.size()) throw InputError("resolve: state does not cover the crossings");
  std::vector<Smoothing> sm;
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    const auto& lc = local_complex(d.crossings[c].type);
    if (state[c] < 0 || state[c] >= static_cast<int>(lc.size())) throw InputError("resolve: local index out of range");
    sm.push_back(lc[state[c]].smoothing);
  }
  return resolve_smoothings(d, sm);
}

std::vector<StateInfo> enumerate_states(const TangleDiagram& d) {
  std::vector<StateInfo> out;
  const std::size_t n = d.crossings.size();
  State s(n, 0);
  while (true) {
    StateInfo info{s, resolve(d, s).tangle, 0, 0};
    for (std::size_t c = 0; c < n; ++c) {
      const auto& ls = local_complex(d.crossings[c].type)[s[c]];
      info.degree += ls.degree;
      info.qshift += ls.qshift;
    }
    out.push_back(std::move(info));
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++s[k] < static_cast<int>(local_complex(d.crossings[k].type).size())) break;
      s[k] = 0;
      if (k == 0) return out;
    }
    if (n == 0) return out;
  }
}

TangleDiagram closure(const TangleDiagram& d, const std::vector<std::pair<int, int>>& matching) {
  std::vector<int> mate(d.boundary, -1);
  for (auto [p, q] : matching) {
    if (p < 0 || q < 0 || p >= d.boundary || q >= d.boundary || p == q || mate[p] >= 0 || mate[q] >= 0)
      throw InputError("closure: invalid matching");
    mate[p] = q;
    mate[q] = p;
  }
  if (std::count(mate.begin(), mate.end(), -1) != 0) throw InputError("closure: matching must cover the boundary");
  if (!is_planar_matching(mate)) throw InputError("closure: matching is not planar");
  TangleDiagram out = d;
  out.name = d.name.empty() ? "" : d.name + "_closed";
  auto relabel = [&](int from, int to) {
    for (auto& c : out.crossings)
      for (auto& l : c.slots)
        if (l == from) l = to;
    for (auto& l : out.boundary_edges)
      if (l == from) l = to;
  };
  for (auto [p, q] : matching) {
    if (d.orientation[p] == d.orientation[q])
      throw InputError("closure: points " + std::to_string(p) + " and " + std::to_string(q) +
                       " have the same orientation");
    const int lp = out.boundary_edges[p];
    const int lq = out.boundary_edges[q];
    if (lp == lq) {
      out.loops.push_back(lp);
    } else {
      relabel(lq, lp);
    }
    out.boundary_edges[p] = out.boundary_edges[q] = -1;
  }
  out.boundary = 0;
  out.boundary_edges.clear();
  out.orientation.clear();
  validate(out);
  return out;
}

TangleDiagram with_type(const TangleDiagram& d, const std::string& id, CrossingType t) {
  TangleDiagram out = d;
  out.crossings[out.crossing_index(id)].type = t;
  return out;
}

TangleDiagram braid_diagram(const std::string& name, int strands, const std::vector<BraidStep>& steps,
                            const std::vector<std::string>& order) {
  TangleDiagram d;
  d.name = name;
  d.boundary = 2 * strands;
  std::vector<int> cur(strands);
  for (int i = 0; i < strands; ++i) cur[i] = i;
  int next = strands;
  std::vector<Crossing> built;
  for (const auto& st : steps) {
    if (st.pos < 1 || st.pos >= strands) throw InputError("braid: position out of range");
    Crossing c;
    c.id = st.id;
    c.type = st.type;
    const int tr = next++;
    const int tl = next++;
    c.slots = {cur[st.pos - 1], cur[st.pos], tr, tl};
    cur[st.pos - 1] = tl;
    cur[st.pos] = tr;
    built.push_back(c);
  }
  if (order.empty()) {
    d.crossings = built;
  } else {
    for (const auto& id : order) {
      auto it = std::find_if(built.begin(), built.end(), [&](const Crossing& c) { return c.id == id; });
      if (it == built.end()) throw InputError("braid: unknown crossing in order");
      d.crossings.push_back(*it);
    }
    if (d.crossings.size() != built.size()) throw InputError("braid: order must list every crossing");
  }
  d.boundary_edges.assign(d.boundary, -1);
  d.orientation.assign(d.boundary, 0);
  for (int i = 0; i < strands; ++i) {
    d.boundary_edges[i] = i;
    d.orientation[i] = 1;
    d.boundary_edges[2 * strands - (i + 1)] = cur[i];
    d.orientation[2 * strands - (i + 1)] = -1;
  }
  validate(d);
  return d;
}

}  // namespace cobkh

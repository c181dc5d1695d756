#include "cobkh/cobordism.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "cobkh/checked.hpp"
#include "cobkh/union_find.hpp"

namespace cobkh {

namespace {

using Alt = std::pair<std::uint64_t, std::int64_t>;

std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

// Normal form of one component with the given boundary cycles.
void component_alternatives(std::uint64_t cycles, int genus, int dots, std::vector<Alt>& out) {
  out.clear();
  const int e = genus + dots;
  if (e >= 2) return;
  const std::int64_t c = std::int64_t{1} << genus;
  if (cycles == 0) {
    if (e == 1) out.emplace_back(0, c);
    return;
  }
  if (e == 1) {
    out.emplace_back(cycles, c);
    return;
  }
  for (std::uint64_t rest = cycles; rest; rest &= rest - 1) {
    const std::uint64_t low = rest & (~rest + 1);
    out.emplace_back(cycles & ~low, c);
  }
}

// Tensor product of per-component alternatives (disjoint supports).
void tensor_in(std::vector<Alt>& acc, const std::vector<Alt>& alts, std::vector<Alt>& scratch) {
  scratch.clear();
  for (const auto& [m1, c1] : acc)
    for (const auto& [m2, c2] : alts) scratch.emplace_back(m1 | m2, checked_mul(c1, c2));
  acc.swap(scratch);
}

std::shared_ptr<const CycleMap> make_cycles(const FlatTangle& s, const FlatTangle& t) {
  auto cm = std::make_shared<const CycleMap>(s, t);
  if (cm->count > 64) throw InputError("cobordism: more than 64 boundary cycles");
  return cm;
}

int twin_in(const FlatTangle& from, int circle, const FlatTangle& to) {
  if (from.is_loop(circle)) {
    const int id = from.loop_id(circle);
    return to.has_loop(id) ? to.loop_index(id) : -1;
  }
  const int p = from.arc_start(circle);
  const int q = from.mate()[p];
  return to.mate()[p] == q ? to.arc_index(p) : -1;
}

std::string circle_name(const FlatTangle& t, int circle, char side) {
  std::ostringstream out;
  out << side << ':';
  if (t.is_loop(circle)) {
    out << 'O' << t.loop_id(circle);
  } else {
    const int p = t.arc_start(circle);
    out << p << '-' << t.mate()[p];
  }
  return out.str();
}

}  // namespace

Cobordism::Cobordism(FlatTangle source, FlatTangle target)
    : source_(std::move(source)), target_(std::move(target)) {
  cycles_ = make_cycles(source_, target_);
}

Cobordism Cobordism::identity(const FlatTangle& t) {
  PreSurface p{t, t, {}, 1};
  for (int i = 0; i < t.circle_count(); ++i) p.components.push_back({{i}, {i}, 0, 0});
  return normalize(p);
}

Cobordism Cobordism::basis(const FlatTangle& source, const FlatTangle& target, std::uint64_t mask,
                           std::int64_t coeff) {
  Cobordism c(source, target);
  c.add_term(mask, coeff);
  return c;
}

int Cobordism::term_qdeg(std::uint64_t mask) const {
  return cycles_->count - source_.boundary() / 2 - 2 * std::popcount(mask);
}

std::optional<int> Cobordism::qdeg() const {
  if (terms_.empty()) return std::nullopt;
  const int q = term_qdeg(terms_.front().mask);
  for (const auto& t : terms_)
    if (term_qdeg(t.mask) != q) return std::nullopt;
  return q;
}

bool Cobordism::homogeneous() const { return terms_.empty() || qdeg().has_value(); }

void Cobordism::add_term(std::uint64_t mask, std::int64_t coeff) {
  if (coeff == 0) return;
  if (cycles_->count < 64 && (mask >> cycles_->count) != 0)
    throw std::invalid_argument("cobordism: dot mask outside cycle range");
  auto it = std::lower_bound(terms_.begin(), terms_.end(), mask,
                             [](const Term& t, std::uint64_t m) { return t.mask < m; });
  if (it != terms_.end() && it->mask == mask) {
    it->coeff = checked_add(it->coeff, coeff);
    if (it->coeff == 0) terms_.erase(it);
  } else {
    terms_.insert(it, Term{mask, coeff});
  }
}

int Cobordism::cycle_of(const CircleRef& ref) const {
  if (ref.side == CircleRef::Side::Source) return cycles_->source_cycle[source_.index_of(ref.circle)];
  return cycles_->target_cycle[target_.index_of(ref.circle)];
}

Cobordism Cobordism::with_dot(const CircleRef& where) const {
  const std::uint64_t b = bit(cycle_of(where));
  Cobordism out(source_, target_);
  out.cycles_ = cycles_;
  for (const auto& t : terms_)
    if (!(t.mask & b)) out.terms_.push_back({t.mask | b, t.coeff});
  std::sort(out.terms_.begin(), out.terms_.end(),
            [](const Term& x, const Term& y) { return x.mask < y.mask; });
  return out;
}

Cobordism Cobordism::attach_tube(const CircleRef& a, const CircleRef& b) const {
  if (cycle_of(a) == cycle_of(b)) return std::int64_t{2} * with_dot(a);
  return with_dot(a) + with_dot(b);
}

Cobordism& Cobordism::operator+=(const Cobordism& other) {
  if (!(source_ == other.source_) || !(target_ == other.target_))
    throw InputError("cobordism: adding morphisms with different source/target");
  if (terms_.empty()) {
    terms_ = other.terms_;
    return *this;
  }
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto i = terms_.begin();
  auto j = other.terms_.begin();
  while (i != terms_.end() || j != other.terms_.end()) {
    if (j == other.terms_.end() || (i != terms_.end() && i->mask < j->mask)) {
      merged.push_back(*i++);
    } else if (i == terms_.end() || j->mask < i->mask) {
      merged.push_back(*j++);
    } else {
      const std::int64_t c = checked_add(i->coeff, j->coeff);
      if (c != 0) merged.push_back({i->mask, c});
      ++i;
      ++j;
    }
  }
  terms_.swap(merged);
  return *this;
}

Cobordism& Cobordism::operator-=(const Cobordism& other) { return *this += -other; }

Cobordism& Cobordism::operator*=(std::int64_t k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff = checked_mul(t.coeff, k);
  return *this;
}

bool operator==(const Cobordism& a, const Cobordism& b) {
  return a.source_ == b.source_ && a.target_ == b.target_ && a.terms_ == b.terms_;
}

Cobordism operator*(const Cobordism& g, const Cobordism& f) {
  const FlatTangle& A = f.source();
  const FlatTangle& B = f.target();
  const FlatTangle& C = g.target();
  if (!(g.source() == B))
    throw InputError("compose: target " + B.to_string() + " does not match source " +
                     g.source().to_string());
  Cobordism out(A, C);
  if (f.is_zero() || g.is_zero()) return out;

  const CycleMap& ab = f.cycles();
  const CycleMap& bc = g.cycles();
  const CycleMap& ac = out.cycles();
  const int nab = ab.count;
  UnionFind uf(nab + bc.count);
  for (int i = 0; i < B.circle_count(); ++i) uf.merge(ab.target_cycle[i], nab + bc.source_cycle[i]);

  struct Comp {
    std::uint64_t ab = 0, bc = 0, ac = 0;
    int chi = 0;
    int boundary = 0;
    int genus = 0;
  };
  std::vector<int> comp_of(nab + bc.count, -1);
  std::vector<Comp> comps;
  for (int v = 0; v < nab + bc.count; ++v) {
    const int r = uf.find(v);
    if (comp_of[r] < 0) {
      comp_of[r] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    Comp& c = comps[comp_of[r]];
    if (v < nab)
      c.ab |= bit(v);
    else
      c.bc |= bit(v - nab);
    c.chi += 1;
  }
  auto comp_index = [&](int v) { return comp_of[uf.find(v)]; };
  for (int i = 0; i < B.arc_count(); ++i) comps[comp_index(ab.target_cycle[i])].chi -= 1;
  for (int i = 0; i < A.circle_count(); ++i) comps[comp_index(ab.source_cycle[i])].ac |= bit(ac.source_cycle[i]);
  for (int i = 0; i < C.circle_count(); ++i)
    comps[comp_index(nab + bc.target_cycle[i])].ac |= bit(ac.target_cycle[i]);
  for (auto& c : comps) {
    c.boundary = std::popcount(c.ac);
    const int twice = 2 - c.boundary - c.chi;
    if (twice < 0 || twice % 2 != 0) throw std::logic_error("compose: inconsistent Euler characteristic");
    c.genus = twice / 2;
  }

  std::vector<Alt> acc, alts, scratch;
  std::map<std::uint64_t, std::int64_t> sum;
  for (const auto& tf : f.terms()) {
    for (const auto& tg : g.terms()) {
      acc.assign(1, {0, checked_mul(tf.coeff, tg.coeff)});
      for (const auto& c : comps) {
        const int dots = std::popcount(tf.mask & c.ab) + std::popcount(tg.mask & c.bc);
        component_alternatives(c.ac, c.genus, dots, alts);
        if (alts.empty()) {
          acc.clear();
          break;
        }
        if (alts.size() == 1 && alts[0].first == 0 && alts[0].second == 1) continue;
        tensor_in(acc, alts, scratch);
      }
      for (const auto& [m, k] : acc) sum[m] = checked_add(sum[m], k);
    }
  }
  for (const auto& [m, k] : sum)
    if (k != 0) out.terms_.push_back({m, k});
  return out;
}

Cobordism compose(const Cobordism& f, const Cobordism& g) { return g * f; }

namespace {

struct Shape {
  std::int64_t coeff;
  std::vector<std::uint64_t> cycles;
  std::vector<int> genus;
  std::vector<int> dots;
};

Shape shape_of(const PreSurface& p, const CycleMap& cm) {
  Shape s{p.coeff, {}, {}, {}};
  std::vector<int> used_s(p.source.circle_count(), 0), used_t(p.target.circle_count(), 0);
  std::uint64_t seen = 0;
  for (const auto& comp : p.components) {
    if (comp.genus < 0 || comp.dots < 0) throw InputError("presurface: negative genus or dots");
    std::uint64_t m = 0;
    for (int i : comp.source_circles) {
      if (i < 0 || i >= p.source.circle_count() || used_s[i]++)
        throw InputError("presurface: source circle used twice or out of range");
      m |= bit(cm.source_cycle[i]);
    }
    for (int i : comp.target_circles) {
      if (i < 0 || i >= p.target.circle_count() || used_t[i]++)
        throw InputError("presurface: target circle used twice or out of range");
      m |= bit(cm.target_cycle[i]);
    }
    if (m & seen) throw InputError("presurface: components share a boundary cycle");
    seen |= m;
    s.cycles.push_back(m);
    s.genus.push_back(comp.genus);
    s.dots.push_back(comp.dots);
  }
  const std::uint64_t all = cm.count == 64 ? ~std::uint64_t{0} : bit(cm.count) - 1;
  if (seen != all) throw InputError("presurface: some circles are not covered");
  return s;
}

}  // namespace

Cobordism normalize(const PreSurface& p) {
  Cobordism out(p.source, p.target);
  const Shape s = shape_of(p, out.cycles());
  std::vector<Alt> acc{{0, s.coeff}}, alts, scratch;
  for (std::size_t i = 0; i < s.cycles.size() && !acc.empty(); ++i) {
    component_alternatives(s.cycles[i], s.genus[i], s.dots[i], alts);
    tensor_in(acc, alts, scratch);
  }
  for (const auto& [m, k] : acc) out.add_term(m, k);
  return out;
}

Cobordism normalize_by_rewriting(const PreSurface& p, std::mt19937_64& rng) {
  Cobordism out(p.source, p.target);
  const Shape s = shape_of(p, out.cycles());
  struct C {
    std::uint64_t cycles;
    int genus;
    int dots;
  };
  struct State {
    std::int64_t coeff;
    std::vector<C> comps;
  };
  std::vector<State> pending;
  {
    State st{s.coeff, {}};
    for (std::size_t i = 0; i < s.cycles.size(); ++i) st.comps.push_back({s.cycles[i], s.genus[i], s.dots[i]});
    pending.push_back(std::move(st));
  }
  auto reduced = [](const C& c) { return c.genus == 0 && c.dots <= 1 && std::popcount(c.cycles) == 1; };
  while (!pending.empty()) {
    std::uniform_int_distribution<std::size_t> pick_state(0, pending.size() - 1);
    const std::size_t si = pick_state(rng);
    State st = std::move(pending[si]);
    pending[si] = std::move(pending.back());
    pending.pop_back();
    if (st.coeff == 0) continue;

    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < st.comps.size(); ++i)
      if (!reduced(st.comps[i])) open.push_back(i);
    if (open.empty()) {
      std::uint64_t m = 0;
      for (const auto& c : st.comps)
        if (c.dots) m |= c.cycles;
      out.add_term(m, st.coeff);
      continue;
    }
    const std::size_t ci = open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)];
    C c = st.comps[ci];
    if (c.dots >= 2) continue;  // dot squared
    if (c.genus > 0 && (c.dots == 0 || rng() % 2)) {
      // handle = 2 dot
      st.comps[ci] = {c.cycles, c.genus - 1, c.dots + 1};
      st.coeff = checked_mul(st.coeff, 2);
      pending.push_back(std::move(st));
      continue;
    }
    if (c.genus > 0) continue;  // genus with a dot: handle gives dot squared
    if (c.cycles == 0) {
      if (c.dots == 0) continue;  // sphere
      st.comps.erase(st.comps.begin() + static_cast<std::ptrdiff_t>(ci));
      pending.push_back(std::move(st));
      continue;
    }
    // neck cut along a random split of the boundary cycles
    std::vector<int> bits;
    for (std::uint64_t r = c.cycles; r; r &= r - 1) bits.push_back(std::countr_zero(r));
    std::uint64_t left = 0;
    while (left == 0 || left == c.cycles) {
      left = 0;
      for (int b : bits)
        if (rng() % 2) left |= bit(b);
    }
    const std::uint64_t right = c.cycles & ~left;
    const bool dots_left = rng() % 2;
    for (int side = 0; side < 2; ++side) {
      State next = st;
      C l{left, 0, dots_left ? c.dots : 0};
      C r{right, 0, dots_left ? 0 : c.dots};
      (side == 0 ? l : r).dots += 1;
      next.comps[ci] = l;
      next.comps.push_back(r);
      pending.push_back(std::move(next));
    }
  }
  return out;
}

PreSurface to_presurface(const Cobordism& c, std::size_t term) {
  const Term& t = c.terms().at(term);
  const CycleMap& cm = c.cycles();
  PreSurface p{c.source(), c.target(), std::vector<PreComponent>(cm.count), t.coeff};
  for (int i = 0; i < c.source().circle_count(); ++i) p.components[cm.source_cycle[i]].source_circles.push_back(i);
  for (int i = 0; i < c.target().circle_count(); ++i) p.components[cm.target_cycle[i]].target_circles.push_back(i);
  for (int k = 0; k < cm.count; ++k) p.components[k].dots = (t.mask >> k) & 1;
  return p;
}

Cobordism surface(const FlatTangle& source, const FlatTangle& target, const std::vector<SurfacePiece>& pieces) {
  PreSurface p{source, target, {}, 1};
  std::vector<char> in_s(source.circle_count(), 0), in_t(target.circle_count(), 0);
  for (const auto& piece : pieces) {
    PreComponent comp;
    comp.dots = piece.dots;
    for (const auto& ref : piece.circles) {
      if (ref.side == CircleRef::Side::Source) {
        const int i = source.index_of(ref.circle);
        if (in_s[i]++) throw InputError("cobordism: circle " + circle_name(source, i, 's') + " listed twice");
        comp.source_circles.push_back(i);
      } else {
        const int i = target.index_of(ref.circle);
        if (in_t[i]++) throw InputError("cobordism: circle " + circle_name(target, i, 't') + " listed twice");
        comp.target_circles.push_back(i);
      }
    }
    p.components.push_back(std::move(comp));
  }
  for (int i = 0; i < source.circle_count(); ++i) {
    if (in_s[i]) continue;
    const int j = twin_in(source, i, target);
    if (j < 0 || in_t[j]) throw InputError("cobordism: circle " + circle_name(source, i, 's') + " has no twin");
    in_t[j] = 1;
    p.components.push_back({{i}, {j}, 0, 0});
  }
  for (int j = 0; j < target.circle_count(); ++j)
    if (!in_t[j]) throw InputError("cobordism: circle " + circle_name(target, j, 't') + " has no twin");
  return normalize(p);
}

Cobordism local_surface(const FlatTangle& source, const FlatTangle& target,
                        const std::vector<CircleRef>& circles, int dots) {
  // duplicates allowed here
  std::vector<CircleRef> unique;
  std::vector<char> seen_s(source.circle_count(), 0), seen_t(target.circle_count(), 0);
  for (const auto& ref : circles) {
    auto& seen = ref.side == CircleRef::Side::Source ? seen_s : seen_t;
    const int i = (ref.side == CircleRef::Side::Source ? source : target).index_of(ref.circle);
    if (!seen[i]++) unique.push_back(ref);
  }
  return surface(source, target, {{unique, dots}});
}

Cobordism saddle(const FlatTangle& source, const FlatTangle& target) {
  std::vector<CircleRef> changed;
  for (int i = 0; i < source.circle_count(); ++i)
    if (twin_in(source, i, target) < 0)
      changed.push_back(CircleRef::src(source.is_loop(i) ? Circle::loop(source.loop_id(i))
                                                          : Circle::arc(source.arc_start(i))));
  for (int j = 0; j < target.circle_count(); ++j)
    if (twin_in(target, j, source) < 0)
      changed.push_back(CircleRef::tgt(target.is_loop(j) ? Circle::loop(target.loop_id(j))
                                                          : Circle::arc(target.arc_start(j))));
  if (changed.empty()) throw InputError("saddle: source and target coincide");
  Cobordism c = local_surface(source, target, changed);
  if (c.qdeg() != -1) throw InputError("saddle: tangles do not differ by one reconnection");
  return c;
}

Cobordism birth(const FlatTangle& t, int id) {
  return local_surface(t, t.with_loop(id), {CircleRef::tgt(Circle::loop(id))});
}

Cobordism death(const FlatTangle& t, int id) {
  return local_surface(t, t.without_loop(id), {CircleRef::src(Circle::loop(id))});
}

Cobordism dot(const FlatTangle& t, const Circle& c) {
  return Cobordism::identity(t).with_dot(CircleRef::src(c));
}

std::string Cobordism::to_string() const {
  std::ostringstream out;
  out << source_.to_string() << " -> " << target_.to_string() << ": ";
  if (terms_.empty()) return out.str() + "0";
  std::vector<std::vector<std::string>> names(cycles_->count);
  for (int i = 0; i < source_.circle_count(); ++i)
    names[cycles_->source_cycle[i]].push_back(circle_name(source_, i, 's'));
  for (int i = 0; i < target_.circle_count(); ++i)
    names[cycles_->target_cycle[i]].push_back(circle_name(target_, i, 't'));
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) out << " + ";
    first = false;
    out << t.coeff << "*[";
    for (int k = 0; k < cycles_->count; ++k) {
      if (k) out << " ";
      out << "(";
      for (std::size_t j = 0; j < names[k].size(); ++j) out << (j ? " " : "") << names[k][j];
      out << ")" << (((t.mask >> k) & 1) ? "*" : "");
    }
    out << "]";
  }
  return out.str();
}

nlohmann::json flat_tangle_json(const FlatTangle& t) {
  nlohmann::json arcs = nlohmann::json::array();
  for (int i = 0; i < t.arc_count(); ++i) arcs.push_back({t.arc_start(i), t.mate()[t.arc_start(i)]});
  return {{"boundary", t.boundary()}, {"arcs", arcs}, {"loops", t.loops()}};
}

nlohmann::json cobordism_json(const Cobordism& c) {
  const CycleMap& cm = c.cycles();
  std::vector<nlohmann::json> circles(cm.count, nlohmann::json::array());
  for (int i = 0; i < c.source().circle_count(); ++i)
    circles[cm.source_cycle[i]].push_back(circle_name(c.source(), i, 's'));
  for (int i = 0; i < c.target().circle_count(); ++i)
    circles[cm.target_cycle[i]].push_back(circle_name(c.target(), i, 't'));
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : c.terms()) {
    nlohmann::json comps = nlohmann::json::array();
    for (int k = 0; k < cm.count; ++k)
      comps.push_back({{"circles", circles[k]}, {"dot", static_cast<int>((t.mask >> k) & 1)}});
    terms.push_back({{"coeff", t.coeff}, {"components", comps}});
  }
  return {{"source", flat_tangle_json(c.source())},
          {"target", flat_tangle_json(c.target())},
          {"terms", terms}};
}

}  // namespace cobkh

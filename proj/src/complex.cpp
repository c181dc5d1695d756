#include "cobkh/complex.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace cobkh {

using LabelMap = std::function<std::vector<int>(const std::vector<int>&)>;

std::string label_string(const std::vector<int>& label) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < label.size(); ++i) out << (i ? "," : "") << label[i];
  out << ")";
  return out.str();
}

const Cobordism* CobMatrix::find(int r, int c) const {
  auto it = entries_.find({r, c});
  return it == entries_.end() ? nullptr : &it->second;
}

void CobMatrix::add(int r, int c, const Cobordism& x) {
  if (x.is_zero()) return;
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("CobMatrix: entry out of range");
  auto it = entries_.find({r, c});
  if (it == entries_.end()) {
    entries_.emplace(Key{r, c}, x);
    return;
  }
  it->second += x;
  if (it->second.is_zero()) entries_.erase(it);
}

void CobMatrix::set(int r, int c, Cobordism x) {
  entries_.erase({r, c});
  add(r, c, x);
}

void CobMatrix::scale(std::int64_t k) {
  if (k == 0) {
    entries_.clear();
    return;
  }
  for (auto& [key, x] : entries_) x *= k;
}

CobMatrix multiply(const CobMatrix& a, const CobMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("CobMatrix: shape mismatch in product");
  CobMatrix out(a.rows(), b.cols());
  std::map<int, std::vector<std::pair<int, const Cobordism*>>> by_col;
  for (const auto& [key, x] : a.entries()) by_col[key.second].emplace_back(key.first, &x);
  for (const auto& [key, y] : b.entries()) {
    auto it = by_col.find(key.first);
    if (it == by_col.end()) continue;
    for (const auto& [r, x] : it->second) out.add(r, key.second, *x * y);
  }
  return out;
}

const std::vector<Summand>& Complex::at(int n) const {
  static const std::vector<Summand> empty;
  auto it = objects.find(n);
  return it == objects.end() ? empty : it->second;
}

std::optional<std::pair<int, int>> Complex::degree_range() const {
  std::optional<std::pair<int, int>> r;
  for (const auto& [n, s] : objects) {
    if (s.empty()) continue;
    if (!r) r = std::pair{n, n};
    r->first = std::min(r->first, n);
    r->second = std::max(r->second, n);
  }
  return r;
}

CobMatrix Complex::diff(int n) const {
  auto it = d.find(n);
  if (it != d.end()) return it->second;
  return CobMatrix(size(n + 1), size(n));
}

int Complex::total_summands() const {
  int t = 0;
  for (const auto& [n, s] : objects) t += static_cast<int>(s.size());
  return t;
}

std::optional<std::pair<int, int>> Complex::find(const std::vector<int>& label) const {
  if (static_cast<int>(index_.size()) != total_summands()) {
    index_.clear();
    for (const auto& [n, s] : objects)
      for (std::size_t i = 0; i < s.size(); ++i) index_[s[i].label] = {n, static_cast<int>(i)};
  }
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool same_objects(const Complex& a, const Complex& b) {
  if (&a == &b) return true;
  auto ra = a.degree_range();
  auto rb = b.degree_range();
  if (ra != rb) return false;
  if (!ra) return true;
  for (int n = ra->first; n <= ra->second; ++n) {
    const auto& x = a.at(n);
    const auto& y = b.at(n);
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!(x[i].tangle == y[i].tangle) || x[i].q != y[i].q) return false;
  }
  return true;
}

Witness check_complex(const Complex& c) {
  Witness w;
  const std::string who = c.name.empty() ? "complex" : c.name;
  for (const auto& [n, m] : c.d) {
    if (m.rows() != c.size(n + 1) || m.cols() != c.size(n)) {
      w.push_back(who + ": differential at degree " + std::to_string(n) + " has wrong shape");
      continue;
    }
    for (const auto& [key, x] : m.entries()) {
      const Summand& s = c.at(n)[key.second];
      const Summand& t = c.at(n + 1)[key.first];
      if (!(x.source() == s.tangle) || !(x.target() == t.tangle)) {
        w.push_back(who + ": entry " + std::to_string(n) + ":" + label_string(t.label) + "<-" +
                    label_string(s.label) + " has wrong source/target");
        continue;
      }
      auto q = x.qdeg();
      if (!q || *q != s.q - t.q)
        w.push_back(who + ": entry " + std::to_string(n) + ":" + label_string(t.label) + "<-" +
                    label_string(s.label) + " is not q-homogeneous of degree " + std::to_string(s.q - t.q) +
                    ": " + x.to_string());
    }
  }
  for (const auto& [n, m] : c.d) {
    auto it = c.d.find(n + 1);
    if (it == c.d.end()) continue;
    const CobMatrix dd = multiply(it->second, m);
    for (const auto& [key, x] : dd.entries())
      w.push_back(who + ": d^2 != 0 at degree " + std::to_string(n) + " entry " +
                  label_string(c.at(n + 2)[key.first].label) + "<-" + label_string(c.at(n)[key.second].label) +
                  ": " + x.to_string());
  }
  return w;
}

HomElement HomElement::zero(std::shared_ptr<const Complex> s, std::shared_ptr<const Complex> t, int degree) {
  HomElement h;
  h.source = std::move(s);
  h.target = std::move(t);
  h.degree = degree;
  return h;
}

HomElement HomElement::identity(std::shared_ptr<const Complex> c) {
  HomElement h = zero(c, c, 0);
  for (const auto& [n, s] : c->objects)
    for (std::size_t i = 0; i < s.size(); ++i)
      h.add_entry(n, static_cast<int>(i), static_cast<int>(i), Cobordism::identity(s[i].tangle));
  return h;
}

CobMatrix HomElement::at(int n) const {
  auto it = maps.find(n);
  if (it != maps.end()) return it->second;
  return CobMatrix(target->size(n + degree), source->size(n));
}

bool HomElement::is_zero() const {
  for (const auto& [n, m] : maps)
    if (!m.is_zero()) return false;
  return true;
}

void HomElement::add_entry(int n, int row, int col, const Cobordism& x) {
  if (x.is_zero()) return;
  auto it = maps.find(n);
  if (it == maps.end()) it = maps.emplace(n, CobMatrix(target->size(n + degree), source->size(n))).first;
  it->second.add(row, col, x);
}

namespace {

void require_parallel(const HomElement& a, const HomElement& b) {
  if (a.degree != b.degree) throw std::invalid_argument("HomElement: degree mismatch");
  if (!same_objects(*a.source, *b.source) || !same_objects(*a.target, *b.target))
    throw std::invalid_argument("HomElement: source/target mismatch");
}

}  // namespace

HomElement& HomElement::operator+=(const HomElement& o) {
  require_parallel(*this, o);
  for (const auto& [n, m] : o.maps)
    for (const auto& [key, x] : m.entries()) add_entry(n, key.first, key.second, x);
  return *this;
}

HomElement& HomElement::operator-=(const HomElement& o) { return *this += -o; }

HomElement& HomElement::operator*=(std::int64_t k) {
  for (auto& [n, m] : maps) m.scale(k);
  return *this;
}

HomElement compose(const HomElement& g, const HomElement& f) {
  if (!same_objects(*f.target, *g.source)) throw std::invalid_argument("compose: complexes do not match");
  HomElement out = HomElement::zero(f.source, g.target, f.degree + g.degree);
  for (const auto& [n, m] : f.maps) {
    auto it = g.maps.find(n + f.degree);
    if (it == g.maps.end()) continue;
    CobMatrix p = multiply(it->second, m);
    if (!p.is_zero()) out.maps.emplace(n, std::move(p));
  }
  return out;
}

HomElement hom_differential(const HomElement& f) {
  HomElement out = HomElement::zero(f.source, f.target, f.degree + 1);
  const std::int64_t sign = (f.degree % 2 == 0) ? -1 : 1;
  for (const auto& [n, m] : f.maps) {
    auto it = f.target->d.find(n + f.degree);
    if (it == f.target->d.end()) continue;
    const CobMatrix p = multiply(it->second, m);
    for (const auto& [key, x] : p.entries()) out.add_entry(n, key.first, key.second, x);
  }
  for (const auto& [n, dm] : f.source->d) {
    auto it = f.maps.find(n + 1);
    if (it == f.maps.end()) continue;
    const CobMatrix p = multiply(it->second, dm);
    for (const auto& [key, x] : p.entries()) out.add_entry(n, key.first, key.second, sign * x);
  }
  return out;
}

bool is_chain_map(const HomElement& f) { return hom_differential(f).is_zero(); }

Witness compare(const HomElement& a, const HomElement& b) {
  Witness w;
  const HomElement diff = a - b;
  for (const auto& [n, m] : diff.maps) {
    for (const auto& [key, x] : m.entries()) {
      const auto& src = a.source->at(n)[key.second];
      const auto& tgt = a.target->at(n + a.degree)[key.first];
      const CobMatrix ma = a.at(n), mb = b.at(n);
      const Cobordism* xa = ma.find(key.first, key.second);
      const Cobordism* xb = mb.find(key.first, key.second);
      w.push_back("degree " + std::to_string(n) + " entry " + label_string(tgt.label) + "<-" +
                  label_string(src.label) + ": lhs " + (xa ? xa->to_string() : "0") + " | rhs " +
                  (xb ? xb->to_string() : "0"));
      if (w.size() >= 8) return w;
    }
  }
  return w;
}

bool verify_homotopy(const HomElement& f, const HomElement& g, const HomElement& h) {
  return compare(hom_differential(h), f - g).empty();
}

std::optional<int> internal_qdeg(const HomElement& f) {
  std::optional<int> q;
  for (const auto& [n, m] : f.maps) {
    for (const auto& [key, x] : m.entries()) {
      auto e = x.qdeg();
      if (!e) return std::nullopt;
      const int v = *e + f.target->at(n + f.degree)[key.first].q - f.source->at(n)[key.second].q;
      if (q && *q != v) return std::nullopt;
      q = v;
    }
  }
  return q;
}

namespace {

std::vector<int> prefixed(int tag, const std::vector<int>& l) {
  std::vector<int> out{tag};
  out.insert(out.end(), l.begin(), l.end());
  return out;
}

}  // namespace

Complex cone(const HomElement& f) {
  if (f.degree != 0) throw std::invalid_argument("cone: map must have degree 0");
  if (!is_chain_map(f)) throw std::invalid_argument("cone: map is not a chain map");
  const Complex& S = *f.source;
  const Complex& T = *f.target;
  Complex out;
  std::set<int> degrees;
  for (const auto& [n, s] : T.objects)
    if (!s.empty()) degrees.insert(n);
  for (const auto& [n, s] : S.objects)
    if (!s.empty()) degrees.insert(n - 1);
  for (int n : degrees) {
    auto& objs = out.objects[n];
    for (const auto& s : T.at(n)) objs.push_back({s.tangle, s.q, prefixed(0, s.label)});
    for (const auto& s : S.at(n + 1)) objs.push_back({s.tangle, s.q, prefixed(1, s.label)});
  }
  for (int n : degrees) {
    if (!degrees.count(n + 1)) continue;
    CobMatrix m(out.size(n + 1), out.size(n));
    const int tn = T.size(n), tn1 = T.size(n + 1);
    for (const auto& [key, x] : T.diff(n).entries()) m.add(key.first, key.second, x);
    for (const auto& [key, x] : f.at(n + 1).entries()) m.add(key.first, tn + key.second, x);
    for (const auto& [key, x] : S.diff(n + 1).entries()) m.add(tn1 + key.first, tn + key.second, -x);
    if (!m.is_zero()) out.d.emplace(n, std::move(m));
  }
  out.name = "cone";
  return out;
}

Complex shift(const Complex& c, int h, int q) {
  Complex out;
  out.name = c.name;
  for (const auto& [n, s] : c.objects) {
    auto& objs = out.objects[n - h];
    for (const auto& x : s) objs.push_back({x.tangle, x.q + q, x.label});
  }
  for (const auto& [n, m] : c.d) {
    CobMatrix mm = m;
    if (h % 2 != 0) mm.scale(-1);
    out.d.emplace(n - h, std::move(mm));
  }
  return out;
}

Complex direct_sum(const Complex& a, const Complex& b) {
  Complex out;
  std::set<int> degrees;
  for (const auto& [n, s] : a.objects) degrees.insert(n);
  for (const auto& [n, s] : b.objects) degrees.insert(n);
  for (int n : degrees) {
    auto& objs = out.objects[n];
    for (const auto& s : a.at(n)) objs.push_back({s.tangle, s.q, prefixed(0, s.label)});
    for (const auto& s : b.at(n)) objs.push_back({s.tangle, s.q, prefixed(1, s.label)});
  }
  for (int n : degrees) {
    CobMatrix m(out.size(n + 1), out.size(n));
    for (const auto& [key, x] : a.diff(n).entries()) m.add(key.first, key.second, x);
    for (const auto& [key, x] : b.diff(n).entries())
      m.add(a.size(n + 1) + key.first, a.size(n) + key.second, x);
    if (!m.is_zero()) out.d.emplace(n, std::move(m));
  }
  return out;
}

HomElement transport(const HomElement& f, std::shared_ptr<const Complex> new_source,
                     std::shared_ptr<const Complex> new_target, const LabelMap& src_label,
                     const LabelMap& tgt_label, std::int64_t sign) {
  auto locate = [](const Complex& c, const std::vector<int>& l) {
    auto pos = c.find(l);
    if (!pos) throw std::invalid_argument("transport: no summand with label " + label_string(l));
    return *pos;
  };
  // degree offsets from any summand on each side
  int src_off = 0, tgt_off = 0;
  for (const auto& [n, s] : f.source->objects)
    if (!s.empty()) {
      src_off = locate(*new_source, src_label(s.front().label)).first - n;
      break;
    }
  for (const auto& [n, s] : f.target->objects)
    if (!s.empty()) {
      tgt_off = locate(*new_target, tgt_label(s.front().label)).first - n;
      break;
    }
  HomElement out = HomElement::zero(new_source, new_target, f.degree + tgt_off - src_off);
  for (const auto& [n, m] : f.maps) {
    for (const auto& [key, x] : m.entries()) {
      const auto s = locate(*new_source, src_label(f.source->at(n)[key.second].label));
      const auto t = locate(*new_target, tgt_label(f.target->at(n + f.degree)[key.first].label));
      if (s.first != n + src_off || t.first != n + f.degree + tgt_off)
        throw std::invalid_argument("transport: label translation is not degree-uniform");
      const Summand& ns = new_source->at(s.first)[s.second];
      const Summand& nt = new_target->at(t.first)[t.second];
      if (!(ns.tangle == x.source()) || !(nt.tangle == x.target()))
        throw std::invalid_argument("transport: tangle mismatch at " + label_string(ns.label));
      out.add_entry(s.first, t.second, s.second, sign * x);
    }
  }
  return out;
}

HomElement cone_map(const HomElement& f, const HomElement& fprime, const HomElement& alpha,
                    const HomElement& beta, const std::optional<HomElement>& h,
                    std::shared_ptr<const Complex> src_cone, std::shared_ptr<const Complex> tgt_cone) {
  (void)f;
  (void)fprime;
  auto tag = [](int t) { return [t](const std::vector<int>& l) { return prefixed(t, l); }; };
  HomElement out = transport(beta, src_cone, tgt_cone, tag(0), tag(0));
  out += transport(alpha, src_cone, tgt_cone, tag(1), tag(1));
  if (h) out += transport(*h, src_cone, tgt_cone, tag(1), tag(0));
  return out;
}

Witness check_square(const Square& s) {
  Witness w = compare(s.right * s.top, s.bottom * s.left);
  for (auto& line : w) line = "square does not commute: " + line;
  return w;
}

namespace {

HomElement block_diag(const HomElement& upper, const HomElement& lower, std::shared_ptr<const Complex> src,
                      std::shared_ptr<const Complex> tgt) {
  auto tag = [](int t) { return [t](const std::vector<int>& l) { return prefixed(t, l); }; };
  HomElement out = transport(upper, src, tgt, tag(0), tag(0));
  out += transport(lower, src, tgt, tag(1), tag(1));
  return out;
}

}  // namespace

Complex total_complex(const Square& s) {
  if (!check_square(s).empty()) throw std::invalid_argument("total_complex: square does not commute");
  auto top = std::make_shared<const Complex>(cone(s.top));
  auto bottom = std::make_shared<const Complex>(cone(s.bottom));
  Complex out = cone(block_diag(s.right, s.left, top, bottom));
  out.name = "total";
  return out;
}

Complex total_complex_columns(const Square& s) {
  if (!check_square(s).empty()) throw std::invalid_argument("total_complex: square does not commute");
  auto left = std::make_shared<const Complex>(cone(s.left));
  auto right = std::make_shared<const Complex>(cone(s.right));
  Complex out = cone(block_diag(s.bottom, s.top, left, right));
  out.name = "total_columns";
  return out;
}

HomElement total_rows_to_columns(const Square& s, std::shared_ptr<const Complex> rows,
                                 std::shared_ptr<const Complex> cols) {
  (void)s;
  HomElement out = HomElement::zero(rows, cols, 0);
  for (const auto& [n, objs] : rows->objects) {
    for (std::size_t i = 0; i < objs.size(); ++i) {
      std::vector<int> l = objs[i].label;
      int sign = 1;
      if (l[0] == 0 && l[1] == 1) {
        l[0] = 1;
        l[1] = 0;
      } else if (l[0] == 1 && l[1] == 0) {
        l[0] = 0;
        l[1] = 1;
      } else if (l[0] == 1 && l[1] == 1) {
        sign = -1;
      }
      auto pos = cols->find(l);
      if (!pos || pos->first != n) throw std::invalid_argument("total_rows_to_columns: summand mismatch");
      out.add_entry(n, pos->second, static_cast<int>(i), sign * Cobordism::identity(objs[i].tangle));
    }
  }
  return out;
}

HomElement total_map(const Square& from, const Square& to, const HomElement& a, const HomElement& b,
                     const HomElement& c, const HomElement& d, std::shared_ptr<const Complex> from_tot,
                     std::shared_ptr<const Complex> to_tot) {
  (void)from;
  (void)to;
  auto tag = [](int t0, int t1) {
    return [t0, t1](const std::vector<int>& l) { return prefixed(t0, prefixed(t1, l)); };
  };
  HomElement out = transport(d, from_tot, to_tot, tag(0, 0), tag(0, 0));
  out += transport(c, from_tot, to_tot, tag(0, 1), tag(0, 1));
  out += transport(b, from_tot, to_tot, tag(1, 0), tag(1, 0));
  out += transport(a, from_tot, to_tot, tag(1, 1), tag(1, 1));
  return out;
}

Witness match_complexes(const Complex& a, const Complex& b, const LabelMap& label_map,
                        const std::function<int(const std::vector<int>&)>& sign_of) {
  Witness w;
  if (a.total_summands() != b.total_summands()) {
    w.push_back("summand counts differ: " + std::to_string(a.total_summands()) + " vs " +
                std::to_string(b.total_summands()));
    return w;
  }
  std::map<std::pair<int, int>, std::pair<int, int>> pos;
  for (const auto& [n, objs] : a.objects) {
    for (std::size_t i = 0; i < objs.size(); ++i) {
      const auto l = label_map(objs[i].label);
      auto p = b.find(l);
      if (!p || p->first != n) {
        w.push_back("no summand " + label_string(l) + " at degree " + std::to_string(n));
        continue;
      }
      const Summand& t = b.at(p->first)[p->second];
      if (!(t.tangle == objs[i].tangle) || t.q != objs[i].q)
        w.push_back("summand " + label_string(l) + " differs in tangle or q");
      pos[{n, static_cast<int>(i)}] = *p;
    }
  }
  if (!w.empty()) return w;
  auto sign = [&](const std::vector<int>& l) { return sign_of ? sign_of(l) : 1; };
  std::map<int, CobMatrix> mapped;
  for (const auto& [n, m] : a.d) {
    for (const auto& [key, x] : m.entries()) {
      const auto src = pos.at({n, key.second});
      const auto tgt = pos.at({n + 1, key.first});
      auto it = mapped.find(n);
      if (it == mapped.end()) it = mapped.emplace(n, CobMatrix(b.size(n + 1), b.size(n))).first;
      const int s = sign(a.at(n)[key.second].label) * sign(a.at(n + 1)[key.first].label);
      it->second.add(tgt.second, src.second, std::int64_t{s} * x);
    }
  }
  std::set<int> degrees;
  for (const auto& [n, m] : mapped) degrees.insert(n);
  for (const auto& [n, m] : b.d) degrees.insert(n);
  for (int n : degrees) {
    const CobMatrix bm = b.diff(n);
    auto it = mapped.find(n);
    const CobMatrix am = it == mapped.end() ? CobMatrix(b.size(n + 1), b.size(n)) : it->second;
    std::set<CobMatrix::Key> keys;
    for (const auto& [k, x] : am.entries()) keys.insert(k);
    for (const auto& [k, x] : bm.entries()) keys.insert(k);
    for (const auto& k : keys) {
      const Cobordism* x = am.find(k.first, k.second);
      const Cobordism* y = bm.find(k.first, k.second);
      if (x && y && *x == *y) continue;
      w.push_back("differential differs at degree " + std::to_string(n) + " entry " +
                  label_string(b.at(n + 1)[k.first].label) + "<-" + label_string(b.at(n)[k.second].label) +
                  ": " + (x ? x->to_string() : "0") + " vs " + (y ? y->to_string() : "0"));
      if (w.size() >= 8) return w;
    }
  }
  return w;
}

nlohmann::json complex_json(const Complex& c) {
  nlohmann::json degrees = nlohmann::json::array();
  for (const auto& [n, objs] : c.objects) {
    nlohmann::json summands = nlohmann::json::array();
    for (const auto& s : objs)
      summands.push_back({{"label", s.label}, {"q", s.q}, {"tangle", flat_tangle_json(s.tangle)}});
    nlohmann::json diff = nlohmann::json::array();
    auto it = c.d.find(n);
    if (it != c.d.end())
      for (const auto& [key, x] : it->second.entries())
        diff.push_back({{"row", key.first}, {"col", key.second}, {"cobordism", cobordism_json(x)}});
    degrees.push_back({{"degree", n}, {"summands", summands}, {"differential", diff}});
  }
  return {{"name", c.name}, {"degrees", degrees}};
}

nlohmann::json hom_json(const HomElement& f) {
  nlohmann::json maps = nlohmann::json::array();
  for (const auto& [n, m] : f.maps) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [key, x] : m.entries())
      entries.push_back({{"source", f.source->at(n)[key.second].label},
                         {"target", f.target->at(n + f.degree)[key.first].label},
                         {"cobordism", cobordism_json(x)}});
    maps.push_back({{"degree", n}, {"entries", entries}});
  }
  return {{"source", f.source->name}, {"target", f.target->name}, {"degree", f.degree}, {"maps", maps}};
}

}  // namespace cobkh

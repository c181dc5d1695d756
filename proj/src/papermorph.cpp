#include "cobkh/papermorph.hpp"

#include <stdexcept>

#include "cobkh/builtins.hpp"

namespace cobkh {

char flavor_char(Flavor f) { return f == Flavor::O ? 'O' : 'U'; }

Cobordism phi_lr(char side) {
  const FlatTangle id3 = FlatTangle::from_arcs(6, {{0, 5}, {1, 4}, {2, 3}});
  const Cobordism id = Cobordism::identity(id3);
  const int first = side == 'L' ? 0 : 1;
  return id.with_dot(CircleRef::src(Circle::arc(first))) - id.with_dot(CircleRef::src(Circle::arc(first + 1)));
}

HomElement retarget(const HomElement& f, ComplexPtr source, ComplexPtr target) {
  auto same_shape = [](const Complex& a, const Complex& b) {
    if (a.objects.size() != b.objects.size()) return false;
    for (const auto& [n, objs] : a.objects) {
      const auto& other = b.at(n);
      if (other.size() != objs.size()) return false;
      for (std::size_t i = 0; i < objs.size(); ++i)
        if (!(objs[i].tangle == other[i].tangle)) return false;
    }
    return true;
  };
  if (!same_shape(*f.source, *source) || !same_shape(*f.target, *target))
    throw std::invalid_argument("retarget: complexes have different shapes");
  HomElement g = f;
  g.source = std::move(source);
  g.target = std::move(target);
  return g;
}

namespace {

std::string slice_name(Flavor f, char side, char smoothing) {
  return std::string("slice_") + flavor_char(f) + side + "_" + smoothing;
}

Flavor flavor_of(const std::string& name) {
  const char c = name.back() == '-' || name.back() == '+' ? name[name.size() - 2] : name.back();
  if (c == 'O') return Flavor::O;
  if (c == 'U') return Flavor::U;
  throw InputError("unknown morphism '" + name + "'");
}

}  // namespace

MorphismBook::MorphismBook(Catalog catalog) : catalog_(std::move(catalog)) {}

const TangleDiagram& MorphismBook::diagram(const std::string& name) {
  auto it = diagrams_.find(name);
  if (it == diagrams_.end()) it = diagrams_.emplace(name, builtin(name)).first;
  return it->second;
}

ComplexPtr MorphismBook::kh(const std::string& name) {
  auto it = complexes_.find(name);
  if (it == complexes_.end()) it = complexes_.emplace(name, kh_ptr(diagram(name))).first;
  return it->second;
}

const TangleDiagram& MorphismBook::slice_diagram(Flavor f, char side, char smoothing) {
  return diagram(slice_name(f, side, smoothing));
}

ComplexPtr MorphismBook::slice(Flavor f, char side, char smoothing) { return kh(slice_name(f, side, smoothing)); }

ComplexPtr MorphismBook::shifted_slice(Flavor f, char side, char smoothing, int q) {
  const std::string key = slice_name(f, side, smoothing) + "{" + std::to_string(q) + "}";
  auto it = complexes_.find(key);
  if (it == complexes_.end())
    it = complexes_.emplace(key, std::make_shared<const Complex>(shift(*slice(f, side, smoothing), 0, q))).first;
  return it->second;
}

HomElement MorphismBook::delta_minus(Flavor f, char side) {
  const std::string key = std::string("delta-") + flavor_char(f) + side;
  auto it = maps_.find(key);
  if (it == maps_.end())
    it = maps_.emplace(key, smoothing_change(slice_diagram(f, side, 'H'), slice_diagram(f, side, 'V'), "c",
                                             slice(f, side, 'H'), slice(f, side, 'V')))
             .first;
  return it->second;
}

HomElement MorphismBook::delta_plus(Flavor f, char side) {
  const std::string key = std::string("delta+") + flavor_char(f) + side;
  auto it = maps_.find(key);
  if (it == maps_.end())
    it = maps_.emplace(key, smoothing_change(slice_diagram(f, side, 'V'), slice_diagram(f, side, 'H'), "c",
                                             slice(f, side, 'V'), slice(f, side, 'H')))
             .first;
  return it->second;
}

HomElement MorphismBook::phi(Flavor f, char side) {
  const std::string key = std::string("Phi") + flavor_char(f) + side;
  auto it = maps_.find(key);
  if (it == maps_.end()) {
    const TangleDiagram& d = slice_diagram(f, side, 'V');
    const int k = d.crossing_index("c");
    ComplexPtr v = slice(f, side, 'V');
    it = maps_.emplace(key, state_map(v, v, 0, [&](const State& s) {
                         return StateEntries{{s, phi_at(d, s, k)}};
                       })).first;
  }
  return it->second;
}

HomElement MorphismBook::assemble(const std::string& name) {
  const Flavor f = flavor_of(name);
  const std::string base = name.substr(0, name.find('_'));
  const std::string suffix = name.substr(name.find('_') + 2);  // "", "-" or "+"
  char src = 'H', tgt = 'H';
  int degree = 0;
  if (base == "gamma") {
    src = tgt = 'H';
  } else if (base == "omega") {
    src = tgt = 'V';
  } else if (base == "F" || base == "Psi") {
    degree = base == "F" ? -1 : -2;
    if (suffix == "-") {
      src = 'H';
      tgt = 'V';
    } else if (suffix == "+") {
      src = 'V';
      tgt = 'H';
    } else {
      throw InputError("unknown morphism '" + name + "'");
    }
  } else if (base == "G") {
    src = tgt = 'V';
    degree = -1;
  } else {
    throw InputError("unknown morphism '" + name + "'");
  }
  ComplexPtr S = slice(f, 'L', src);
  ComplexPtr T = slice(f, 'R', tgt);
  HomElement out = HomElement::zero(S, T, degree);
  auto state = [](const std::string& xy) {
    if (xy.size() != 2) throw InputError("catalog: bad state '" + xy + "'");
    return State{0, xy[0] - '0', xy[1] - '0'};
  };
  for (const CatalogTerm& t : catalog_) {
    if (t.morphism != name) continue;
    const auto sp = S->find(state(t.from));
    const auto tp = T->find(state(t.to));
    if (!sp || !tp || sp->first != t.degree || tp->first != t.degree + degree)
      throw InputError("catalog: term of " + name + " at " + t.from + "->" + t.to + " is misplaced");
    const FlatTangle& a = S->at(sp->first)[sp->second].tangle;
    const FlatTangle& b = T->at(tp->first)[tp->second].tangle;
    out.add_entry(sp->first, tp->second, sp->second, t.coeff * draw(t.picture, a, b));
  }
  return out;
}

HomElement MorphismBook::component(const std::string& name) {
  auto it = maps_.find(name);
  if (it == maps_.end()) it = maps_.emplace(name, assemble(name)).first;
  return it->second;
}

HomElement MorphismBook::r3_component(Flavor f, const std::string& name) {
  const std::string fl(1, flavor_char(f));
  if (name == "gamma") return component("gamma_" + fl);
  if (name == "omega") return component("omega_" + fl);
  if (name == "F_minus") return component("F_" + fl + "-");
  if (name == "F_plus") return component("F_" + fl + "+");
  throw InputError("unknown R3 component '" + name + "'");
}

HomElement MorphismBook::r4_component(Flavor f, const std::string& name) {
  const std::string fl(1, flavor_char(f));
  if (name == "G") return component("G_" + fl);
  if (name == "Psi_minus") return component("Psi_" + fl + "-");
  if (name == "Psi_plus") return component("Psi_" + fl + "+");
  if (name == "psi") return psi(f);
  throw InputError("unknown R4 component '" + name + "'");
}

std::string MorphismBook::r3_name(Flavor f, char side, int sign) {
  const std::string s = side == 'L' ? "r3_left_" : "r3_right_";
  if (f == Flavor::O) return s + (sign < 0 ? "MLR" : "MRL");
  return s + (sign < 0 ? "LRM" : "RLM");
}

std::string MorphismBook::r4_name(Flavor f, char side) {
  return std::string("sing_4T_") + flavor_char(f) + side;
}

Complex MorphismBook::r3_cone(Flavor f, char side, int sign) {
  if (sign < 0)
    return cone(retarget(delta_minus(f, side), shifted_slice(f, side, 'H', -2), shifted_slice(f, side, 'V', -1)));
  return shift(cone(retarget(delta_plus(f, side), shifted_slice(f, side, 'V', 1), shifted_slice(f, side, 'H', 2))),
               -1, 0);
}

std::vector<int> MorphismBook::cone_to_state(Flavor, int, const std::vector<int>& label) const {
  // part 0 is the saddle's target: V for the negative corner (index 1) and
  // H for the positive corner (index 1)
  return {1 - label.at(0), label.at(2), label.at(3)};
}

HomElement MorphismBook::r3_equiv(Flavor f, int sign) {
  const std::string key = std::string("R3") + flavor_char(f) + (sign < 0 ? "-" : "+");
  auto it = maps_.find(key);
  if (it != maps_.end()) return it->second;
  auto src_cone = std::make_shared<const Complex>(r3_cone(f, 'L', sign));
  auto tgt_cone = std::make_shared<const Complex>(r3_cone(f, 'R', sign));
  const HomElement gamma = r3_component(f, "gamma");
  const HomElement omega = r3_component(f, "omega");
  HomElement on_cones = sign < 0 ? cone_map(delta_minus(f, 'L'), delta_minus(f, 'R'), gamma, -omega,
                                            -r3_component(f, "F_minus"), src_cone, tgt_cone)
                                 : cone_map(delta_plus(f, 'L'), delta_plus(f, 'R'), omega, gamma,
                                            -r3_component(f, "F_plus"), src_cone, tgt_cone);
  auto to_state = [&](const std::vector<int>& l) { return cone_to_state(f, sign, l); };
  HomElement out =
      transport(on_cones, kh(r3_name(f, 'L', sign)), kh(r3_name(f, 'R', sign)), to_state, to_state);
  return maps_.emplace(key, out).first->second;
}

HomElement MorphismBook::phi_hat_c(Flavor f, char side) {
  return phi_hat(r3_name(f, side, -1), "c", r3_name(f, side, 1));
}

HomElement MorphismBook::phi_hat(const std::string& from, const std::string& c, const std::string& to) {
  const std::string key = "PhiHat:" + from + ":" + c + ":" + to;
  auto it = maps_.find(key);
  if (it != maps_.end()) return it->second;
  const TangleDiagram& d = diagram(from);
  const TangleDiagram& e = diagram(to);
  if (!(with_type(d, c, CrossingType::Pos).crossings.size() == e.crossings.size()))
    throw InputError("phi_hat: diagrams do not match");
  return maps_.emplace(key, cobkh::phi_hat(d, c, kh(from), kh(to))).first->second;
}

HomElement MorphismBook::psi(Flavor f) {
  const std::string key = std::string("psi_") + flavor_char(f);
  auto it = maps_.find(key);
  if (it != maps_.end()) return it->second;
  ComplexPtr S = kh(r3_name(f, 'L', -1));
  ComplexPtr T = kh(r3_name(f, 'R', 1));
  // slice state (0, a, b) -> corner state (c, a, b)
  auto at = [](int c) { return [c](const std::vector<int>& l) { return std::vector<int>{c, l[1], l[2]}; }; };
  // [Psi+ 0; G Psi-] under the cone identifications
  HomElement out = transport(r4_component(f, "Psi_plus"), S, T, at(1), at(1));
  out += transport(r4_component(f, "G"), S, T, at(1), at(0));
  out += transport(r4_component(f, "Psi_minus"), S, T, at(0), at(0));
  return maps_.emplace(key, out).first->second;
}

HomElement MorphismBook::r4_equiv(Flavor f) {
  const std::string key = std::string("R4") + flavor_char(f);
  auto it = maps_.find(key);
  if (it != maps_.end()) return it->second;
  const HomElement pl = phi_hat_c(f, 'L');
  const HomElement pr = phi_hat_c(f, 'R');
  auto src_cone = std::make_shared<const Complex>(cone(pl));
  auto tgt_cone = std::make_shared<const Complex>(cone(pr));
  const HomElement m = cone_map(pl, pr, r3_equiv(f, -1), r3_equiv(f, 1), -psi(f), src_cone, tgt_cone);
  // cone label (part, c, a, b) -> singular state: Pos part shifts c by 2
  auto to_state = [](const std::vector<int>& l) {
    return std::vector<int>{l.at(1) + (l.at(0) == 0 ? 2 : 0), l.at(2), l.at(3)};
  };
  HomElement out = transport(m, kh(r4_name(f, 'L')), kh(r4_name(f, 'R')), to_state, to_state);
  return maps_.emplace(key, out).first->second;
}

}  // namespace cobkh

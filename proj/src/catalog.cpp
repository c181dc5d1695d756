#include "cobkh/catalog.hpp"

#include <charconv>

namespace cobkh {

namespace {

CircleRef parse_circle(const std::string& name) {
  auto bad = [&] { return InputError("catalog: bad circle name '" + name + "'"); };
  if (name.size() < 3 || name[1] != ':' || (name[0] != 's' && name[0] != 't')) throw bad();
  const bool src = name[0] == 's';
  const std::string body = name.substr(2);
  auto number = [&](const std::string& s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) throw bad();
    return v;
  };
  Circle c;
  if (body[0] == 'O') {
    c = Circle::loop(number(body.substr(1)));
  } else {
    const auto dash = body.find('-');
    if (dash == std::string::npos) throw bad();
    c = Circle::arc(number(body.substr(0, dash)));
    number(body.substr(dash + 1));
  }
  return src ? CircleRef::src(c) : CircleRef::tgt(c);
}

// Shorthands for the tables below.
PicComponent comp(std::vector<std::string> circles, int dots = 0) { return {std::move(circles), dots}; }
CatalogTerm term(const char* m, int deg, const char* from, const char* to, int coeff, std::vector<PicComponent> pic) {
  return {m, deg, from, to, coeff, Picture{std::move(pic)}};
}

}  // namespace

Cobordism draw(const Picture& p, const FlatTangle& source, const FlatTangle& target) {
  std::vector<SurfacePiece> pieces;
  for (const auto& c : p.components) {
    SurfacePiece piece{{}, c.dots};
    for (const auto& name : c.circles) {
      const CircleRef ref = parse_circle(name);
      const FlatTangle& t = ref.side == CircleRef::Side::Source ? source : target;
      const int i = t.index_of(ref.circle);
      if (ref.circle.kind == Circle::Kind::Arc) {
        // both endpoints must match the named arc
        const int q = std::stoi(name.substr(name.find('-') + 1));
        if (t.mate()[ref.circle.key] != q) throw InputError("catalog: no arc '" + name + "'");
      }
      (void)i;
      piece.circles.push_back(ref);
    }
    pieces.push_back(std::move(piece));
  }
  return surface(source, target, pieces);
}

const std::vector<std::string>& catalog_morphisms() {
  static const std::vector<std::string> names = {"gamma_O", "omega_O", "F_O-", "F_O+", "G_O", "Psi_O-", "Psi_O+",
                                                 "gamma_U", "omega_U", "F_U-", "F_U+", "G_U", "Psi_U-", "Psi_U+"};
  return names;
}

// States are written "xy": x is the smoothing index of crossing a, y of
// crossing b. Circles: s:/t: for source/target, arcs by endpoints, loops by
// id.
//
// Left O slices:  V: 00 {0-1 2-3 4-5}, 01 {0-5 1-4 2-3}, 10 {0-1 2-3 4-5 O3},
//                    11 {0-1 2-3 4-5}
//                 H: 00 {0-3 1-2 4-5}, 01 {0-5 1-2 3-4}, 10 {0-1 2-3 4-5},
//                    11 {0-1 2-5 3-4}
// Right O slices: V: 00 {0-5 1-2 3-4}, 01 {0-5 1-2 3-4 O3}, 10 {0-5 1-4 2-3},
//                    11 {0-5 1-2 3-4}
//                 H: same tangles as the left H slice.
// Left U slices:  V: 00 {0-1 2-3 4-5}, 01 {0-1 2-3 4-5 O3}, 10 {0-5 1-4 2-3},
//                    11 {0-1 2-3 4-5}
//                 H: 00 {0-1 2-5 3-4}, 01 {0-1 2-3 4-5}, 10 {0-5 1-2 3-4},
//                    11 {0-3 1-2 4-5}
// Right U slices: V: 00 {0-5 1-2 3-4}, 01 {0-5 1-4 2-3}, 10 {0-5 1-2 3-4 O3},
//                    11 {0-5 1-2 3-4}
//                 H: same tangles as the left H slice.
const Catalog& default_catalog() {
  static const Catalog c = {
      // gamma_O: identities between equal H-slice states
      term("gamma_O", -1, "00", "00", 1, {}),
      term("gamma_O", 0, "01", "01", 1, {}),
      term("gamma_O", 0, "10", "10", -1, {}),
      term("gamma_O", 1, "11", "11", -1, {}),

      // omega_O: identity on the trivial state, saddle then birth, death then
      // saddle, and the composite through the trivial state
      term("omega_O", 0, "01", "10", 1, {}),
      term("omega_O", 0, "01", "01", 1, {comp({"s:1-4", "s:2-3", "t:1-2", "t:3-4"}), comp({"t:O3"})}),
      term("omega_O", 0, "10", "10", 1, {comp({"s:O3"}), comp({"s:0-1", "s:4-5", "t:0-5", "t:1-4"})}),
      term("omega_O", 0, "10", "01", 1,
           {comp({"s:O3"}), comp({"s:0-1", "s:2-3", "s:4-5", "t:0-5", "t:1-2", "t:3-4"}), comp({"t:O3"})}),

      // F_O-: identity, and a saddle with a birth
      term("F_O-", 0, "01", "00", 1, {}),
      term("F_O-", 1, "11", "01", -1, {comp({"s:0-1", "s:2-5", "t:0-5", "t:1-2"}), comp({"t:O3"})}),
      // F_O+: death with a saddle, and minus the identity
      term("F_O+", 0, "10", "00", 1, {comp({"s:0-1", "s:2-3", "t:0-3", "t:1-2"}), comp({"s:O3"})}),
      term("F_O+", 1, "11", "10", -1, {}),

      term("G_O", 0, "01", "00", 1, {comp({"s:1-4", "s:2-3", "t:1-2", "t:3-4"})}),
      term("G_O", 0, "10", "00", 1, {comp({"s:0-1", "s:2-3", "s:4-5", "t:0-5", "t:1-2", "t:3-4"}), comp({"s:O3"})}),
      term("G_O", 1, "11", "01", 1, {comp({"s:0-1", "s:2-3", "s:4-5", "t:0-5", "t:1-2", "t:3-4"}), comp({"t:O3"})}),
      term("G_O", 1, "11", "10", 1, {comp({"s:0-1", "s:4-5", "t:0-5", "t:1-4"})}),

      term("Psi_O-", 1, "11", "00", -1, {comp({"s:0-1", "s:2-5", "t:0-5", "t:1-2"})}),
      term("Psi_O+", 1, "11", "00", -1, {comp({"s:0-1", "s:2-3", "t:0-3", "t:1-2"})}),

      term("gamma_U", -1, "00", "00", 1, {}),
      term("gamma_U", 0, "01", "01", 1, {}),
      term("gamma_U", 0, "10", "10", -1, {}),
      term("gamma_U", 1, "11", "11", -1, {}),

      term("omega_U", 0, "10", "01", 1, {}),
      term("omega_U", 0, "10", "10", -1, {comp({"s:1-4", "s:2-3", "t:1-2", "t:3-4"}), comp({"t:O3"})}),
      term("omega_U", 0, "01", "01", -1, {comp({"s:O3"}), comp({"s:0-1", "s:4-5", "t:0-5", "t:1-4"})}),
      term("omega_U", 0, "01", "10", 1,
           {comp({"s:O3"}), comp({"s:0-1", "s:2-3", "s:4-5", "t:0-5", "t:1-2", "t:3-4"}), comp({"t:O3"})}),

      term("F_U-", 0, "10", "00", 1, {}),
      term("F_U-", 1, "11", "10", 1, {comp({"s:0-3", "s:4-5", "t:0-5", "t:3-4"}), comp({"t:O3"})}),
      term("F_U+", 0, "01", "00", -1, {comp({"s:2-3", "s:4-5", "t:2-5", "t:3-4"}), comp({"s:O3"})}),
      term("F_U+", 1, "11", "01", -1, {}),

      term("G_U", 0, "01", "00", -1, {comp({"s:0-1", "s:2-3", "s:4-5", "t:0-5", "t:1-2", "t:3-4"}), comp({"s:O3"})}),
      term("G_U", 0, "10", "00", 1, {comp({"s:1-4", "s:2-3", "t:1-2", "t:3-4"})}),
      term("G_U", 1, "11", "01", 1, {comp({"s:0-1", "s:4-5", "t:0-5", "t:1-4"})}),
      term("G_U", 1, "11", "10", -1, {comp({"s:0-1", "s:2-3", "s:4-5", "t:0-5", "t:1-2", "t:3-4"}), comp({"t:O3"})}),

      term("Psi_U-", 1, "11", "00", -1, {comp({"s:0-3", "s:4-5", "t:0-5", "t:3-4"})}),
      term("Psi_U+", 1, "11", "00", -1, {comp({"s:2-3", "s:4-5", "t:2-5", "t:3-4"})}),
  };
  return c;
}

}  // namespace cobkh

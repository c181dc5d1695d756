#include "cobkh/builtins.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace cobkh {

namespace {

using T = CrossingType;

T sign_type(char s) {
  switch (s) {
    case '+': return T::Pos;
    case '-': return T::Neg;
    case 's': return T::Sing;
    case 'h': return T::SmoothH;
    case 'v': return T::SmoothV;
  }
  throw InputError("builtin: bad crossing code");
}

// Left triple: a at 1 (bottom), c at 2, b at 1 (top). Right: a at 2, c at 1, b at 2.
// Signs are given as a string "abc". Crossing order is c, a, b.
TangleDiagram triple(const std::string& name, bool left, const char* abc) {
  const int outer = left ? 1 : 2;
  const int middle = left ? 2 : 1;
  return braid_diagram(name, 3,
                       {{"a", outer, sign_type(abc[0])},
                        {"c", middle, sign_type(abc[2])},
                        {"b", outer, sign_type(abc[1])}},
                       {"c", "a", "b"});
}

TangleDiagram single(const std::string& name, T t) { return braid_diagram(name, 2, {{"x", 1, t}}); }

TangleDiagram closed_braid(const std::string& name, int strands, const std::vector<BraidStep>& steps) {
  TangleDiagram d = closure(braid_diagram(name, strands, steps), braid_closure_matching(2 * strands));
  d.name = name;
  return d;
}

const std::vector<std::pair<std::string, std::function<TangleDiagram()>>>& catalog() {
  static const std::vector<std::pair<std::string, std::function<TangleDiagram()>>> c = [] {
    std::vector<std::pair<std::string, std::function<TangleDiagram()>>> v;
    auto add = [&](const std::string& n, std::function<TangleDiagram()> f) { v.emplace_back(n, std::move(f)); };
    auto tri = [&](const std::string& n, bool left, const char* abc) {
      add(n, [=] { return triple(n, left, abc); });
    };
    tri("r3_left_LMR", true, "---");
    tri("r3_left_MLR", true, "+--");
    tri("r3_left_LRM", true, "-+-");
    tri("r3_left_MRL", true, "+-+");
    tri("r3_left_RLM", true, "-++");
    tri("delta_left", true, "--+");
    tri("r3_right_MLR", false, "-+-");
    tri("r3_right_LRM", false, "+--");
    tri("delta_right", false, "++-");
    tri("r3_right_MRL", false, "-++");
    tri("r3_right_RLM", false, "+-+");
    tri("r3_right_RML", false, "+++");

    tri("sing_4T_LNN", true, "--s");
    tri("sing_4T_OL", true, "+-s");
    tri("sing_4T_UL", true, "-+s");
    tri("sing_4T_OR", false, "-+s");
    tri("sing_4T_UR", false, "+-s");
    tri("sing_4T_RPP", false, "++s");

    tri("fourT_LND", true, "-ss");
    tri("fourT_LDN", true, "s-s");
    tri("fourT_RDP", false, "s+s");
    tri("fourT_RPD", false, "+ss");

    // slices: the middle crossing replaced by a fixed smoothing
    tri("slice_OL_H", true, "+-h");
    tri("slice_OL_V", true, "+-v");
    tri("slice_OR_H", false, "-+h");
    tri("slice_OR_V", false, "-+v");
    tri("slice_UL_H", true, "-+h");
    tri("slice_UL_V", true, "-+v");
    tri("slice_UR_H", false, "+-h");
    tri("slice_UR_V", false, "+-v");

    add("pos_x", [] { return single("pos_x", T::Pos); });
    add("neg_x", [] { return single("neg_x", T::Neg); });
    add("sing_x", [] { return single("sing_x", T::Sing); });
    add("r2_tangle", [] { return braid_diagram("r2_tangle", 2, {{"p", 1, T::Pos}, {"n", 1, T::Neg}}); });
    add("id_2", [] { return braid_diagram("id_2", 2, {}); });
    add("rv_sing_u", [] { return braid_diagram("rv_sing_u", 2, {{"s", 1, T::Sing}, {"x", 1, T::Pos}}); });
    add("rv_sing_d", [] { return braid_diagram("rv_sing_d", 2, {{"x", 1, T::Pos}, {"s", 1, T::Sing}}); });

    add("unknot", [] {
      TangleDiagram d;
      d.name = "unknot";
      d.loops = {0};
      validate(d);
      return d;
    });
    add("kink_pos", [] { return closed_braid("kink_pos", 2, {{"x", 1, T::Pos}}); });
    add("kink_neg", [] { return closed_braid("kink_neg", 2, {{"x", 1, T::Neg}}); });
    add("kink_sing", [] { return closed_braid("kink_sing", 2, {{"x", 1, T::Sing}}); });
    add("trefoil", [] {
      return closed_braid("trefoil", 2, {{"a", 1, T::Neg}, {"b", 1, T::Neg}, {"c", 1, T::Neg}});
    });
    add("trefoil_right", [] {
      return closed_braid("trefoil_right", 2, {{"a", 1, T::Pos}, {"b", 1, T::Pos}, {"c", 1, T::Pos}});
    });
    add("hopf", [] { return closed_braid("hopf", 2, {{"a", 1, T::Pos}, {"b", 1, T::Pos}}); });
    add("hopf_neg", [] { return closed_braid("hopf_neg", 2, {{"a", 1, T::Neg}, {"b", 1, T::Neg}}); });
    add("figure8", [] {
      return closed_braid("figure8", 3,
                          {{"a", 1, T::Pos}, {"b", 2, T::Neg}, {"c", 1, T::Pos}, {"d", 2, T::Neg}});
    });
    return v;
  }();
  return c;
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, f] : catalog()) n.push_back(name);
    return n;
  }();
  return names;
}

TangleDiagram builtin(const std::string& name) {
  for (const auto& [n, f] : catalog())
    if (n == name) return f();
  throw InputError("unknown builtin diagram '" + name + "'");
}

std::vector<std::pair<int, int>> braid_closure_matching(int boundary) {
  std::vector<std::pair<int, int>> m;
  for (int i = 0; i < boundary / 2; ++i) m.emplace_back(i, boundary - 1 - i);
  return m;
}

TangleDiagram load_diagram(const std::string& source) {
  const std::string prefix = "builtin:";
  if (source.rfind(prefix, 0) == 0) return builtin(source.substr(prefix.size()));
  std::ifstream in(source);
  if (!in) throw InputError("cannot open diagram file '" + source + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  TangleDiagram d = parse_diagram_text(buf.str());
  if (d.name.empty()) d.name = source;
  return d;
}

}  // namespace cobkh

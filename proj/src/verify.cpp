#include "cobkh/verify.hpp"

#include <fnmatch.h>

#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cobkh/builtins.hpp"
#include "cobkh/homology.hpp"
#include "cobkh/kh.hpp"
#include "cobkh/papermorph.hpp"

namespace cobkh {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "skipped";
}

bool glob_match(const std::string& pattern, const std::string& name) {
  return fnmatch(pattern.c_str(), name.c_str(), 0) == 0;
}

namespace {

constexpr const char* kQuotientNote = "verified in dotted quotient";

// Collects labelled witnesses.
class Report {
 public:
  void expect(const std::string& what, const Witness& w) {
    for (const auto& line : w) out_.push_back(what + ": " + line);
  }
  void expect(const std::string& what, bool ok, const std::string& detail = "") {
    if (!ok) out_.push_back(what + (detail.empty() ? "" : ": " + detail));
  }
  void equal(const std::string& what, const HomElement& a, const HomElement& b) { expect(what, compare(a, b)); }
  void zero(const std::string& what, const HomElement& a) {
    expect(what, compare(a, HomElement::zero(a.source, a.target, a.degree)));
  }
  void chain_map(const std::string& what, const HomElement& f) { zero(what + " not closed", hom_differential(f)); }
  Witness take() { return std::move(out_); }

 private:
  Witness out_;
};

using CheckFn = std::function<void(MorphismBook&, Report&)>;

const std::vector<Flavor> kFlavors = {Flavor::O, Flavor::U};

std::string fl(Flavor f) { return std::string(1, flavor_char(f)); }

// State with every crossing smoothed vertically at its lowest such index.
State all_vertical(const TangleDiagram& d) {
  State s;
  for (const auto& c : d.crossings) {
    const auto& lc = local_complex(c.type);
    int i = 0;
    while (lc[i].smoothing != Smoothing::V) ++i;
    s.push_back(i);
  }
  return s;
}

// Φ̂ at crossing `c` of every builtin where c is negative, into the same
// diagram with c positive.
template <typename Fn>
void each_phi_hat(Fn fn) {
  for (const auto& name : builtin_names()) {
    const TangleDiagram d = builtin(name);
    for (const auto& x : d.crossings) {
      if (x.type != CrossingType::Neg) continue;
      const TangleDiagram e = with_type(d, x.id, CrossingType::Pos);
      auto S = kh_ptr(d);
      auto T = kh_ptr(e);
      fn(name + "@" + x.id, phi_hat(d, x.id, S, T));
    }
  }
}

void check_complexes(MorphismBook& P, Report& r) {
  for (const auto& name : builtin_names()) r.expect(name, check_complex(*P.kh(name)));
  // singular crossing = cone of Φ̂
  {
    const HomElement f = P.phi_hat("neg_x", "x", "pos_x");
    auto to_state = [](const std::vector<int>& l) { return std::vector<int>{l.at(1) + (l.at(0) == 0 ? 2 : 0)}; };
    r.expect("cone(phi_hat) vs sing_x", match_complexes(cone(f), *P.kh("sing_x"), to_state));
  }
  // Kauffman-trick cone identifications of the R3 corners
  for (Flavor f : kFlavors)
    for (char side : {'L', 'R'})
      for (int sign : {-1, 1}) {
        const std::string name = MorphismBook::r3_name(f, side, sign);
        r.expect("cone vs " + name, match_complexes(P.r3_cone(f, side, sign), *P.kh(name), [&](const auto& l) {
                   return P.cone_to_state(f, sign, l);
                 }));
      }
}

void check_phi_hat_chainmap(MorphismBook&, Report& r) {
  each_phi_hat([&](const std::string& what, const HomElement& f) { r.chain_map(what, f); });
}

void check_phi_hat_degree(MorphismBook&, Report& r) {
  each_phi_hat([&](const std::string& what, const HomElement& f) {
    const auto q = internal_qdeg(f);
    r.expect(what, q && *q == 0, q ? "internal q-degree " + std::to_string(*q) : "inhomogeneous or zero");
    r.expect(what, f.degree == 0, "homological degree " + std::to_string(f.degree));
  });
}

// ∂F₋ = δ₋γ + ωδ₋ and ∂F₊ = δ₊ω − γδ₊, plus the induced cone maps.
void f_eqn(Flavor f, MorphismBook& P, Report& r) {
  const HomElement g = P.r3_component(f, "gamma"), w = P.r3_component(f, "omega");
  r.chain_map("gamma_" + fl(f), g);
  r.chain_map("omega_" + fl(f), w);
  r.equal("d(F_" + fl(f) + "-)", hom_differential(P.r3_component(f, "F_minus")),
          P.delta_minus(f, 'R') * g + w * P.delta_minus(f, 'L'));
  r.equal("d(F_" + fl(f) + "+)", hom_differential(P.r3_component(f, "F_plus")),
          P.delta_plus(f, 'R') * w - g * P.delta_plus(f, 'L'));
  r.chain_map("R3_" + fl(f) + "-", P.r3_equiv(f, -1));
  r.chain_map("R3_" + fl(f) + "+", P.r3_equiv(f, 1));
}

void check_g_eqn(MorphismBook& P, Report& r) {
  for (Flavor f : kFlavors) {
    const HomElement w = P.r3_component(f, "omega");
    r.equal("d(G_" + fl(f) + ")", hom_differential(P.r4_component(f, "G")),
            P.phi(f, 'R') * (-w) - w * P.phi(f, 'L'));
  }
}

// ∂Ψ₋ = −ΦF₋ − Gδ₋ and ∂Ψ₊ = −δ₊G − F₊Φ.
void check_psi_square_eqns(MorphismBook& P, Report& r) {
  for (Flavor f : kFlavors) {
    const HomElement G = P.r4_component(f, "G");
    r.equal("d(Psi_" + fl(f) + "-)", hom_differential(P.r4_component(f, "Psi_minus")),
            -(P.phi(f, 'R') * P.r3_component(f, "F_minus")) - G * P.delta_minus(f, 'L'));
    r.equal("d(Psi_" + fl(f) + "+)", hom_differential(P.r4_component(f, "Psi_plus")),
            -(P.delta_plus(f, 'R') * G) - P.r3_component(f, "F_plus") * P.phi(f, 'L'));
  }
}

void check_psi_vanishing(MorphismBook& P, Report& r) {
  for (Flavor f : kFlavors)
    r.equal("delta+ Psi_" + fl(f) + "- vs Psi_" + fl(f) + "+ delta-",
            P.delta_plus(f, 'R') * P.r4_component(f, "Psi_minus"),
            P.r4_component(f, "Psi_plus") * P.delta_minus(f, 'L'));
}

void check_prop_r4(MorphismBook& P, Report& r) {
  for (Flavor f : kFlavors) {
    r.equal("d(psi_" + fl(f) + ")", hom_differential(P.psi(f)),
            P.phi_hat_c(f, 'R') * P.r3_equiv(f, -1) - P.r3_equiv(f, 1) * P.phi_hat_c(f, 'L'));
    r.chain_map("R4_" + fl(f), P.r4_equiv(f));
  }
}

// The two composites of one R3 hexagon. sign < 0: around the negative
// corners, sign > 0: around the positive ones.
struct Hexagon {
  std::string from, to;
  HomElement via_a, via_b;
};

Hexagon r3_hexagon(MorphismBook& P, int sign) {
  const std::string from = sign < 0 ? "r3_left_LMR" : "delta_left";
  const std::string to = sign < 0 ? "delta_right" : "r3_right_RML";
  auto path = [&](Flavor f, const std::string& x) {
    const std::string l = MorphismBook::r3_name(f, 'L', sign), rr = MorphismBook::r3_name(f, 'R', sign);
    return P.phi_hat(rr, x, to) * P.r3_equiv(f, sign) * P.phi_hat(from, x, l);
  };
  return {from, to, path(Flavor::O, "a"), path(Flavor::U, "b")};
}

// Single entry ±Φ_R Φ_L between the all-vertical states.
HomElement s0_map(MorphismBook& P, const Hexagon& h, int sign) {
  const State s = all_vertical(P.diagram(h.from));
  const State t = all_vertical(P.diagram(h.to));
  return state_map(h.via_a.source, h.via_a.target, 0, [&](const State& x) -> StateEntries {
    if (x != s) return {};
    const FlatTangle& a = h.via_a.source->at(0)[h.via_a.source->find(s)->second].tangle;
    const FlatTangle& b = h.via_a.target->at(0)[h.via_a.target->find(t)->second].tangle;
    Cobordism pp = phi_lr('R') * phi_lr('L');
    if (!(pp.source() == a) || !(pp.target() == b)) throw std::logic_error("s0 is not the 3-strand identity");
    return {{t, sign * pp}};
  });
}

void lemma(MorphismBook& P, Report& r, int sign) {
  const Hexagon h = r3_hexagon(P, sign);
  const HomElement expected = s0_map(P, h, sign < 0 ? -1 : 1);
  r.equal("via a", h.via_a, expected);
  r.equal("via b", h.via_b, expected);
}

void check_mainA_hexagons(MorphismBook& P, Report& r) {
  for (int sign : {-1, 1}) {
    const Hexagon h = r3_hexagon(P, sign);
    r.equal(std::string(sign < 0 ? "negative" : "positive") + " hexagon", h.via_a, h.via_b);
  }
}

void check_mainA_prism(MorphismBook& P, Report& r) {
  auto side = [&](Flavor f, const std::string& x) {
    return P.phi_hat(MorphismBook::r3_name(f, 'R', 1), x, "r3_right_RML") * P.psi(f) *
           P.phi_hat("r3_left_LMR", x, MorphismBook::r3_name(f, 'L', -1));
  };
  const HomElement a = side(Flavor::O, "a"), b = side(Flavor::U, "b");
  r.zero("Phi_a psi_O Phi_a", a);
  r.zero("Phi_b psi_U Phi_b", b);
  r.zero("prism", a - b);
}

// The singular hexagon around the R4 moves.
struct SingData {
  HomElement a_in, b_in;    // Φ̂ out of LNN
  HomElement r4o, r4u;      // R4 moves
  HomElement a_out, b_out;  // Φ̂ into RPP
};

SingData sing_data(MorphismBook& P) {
  return {P.phi_hat("sing_4T_LNN", "a", "sing_4T_OL"), P.phi_hat("sing_4T_LNN", "b", "sing_4T_UL"),
          P.r4_equiv(Flavor::O),                         P.r4_equiv(Flavor::U),
          P.phi_hat("sing_4T_OR", "a", "sing_4T_RPP"),  P.phi_hat("sing_4T_UR", "b", "sing_4T_RPP")};
}

void check_mainB_hexagon(MorphismBook& P, Report& r) {
  const SingData s = sing_data(P);
  r.equal("singular hexagon", s.a_out * s.r4o * s.a_in, s.b_out * s.r4u * s.b_in);
}

// Squares of the zigzag: T1 <- T2 -> T3.
struct Zigzag {
  Square t1, t2, t3;
};

Zigzag zigzag(const SingData& s) {
  Square t1{s.b_in, s.r4o * s.a_in, s.b_out * s.r4u, s.a_out};
  Square t2{s.b_in, s.a_in, s.b_out * s.r4u, s.a_out * s.r4o};
  Square t3{s.r4u * s.b_in, s.a_in, s.b_out, s.a_out * s.r4o};
  return {t1, t2, t3};
}

void map_of_squares(Report& r, const std::string& what, const Square& from, const Square& to, const HomElement& a,
                    const HomElement& b, const HomElement& c, const HomElement& d) {
  r.equal(what + " top face", to.top * a, b * from.top);
  r.equal(what + " left face", to.left * a, c * from.left);
  r.equal(what + " right face", to.right * b, d * from.right);
  r.equal(what + " bottom face", to.bottom * c, d * from.bottom);
  auto src = std::make_shared<const Complex>(total_complex(from));
  auto tgt = std::make_shared<const Complex>(total_complex(to));
  r.chain_map(what + " total map", total_map(from, to, a, b, c, d, src, tgt));
}

void check_mainB_zigzag(MorphismBook& P, Report& r) {
  const SingData s = sing_data(P);
  const Zigzag z = zigzag(s);
  int i = 1;
  for (const Square* q : {&z.t1, &z.t2, &z.t3}) {
    const std::string name = "T" + std::to_string(i++);
    r.expect(name + " square", check_square(*q));
    const Complex rows = total_complex(*q), cols = total_complex_columns(*q);
    r.expect(name + " rows", check_complex(rows));
    r.expect(name + " columns", check_complex(cols));
    auto rp = std::make_shared<const Complex>(rows);
    auto cp = std::make_shared<const Complex>(cols);
    r.chain_map(name + " rows->columns", total_rows_to_columns(*q, rp, cp));
  }
  auto id = [](const HomElement& f, bool source) { return HomElement::identity(source ? f.source : f.target); };
  map_of_squares(r, "T2->T1", z.t2, z.t1, id(s.b_in, true), id(s.b_in, false), s.r4o, id(s.a_out, false));
  map_of_squares(r, "T2->T3", z.t2, z.t3, id(s.b_in, true), s.r4u, id(s.a_in, false), id(s.a_out, false));
}

void check_mainB_cones_homology(MorphismBook& P, Report& r) {
  const SingData s = sing_data(P);
  const Zigzag z = zigzag(s);
  const std::vector<std::pair<int, int>> matching = {{0, 1}, {2, 5}, {3, 4}};
  // Cone(LND -> RDP) as rows of T1, Cone(LDN -> RPD) as columns of T3
  const Complex left = close_complex(total_complex(z.t1), matching);
  const Complex right = close_complex(total_complex_columns(z.t3), matching);
  for (Coeff k : {Coeff::Z, Coeff::F2}) {
    const std::string ring = k == Coeff::Z ? "Z" : "F2";
    const HomologyTable a = homology(left, k, true), b = homology(right, k, true);
    r.expect("homology over " + ring, !a.empty(), "closure has trivial homology");
    if (a != b)
      r.expect("homology over " + ring, false,
               "left " + homology_json(a).dump() + " right " + homology_json(b).dump());
  }
}

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> checks = {
      {"complexes", check_complexes},
      {"phi_hat_chainmap", check_phi_hat_chainmap},
      {"phi_hat_degree", check_phi_hat_degree},
      {"fo_eqn", [](MorphismBook& P, Report& r) { f_eqn(Flavor::O, P, r); }},
      {"fu_eqn", [](MorphismBook& P, Report& r) { f_eqn(Flavor::U, P, r); }},
      {"g_eqn", check_g_eqn},
      {"psi_square_eqns", check_psi_square_eqns},
      {"psi_vanishing", check_psi_vanishing},
      {"prop_r4", check_prop_r4},
      {"lemma_hexneg", [](MorphismBook& P, Report& r) { lemma(P, r, -1); }},
      {"lemma_hexpos", [](MorphismBook& P, Report& r) { lemma(P, r, 1); }},
      {"mainA_hexagons", check_mainA_hexagons},
      {"mainA_prism", check_mainA_prism},
      {"mainB_hexagon", check_mainB_hexagon},
      {"mainB_zigzag", check_mainB_zigzag},
      {"mainB_cones_homology", check_mainB_cones_homology},
  };
  return checks;
}

CheckResult run_one(const std::string& name, const CheckFn& fn, MorphismBook& P) {
  CheckResult res;
  res.name = name;
  const auto t0 = std::chrono::steady_clock::now();
  Report r;
  try {
    fn(P, r);
    res.witness = r.take();
  } catch (const std::exception& e) {
    res.witness = r.take();
    res.witness.push_back(std::string("error: ") + e.what());
  }
  res.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  res.status = res.witness.empty() ? Status::Pass : Status::Fail;
  if (res.status == Status::Pass && name != "mainB_cones_homology") res.note = kQuotientNote;
  return res;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, fn] : registry()) v.push_back(n);
    return v;
  }();
  return names;
}

CheckResult run_check(const std::string& name, const Catalog& catalog) {
  for (const auto& [n, fn] : registry()) {
    if (n != name) continue;
    MorphismBook P(catalog);
    return run_one(n, fn, P);
  }
  throw InputError("unknown check '" + name + "'");
}

std::vector<CheckResult> run_all(const std::string& filter, const Catalog& catalog) {
  std::vector<CheckResult> out;
  MorphismBook P(catalog);
  for (const auto& [n, fn] : registry())
    if (glob_match(filter, n)) out.push_back(run_one(n, fn, P));
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (r.status != Status::Pass) return false;
  return true;
}

nlohmann::json report_json(const std::vector<CheckResult>& results) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json j = {{"name", r.name}, {"status", to_string(r.status)}, {"millis", r.millis}};
    if (!r.witness.empty()) j["witness"] = r.witness;
    if (!r.note.empty()) j["note"] = r.note;
    out.push_back(std::move(j));
  }
  return out;
}

std::string report_text(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  for (const auto& r : results) {
    os << (r.status == Status::Pass ? "PASS " : "FAIL ") << r.name << " (" << static_cast<long>(r.millis) << " ms)";
    if (!r.note.empty()) os << " [" << r.note << "]";
    os << "\n";
    for (std::size_t i = 0; i < r.witness.size() && i < 8; ++i) os << "    " << r.witness[i] << "\n";
    if (r.witness.size() > 8) os << "    ... " << r.witness.size() - 8 << " more\n";
  }
  return os.str();
}

}  // namespace cobkh

// cobkh: verification suite, Khovanov homology and complex dumps.
#include <algorithm>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cobkh/builtins.hpp"
#include "cobkh/homology.hpp"
#include "cobkh/kh.hpp"
#include "cobkh/papermorph.hpp"
#include "cobkh/verify.hpp"

using namespace cobkh;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kFailed = 1, kUsage = 2;

void emit(const json& j, bool pretty) { std::cout << (pretty ? j.dump(2) : j.dump()) << "\n"; }

std::vector<std::string> morphism_names() {
  std::vector<std::string> names = catalog_morphisms();
  for (const char* f : {"O", "U"})
    for (const char* m : {"R3_%-", "R3_%+", "psi_%", "R4_%"}) {
      std::string s = m;
      s.replace(s.find('%'), 1, f);
      names.push_back(s);
    }
  return names;
}

HomElement named_morphism(MorphismBook& P, const std::string& name) {
  for (const auto& m : catalog_morphisms())
    if (m == name) return P.component(name);
  auto flavor = [&](char c) {
    if (c == 'O') return Flavor::O;
    if (c == 'U') return Flavor::U;
    throw InputError("unknown morphism '" + name + "'");
  };
  if (name.size() == 5 && name.rfind("R3_", 0) == 0 && (name[4] == '-' || name[4] == '+'))
    return P.r3_equiv(flavor(name[3]), name[4] == '-' ? -1 : 1);
  if (name.size() == 5 && name.rfind("psi_", 0) == 0) return P.psi(flavor(name[4]));
  if (name.size() == 4 && name.rfind("R4_", 0) == 0) return P.r4_equiv(flavor(name[3]));
  throw InputError("unknown morphism '" + name + "'");
}

int run_verify(const std::string& check, bool as_json, bool pretty) {
  const bool is_glob = check.find_first_of("*?[") != std::string::npos;
  if (!is_glob) {
    const auto& names = check_names();
    if (std::find(names.begin(), names.end(), check) == names.end())
      throw InputError("unknown check '" + check + "'");
  }
  const auto results = run_all(check);
  if (pretty) {
    std::cout << report_text(results);
  } else if (as_json) {
    json j = json::object();
    for (const auto& r : results) j[r.name] = to_string(r.status);
    emit(j, false);
  } else {
    emit(report_json(results), false);
  }
  return all_passed(results) ? kOk : kFailed;
}

int run_kh(const std::string& input, const std::string& coeff, bool no_simplify, bool pretty) {
  const TangleDiagram d = load_diagram(input);
  const Coeff c = coeff_from(coeff);
  const HomologyTable t = kh_link(d, c, !no_simplify);
  if (pretty)
    std::cout << homology_text(t, c);
  else
    emit(homology_json(t), false);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dotted cobordism engine for Khovanov complexes of singular tangles"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "human-readable output");

  std::string check = "*";
  bool as_json = false;
  auto* verify = app.add_subcommand("verify", "run verification checks");
  verify->add_option("--check", check, "check name or glob");
  verify->add_flag("--json", as_json, "print {name: status}");
  verify->add_flag("--pretty", pretty, "human-readable report");

  std::string input, coeff = "z";
  bool no_simplify = false;
  auto* kh = app.add_subcommand("kh", "Khovanov homology of a closed diagram");
  kh->add_option("diagram", input, "JSON file or builtin:NAME")->required();
  kh->add_option("--coeff", coeff, "z or f2");
  kh->add_flag("--no-simplify", no_simplify, "skip Gaussian elimination");
  kh->add_flag("--pretty", pretty, "human-readable table");

  auto* show = app.add_subcommand("show-complex", "dump the Khovanov complex");
  show->add_option("diagram", input, "JSON file or builtin:NAME")->required();
  show->add_flag("--pretty", pretty, "indented JSON");

  std::string morphism;
  auto* dump = app.add_subcommand("dump-morphism", "dump a named morphism");
  dump->add_option("name", morphism, "morphism name (see list)")->required();
  dump->add_flag("--pretty", pretty, "indented JSON");

  auto* list = app.add_subcommand("list", "list builtins, checks and morphisms");
  list->add_flag("--pretty", pretty, "indented JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify) return run_verify(check, as_json, pretty);
    if (*kh) return run_kh(input, coeff, no_simplify, pretty);
    if (*show) {
      emit(complex_json(kh_complex(load_diagram(input))), pretty);
      return kOk;
    }
    if (*dump) {
      MorphismBook P;
      emit(hom_json(named_morphism(P, morphism)), pretty);
      return kOk;
    }
    if (*list) {
      emit({{"builtins", builtin_names()}, {"checks", check_names()}, {"morphisms", morphism_names()}}, pretty);
      return kOk;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cobkh/diagram.hpp"
#include "cobkh/tqft.hpp"

namespace cobkh {

enum class Coeff { Z, F2 };
Coeff coeff_from(const std::string& s);

struct HomologyGroup {
  int rank = 0;
  std::vector<std::int64_t> torsion;  // invariant factors > 1
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// (homological degree, q-degree) -> group; zero groups are omitted.
using HomologyTable = std::map<std::pair<int, int>, HomologyGroup>;

/// Invariant factors (nonzero diagonal of the Smith normal form, each
/// dividing the next).
std::vector<std::int64_t> smith_invariants(IntMatrix m);
int rank_f2(const IntMatrix& m);

/// Cancels unit entries of the differential (Gaussian elimination), keeping
/// the homotopy type and the q-grading.
IntComplex gaussian_simplify(const IntComplex& c);

HomologyTable homology(const IntComplex& c, Coeff coeff, bool simplify = true);
HomologyTable homology(const Complex& c, Coeff coeff, bool simplify = true);
/// Homology of the bracket of a closed (possibly singular) diagram.
HomologyTable kh_link(const TangleDiagram& d, Coeff coeff, bool simplify = true);

nlohmann::json homology_json(const HomologyTable& t);
std::string homology_text(const HomologyTable& t, Coeff coeff = Coeff::Z);

}  // namespace cobkh

#include "cobkh/r2.hpp"

#include <stdexcept>

#include "cobkh/builtins.hpp"
#include "cobkh/hom_solve.hpp"

namespace cobkh {

R2Equivalence r2_equiv() {
  R2Equivalence e;
  e.tangle = kh_ptr(builtin("r2_tangle"));
  e.strands = kh_ptr(builtin("id_2"));
  const Complex& S = *e.tangle;
  const Summand& id_obj = e.strands->at(0).at(0);
  // degree-0 summand of the tangle complex equal to the two strands
  int k = -1;
  for (int i = 0; i < S.size(0); ++i)
    if (S.at(0)[i].tangle == id_obj.tangle && S.at(0)[i].q == id_obj.q) k = i;
  if (k < 0) throw std::logic_error("r2: no strand summand in degree 0");
  const std::vector<int> strand_label = S.at(0)[k].label;
  const Cobordism id = Cobordism::identity(id_obj.tangle);

  HomElement g0 = HomElement::zero(e.strands, e.tangle, 0);
  g0.add_entry(0, k, 0, id);
  auto g = solve_hom(e.strands, e.tangle, 0, hom_differential, -hom_differential(g0),
                     [&](int, const auto&, const auto& t) { return t != strand_label; });
  HomElement f0 = HomElement::zero(e.tangle, e.strands, 0);
  f0.add_entry(0, 0, k, id);
  auto f = solve_hom(e.tangle, e.strands, 0, hom_differential, -hom_differential(f0),
                     [&](int, const auto& s, const auto&) { return s != strand_label; });
  if (!g || !f) throw std::logic_error("r2: no chain maps");
  e.from_strands = g0 + *g;
  e.to_strands = f0 + *f;
  if (!compare(e.to_strands * e.from_strands, HomElement::identity(e.strands)).empty())
    throw std::logic_error("r2: maps do not split");
  const HomElement defect = e.from_strands * e.to_strands - HomElement::identity(e.tangle);
  auto h = solve_hom(e.tangle, e.tangle, -1, hom_differential, defect);
  if (!h) throw std::logic_error("r2: no homotopy");
  e.homotopy = *h;
  return e;
}

}  // namespace cobkh

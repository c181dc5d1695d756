#pragma once

#include "cobkh/kh.hpp"

namespace cobkh {

/// Homotopy equivalence kh(r2_tangle) <-> kh(id_2):
/// to_strands∘from_strands = id and ∂homotopy = from_strands∘to_strands − id.
struct R2Equivalence {
  ComplexPtr tangle;
  ComplexPtr strands;
  HomElement to_strands;
  HomElement from_strands;
  HomElement homotopy;
};

/// Built by fixing the identity component and solving the chain-map and
/// homotopy equations over basis cobordisms. Throws std::logic_error if
/// the construction fails.
R2Equivalence r2_equiv();

}  // namespace cobkh

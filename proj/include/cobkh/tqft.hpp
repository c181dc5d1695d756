#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/Core>

#include "cobkh/cobordism.hpp"
#include "cobkh/complex.hpp"

namespace cobkh {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Graded basis of the Frobenius algebra image of a closed flat tangle:
/// dot masks over the loops in canonical order (bit set = X), with q-degree
/// (#loops - 2*popcount) + shift.
struct GradedBasis {
  std::vector<std::uint64_t> masks;
  std::vector<int> q;
};

GradedBasis eval_object(const FlatTangle& t, int shift = 0);

/// Matrix of a cobordism between closed flat tangles (rows: target basis).
IntMatrix eval_map(const Cobordism& c);

/// Matrix of an unreduced surface, computed component by component from
/// m, Δ, unit, counit and X with no normal-form reduction.
IntMatrix eval_presurface(const PreSurface& p);

/// Integer chain complex obtained by applying the functor to a closed
/// complex. Basis elements carry q-degrees.
struct IntComplex {
  std::map<int, std::vector<int>> q;  // per homological degree
  std::map<int, IntMatrix> d;         // d[n]: degree n -> n+1

  int size(int n) const;
  IntMatrix diff(int n) const;
};

IntComplex eval_complex(const Complex& c);

}  // namespace cobkh

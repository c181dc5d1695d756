#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cobkh/complex.hpp"
#include "cobkh/diagram.hpp"

namespace cobkh {

using ComplexPtr = std::shared_ptr<const Complex>;

/// Khovanov bracket of a diagram. Summand labels are state vectors.
Complex kh_complex(const TangleDiagram& d);
ComplexPtr kh_ptr(const TangleDiagram& d);

/// Unsigned face map at crossing k out of `state` (saddle, or Φ between two
/// vertical smoothings).
Cobordism crossing_face(const TangleDiagram& d, const State& state, int k);

/// Dot on the circle through slot 0 minus dot on the circle through slot 1
/// of crossing k, on the resolution of `state` (k must be smoothed V).
Cobordism phi_at(const TangleDiagram& d, const State& state, int k);

/// Φ on the vertical smoothing of the 2-strand square.
Cobordism phi();

/// Map defined state by state. `entries(s)` lists (target state, cobordism
/// from the resolution of s to the resolution of the target state).
using StateEntries = std::vector<std::pair<State, Cobordism>>;
HomElement state_map(ComplexPtr source, ComplexPtr target, int degree,
                     const std::function<StateEntries(const State&)>& entries);

/// The chain map kh(d) -> kh(d with c positive) given by Φ on states where c
/// is smoothed vertically. `d` must have c negative.
HomElement phi_hat(const TangleDiagram& d, const std::string& c, ComplexPtr source, ComplexPtr target);

/// Saddle at a fixed-smoothing crossing c between two diagrams that differ
/// only in the smoothing of c.
HomElement smoothing_change(const TangleDiagram& from, const TangleDiagram& to, const std::string& c,
                            ComplexPtr source, ComplexPtr target);

/// Closure by a planar matching of the boundary points. New loops get ids
/// kClosureLoopBase + (smallest boundary point on the loop).
inline constexpr int kClosureLoopBase = 1000000;
FlatTangle close_tangle(const FlatTangle& t, const std::vector<std::pair<int, int>>& matching);
Cobordism close_cobordism(const Cobordism& c, const std::vector<std::pair<int, int>>& matching);
Complex close_complex(const Complex& c, const std::vector<std::pair<int, int>>& matching);
HomElement close_map(const HomElement& f, ComplexPtr source, ComplexPtr target,
                     const std::vector<std::pair<int, int>>& matching);

}  // namespace cobkh

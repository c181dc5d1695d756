#pragma once

#include <array>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cobkh/flat_tangle.hpp"

namespace cobkh {

/// Crossing kinds. SmoothH/SmoothV are fixed smoothings kept in the diagram
/// so that edge labels (and hence loop identifiers) survive.
enum class CrossingType { Pos, Neg, Sing, SmoothH, SmoothV };

std::string to_string(CrossingType t);
CrossingType crossing_type_from(const std::string& s);

/// A crossing with four edge labels in counterclockwise order. Slots 0 and 1
/// are incoming; strands run 0 -> 2 and 1 -> 3.
struct Crossing {
  std::string id;
  CrossingType type = CrossingType::Pos;
  std::array<int, 4> slots{};
};

/// Smoothing of a crossing.
enum class Smoothing { H, V };

/// Slot pairing of a smoothing: V joins 0-3 and 1-2, H joins 0-1 and 2-3.
std::array<int, 4> smoothing_partner(Smoothing s);

/// One entry of a crossing's local complex.
struct LocalState {
  Smoothing smoothing;
  int degree;
  int qshift;
};

/// Local complex of a crossing type, ordered by homological degree.
const std::vector<LocalState>& local_complex(CrossingType t);

/// An oriented (singular) tangle diagram. Edges are integer labels; every
/// label occurs exactly twice among crossing slots and boundary points,
/// except free loop labels, which occur nowhere else.
struct TangleDiagram {
  std::string name;
  int boundary = 0;
  std::vector<Crossing> crossings;  // fixed order, used for signs
  std::vector<int> boundary_edges;  // edge label at each boundary point
  std::vector<int> loops;           // labels of crossingless closed loops
  std::vector<int> orientation;     // per boundary point: +1 in, -1 out, 0 unknown

  int crossing_index(const std::string& id) const;
  const Crossing& crossing(const std::string& id) const { return crossings.at(crossing_index(id)); }
};

/// Validates labels, slot usage, planarity and orientation; fills unknown
/// boundary orientations. Throws InputError with location information.
void validate(TangleDiagram& d);

TangleDiagram parse_diagram(const nlohmann::json& j);
TangleDiagram parse_diagram_text(const std::string& text);
nlohmann::json diagram_json(const TangleDiagram& d);

/// Local index per crossing (into its local complex).
using State = std::vector<int>;

/// A resolved diagram: the flat tangle and the circle index of each edge
/// label.
struct Resolution {
  FlatTangle tangle;
  std::vector<int> edge_labels;     // sorted distinct labels
  std::vector<int> circle_of_edge;  // parallel to edge_labels

  int circle_of(int label) const;
};

Resolution resolve(const TangleDiagram& d, const State& state);
Resolution resolve_smoothings(const TangleDiagram& d, const std::vector<Smoothing>& smoothings);

struct StateInfo {
  State state;
  FlatTangle tangle;
  int degree = 0;
  int qshift = 0;
};

/// All states in lexicographic order of local indices.
std::vector<StateInfo> enumerate_states(const TangleDiagram& d);

/// Closes a tangle by a planar matching of its boundary points.
TangleDiagram closure(const TangleDiagram& d, const std::vector<std::pair<int, int>>& matching);

/// Same diagram with one crossing's type replaced.
TangleDiagram with_type(const TangleDiagram& d, const std::string& id, CrossingType t);

/// Braid-like builder: n upward strands, crossings between positions
/// pos and pos+1 (1-based), bottom to top.
struct BraidStep {
  std::string id;
  int pos;
  CrossingType type;
};
TangleDiagram braid_diagram(const std::string& name, int strands, const std::vector<BraidStep>& steps,
                            const std::vector<std::string>& order = {});

}  // namespace cobkh

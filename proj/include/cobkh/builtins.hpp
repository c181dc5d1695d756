#pragma once

#include <string>
#include <vector>

#include "cobkh/diagram.hpp"

namespace cobkh {

/// Names accepted by builtin(), in listing order.
const std::vector<std::string>& builtin_names();

/// Builtin diagram by name; throws InputError for unknown names.
TangleDiagram builtin(const std::string& name);

/// Braid closure matching {i, 2n-1-i} for a 2n-point tangle.
std::vector<std::pair<int, int>> braid_closure_matching(int boundary);

/// Resolves "builtin:NAME" or reads a JSON diagram file.
TangleDiagram load_diagram(const std::string& source);

}  // namespace cobkh

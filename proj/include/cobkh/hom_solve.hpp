#pragma once

#include <functional>
#include <optional>

#include "cobkh/complex.hpp"
#include "cobkh/kh.hpp"

namespace cobkh {

/// Entry filter: (source degree, source label, target label).
using EntryFilter = std::function<bool(int, const std::vector<int>&, const std::vector<int>&)>;

/// Finds an integral h of the given degree with op(h) = rhs, where op is
/// linear. Unknowns range over basis cobordisms between allowed summand
/// pairs whose q-degree makes h homogeneous of internal degree 0. Free
/// variables are set to zero; nullopt when no such solution is found.
std::optional<HomElement> solve_hom(ComplexPtr source, ComplexPtr target, int degree,
                                    const std::function<HomElement(const HomElement&)>& op,
                                    const HomElement& rhs, const EntryFilter& allow = nullptr);

}  // namespace cobkh

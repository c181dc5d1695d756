#pragma once

#include <string>
#include <vector>

#include "cobkh/cobordism.hpp"

namespace cobkh {

/// One connected genus-0 piece of a picture. Circles are named
/// "s:P-Q" / "t:P-Q" for the source/target arc with endpoints P, Q and
/// "s:O<id>" / "t:O<id>" for loops.
struct PicComponent {
  std::vector<std::string> circles;
  int dots = 0;
};

/// A picture: the listed components, plus a product-cylinder on every other
/// circle (which must have a twin on the other side).
struct Picture {
  std::vector<PicComponent> components;
};

Cobordism draw(const Picture& p, const FlatTangle& source, const FlatTangle& target);

/// One signed picture placed in a morphism between slice complexes.
/// `from`/`to` are the smoothing indices of crossings a and b.
struct CatalogTerm {
  std::string morphism;
  int degree = 0;  // homological degree of the source state
  std::string from;
  std::string to;
  int coeff = 1;
  Picture picture;
};

using Catalog = std::vector<CatalogTerm>;

const Catalog& default_catalog();

/// Names of the catalog morphisms in listing order.
const std::vector<std::string>& catalog_morphisms();

}  // namespace cobkh

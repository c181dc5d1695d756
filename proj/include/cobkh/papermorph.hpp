#pragma once

#include <map>
#include <memory>
#include <string>

#include "cobkh/catalog.hpp"
#include "cobkh/kh.hpp"

namespace cobkh {

enum class Flavor { O, U };
char flavor_char(Flavor f);

/// Φ applied to strands 1-2 (L) or 2-3 (R) of the 3-strand identity.
Cobordism phi_lr(char side);

/// Copy of f with the given source/target; shapes and tangles must agree
/// (q-shifts may differ).
HomElement retarget(const HomElement& f, ComplexPtr source, ComplexPtr target);

/// Builtin diagrams and complexes, the slice complexes of the R3 moves, and
/// every named morphism, built from a transcription catalog.
class MorphismBook {
 public:
  explicit MorphismBook(Catalog catalog = default_catalog());

  const Catalog& catalog() const { return catalog_; }

  const TangleDiagram& diagram(const std::string& builtin);
  ComplexPtr kh(const std::string& builtin);

  /// Slice complex (crossing c smoothed): side 'L'/'R', smoothing 'H'/'V'.
  ComplexPtr slice(Flavor f, char side, char smoothing);
  const TangleDiagram& slice_diagram(Flavor f, char side, char smoothing);

  HomElement delta_minus(Flavor f, char side);  // H -> V
  HomElement delta_plus(Flavor f, char side);   // V -> H
  HomElement phi(Flavor f, char side);          // V -> V

  /// Catalog morphism by name (e.g. "gamma_O", "Psi_U-").
  HomElement component(const std::string& name);
  /// name in {gamma, omega, F_minus, F_plus}.
  HomElement r3_component(Flavor f, const std::string& name);
  /// name in {G, Psi_minus, Psi_plus, psi}.
  HomElement r4_component(Flavor f, const std::string& name);

  /// Builtin names of the four R3 corners: (left/right, minus/plus).
  static std::string r3_name(Flavor f, char side, int sign);
  /// Builtin names of the R4 move: left and right singular hybrids.
  static std::string r4_name(Flavor f, char side);

  /// kh of the R3 corner as the cone over the saddle at c of slices.
  Complex r3_cone(Flavor f, char side, int sign);
  /// Cone label -> state of the corner diagram.
  std::vector<int> cone_to_state(Flavor f, int sign, const std::vector<int>& label) const;

  HomElement r3_equiv(Flavor f, int sign);
  /// Φ̂ at c from the minus corner to the plus corner.
  HomElement phi_hat_c(Flavor f, char side);
  /// ψ: left minus corner -> right plus corner, degree -1.
  HomElement psi(Flavor f);
  /// Chain map kh(left singular hybrid) -> kh(right singular hybrid).
  HomElement r4_equiv(Flavor f);

  /// Φ̂ at crossing c of builtin `from` (negative there) into builtin `to`.
  HomElement phi_hat(const std::string& from, const std::string& c, const std::string& to);

 private:
  ComplexPtr shifted_slice(Flavor f, char side, char smoothing, int q);
  HomElement assemble(const std::string& name);

  Catalog catalog_;
  std::map<std::string, TangleDiagram> diagrams_;
  std::map<std::string, ComplexPtr> complexes_;
  std::map<std::string, HomElement> maps_;
};

}  // namespace cobkh

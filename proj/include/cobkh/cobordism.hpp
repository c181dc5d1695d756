#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cobkh/flat_tangle.hpp"

namespace cobkh {

/// Address of a circle on one side of a cobordism.
struct CircleRef {
  enum class Side : std::uint8_t { Source, Target };
  Side side = Side::Source;
  Circle circle;

  static CircleRef src(Circle c) { return {Side::Source, c}; }
  static CircleRef tgt(Circle c) { return {Side::Target, c}; }
};

/// One component of an unreduced surface. Circles are circle indices of the
/// source/target flat tangles.
struct PreComponent {
  std::vector<int> source_circles;
  std::vector<int> target_circles;
  int genus = 0;
  int dots = 0;
};

/// An unreduced dotted surface between two flat tangles. Every circle of
/// source and target must occur in exactly one component; components without
/// circles are closed.
struct PreSurface {
  FlatTangle source;
  FlatTangle target;
  std::vector<PreComponent> components;
  std::int64_t coeff = 1;
};

/// A basis element of Hom(source, target): each boundary cycle bounds its own
/// disk, dotted according to `mask`.
struct Term {
  std::uint64_t mask = 0;
  std::int64_t coeff = 0;
  friend bool operator==(const Term&, const Term&) = default;
};

/// A Z-linear combination of normal-form dotted cobordisms.
class Cobordism {
 public:
  Cobordism() = default;
  Cobordism(FlatTangle source, FlatTangle target);

  static Cobordism zero(const FlatTangle& source, const FlatTangle& target) {
    return Cobordism(source, target);
  }
  static Cobordism identity(const FlatTangle& t);
  static Cobordism basis(const FlatTangle& source, const FlatTangle& target, std::uint64_t mask,
                         std::int64_t coeff = 1);

  const FlatTangle& source() const { return source_; }
  const FlatTangle& target() const { return target_; }
  const CycleMap& cycles() const { return *cycles_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// q-degree of a basis element with the given mask.
  int term_qdeg(std::uint64_t mask) const;
  /// Common q-degree of all terms; nullopt when inhomogeneous or zero.
  std::optional<int> qdeg() const;
  bool homogeneous() const;

  /// Adds coeff times the basis element `mask`.
  void add_term(std::uint64_t mask, std::int64_t coeff);

  /// Multiplication by a dot on the cycle through the given circle.
  Cobordism with_dot(const CircleRef& where) const;
  /// Neck-cut tube between the components through two circles.
  Cobordism attach_tube(const CircleRef& a, const CircleRef& b) const;

  Cobordism& operator+=(const Cobordism& other);
  Cobordism& operator-=(const Cobordism& other);
  Cobordism& operator*=(std::int64_t k);
  friend Cobordism operator+(Cobordism a, const Cobordism& b) { return a += b; }
  friend Cobordism operator-(Cobordism a, const Cobordism& b) { return a -= b; }
  friend Cobordism operator*(std::int64_t k, Cobordism a) { return a *= k; }
  Cobordism operator-() const { return std::int64_t{-1} * *this; }
  /// Composition: (g * f) is f followed by g.
  friend Cobordism operator*(const Cobordism& g, const Cobordism& f);

  friend bool operator==(const Cobordism& a, const Cobordism& b);

  int cycle_of(const CircleRef& ref) const;
  std::string to_string() const;

 private:
  FlatTangle source_;
  FlatTangle target_;
  std::shared_ptr<const CycleMap> cycles_;
  std::vector<Term> terms_;  // sorted by mask, coefficients nonzero
};

/// f followed by g.
Cobordism compose(const Cobordism& f, const Cobordism& g);

/// Reduces a PreSurface to normal form.
Cobordism normalize(const PreSurface& p);

/// Reduces a PreSurface by applying local rewrites (genus reduction, neck
/// cutting, dot pruning, closed evaluation) in an order drawn from `rng`.
Cobordism normalize_by_rewriting(const PreSurface& p, std::mt19937_64& rng);

/// Basis element of the Hom-space with the given set of dotted cycles, as
/// a PreSurface.
PreSurface to_presurface(const Cobordism& c, std::size_t term);

/// A listed genus-0 component of a surface.
struct SurfacePiece {
  std::vector<CircleRef> circles;
  int dots = 0;
};

/// Surface made of the listed components plus a cylinder on every other
/// circle, which must have a twin (same arc or loop id) on the other side.
Cobordism surface(const FlatTangle& source, const FlatTangle& target, const std::vector<SurfacePiece>& pieces);

/// Connected genus-0 surface through the listed circles, identity on every
/// other circle whose twin exists on the other side. Unlisted circles
/// without twins are errors.
Cobordism local_surface(const FlatTangle& source, const FlatTangle& target,
                        const std::vector<CircleRef>& circles, int dots = 0);

/// Saddle between two flat tangles that differ by one reconnection.
Cobordism saddle(const FlatTangle& source, const FlatTangle& target);
/// Birth of loop `id` (absent in t).
Cobordism birth(const FlatTangle& t, int id);
/// Death of loop `id` of t.
Cobordism death(const FlatTangle& t, int id);
/// Identity on t with one dot on the given circle.
Cobordism dot(const FlatTangle& t, const Circle& c);

nlohmann::json flat_tangle_json(const FlatTangle& t);
nlohmann::json cobordism_json(const Cobordism& c);

}  // namespace cobkh

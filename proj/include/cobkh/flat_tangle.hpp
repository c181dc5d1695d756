#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cobkh {

/// Error raised for malformed input data (diagrams, tangles, cobordism sites).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A circle of a flat tangle: either the arc through a boundary point or a
/// closed loop with the given identifier.
struct Circle {
  enum class Kind : std::uint8_t { Arc, Loop };
  Kind kind = Kind::Arc;
  int key = 0;  // any endpoint of the arc, or the loop id

  static Circle arc(int endpoint) { return {Kind::Arc, endpoint}; }
  static Circle loop(int id) { return {Kind::Loop, id}; }
};

/// A crossingless tangle in a disk: a planar perfect matching of the
/// boundary points (numbered counterclockwise) plus closed loops.
///
/// Circles are indexed arcs first (ordered by their smaller endpoint), then
/// loops in increasing identifier order.
class FlatTangle {
 public:
  FlatTangle() = default;

  /// Validates that `mate` is a planar perfect matching and loop ids are
  /// distinct. Loop ids are sorted.
  FlatTangle(std::vector<int> mate, std::vector<int> loops);

  static FlatTangle from_arcs(int boundary, const std::vector<std::pair<int, int>>& arcs,
                              std::vector<int> loops = {});
  static FlatTangle empty() { return FlatTangle({}, {}); }

  int boundary() const { return static_cast<int>(mate_.size()); }
  const std::vector<int>& mate() const { return mate_; }
  const std::vector<int>& loops() const { return loops_; }
  int arc_count() const { return boundary() / 2; }
  int loop_count() const { return static_cast<int>(loops_.size()); }
  int circle_count() const { return arc_count() + loop_count(); }
  bool closed() const { return mate_.empty(); }

  /// Circle index of the arc through boundary point p.
  int arc_index(int p) const { return arc_of_point_.at(p); }
  /// Smaller endpoint of the i-th arc.
  int arc_start(int i) const { return arc_starts_.at(i); }
  /// Circle index of the loop with identifier id; throws if absent.
  int loop_index(int id) const;
  bool has_loop(int id) const;
  int index_of(const Circle& c) const;
  bool is_loop(int circle) const { return circle >= arc_count(); }
  int loop_id(int circle) const { return loops_.at(circle - arc_count()); }
  /// Stable address of the circle with the given index.
  Circle circle(int index) const {
    return is_loop(index) ? Circle::loop(loop_id(index)) : Circle::arc(arc_start(index));
  }

  /// Copy with one extra loop.
  FlatTangle with_loop(int id) const;
  /// Copy with a loop removed.
  FlatTangle without_loop(int id) const;

  std::string to_string() const;

  friend bool operator==(const FlatTangle& a, const FlatTangle& b) {
    return a.mate_ == b.mate_ && a.loops_ == b.loops_;
  }
  friend std::strong_ordering operator<=>(const FlatTangle& a, const FlatTangle& b) {
    if (auto c = a.mate_ <=> b.mate_; c != 0) return c;
    return a.loops_ <=> b.loops_;
  }

 private:
  std::vector<int> mate_;
  std::vector<int> loops_;
  std::vector<int> arc_of_point_;
  std::vector<int> arc_starts_;
};

/// True iff the matching (given as mate array) is non-crossing with respect
/// to the cyclic order of the boundary points.
bool is_planar_matching(const std::vector<int>& mate);

/// Boundary cycles of the pair (source, target): closed curves on the
/// boundary of the cylinder formed by source arcs, target arcs, and the
/// vertical segments over boundary points, plus every loop of either side.
///
/// Cycle order: arc cycles by smallest boundary point, then source loops,
/// then target loops.
struct CycleMap {
  int arc_cycles = 0;
  int count = 0;
  std::vector<int> source_cycle;  // per source circle
  std::vector<int> target_cycle;  // per target circle

  CycleMap(const FlatTangle& source, const FlatTangle& target);
};

}  // namespace cobkh

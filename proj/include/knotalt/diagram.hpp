#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "knotalt/pd_code.hpp"

namespace knotalt {

// Darts are numbered 4 * crossing + slot, crossings in PD order.
struct Dart {
  int id;
  int crossing;
  int slot;
  Label label;
  bool incoming;
};

/// The 4-valent planar map behind a PD code: darts, the counterclockwise
/// rotation at each crossing and the edge involution.
class CombinatorialMap {
 public:
  CombinatorialMap() = default;
  explicit CombinatorialMap(PDCode pd);

  const PDCode& pd() const noexcept { return pd_; }
  int crossing_count() const noexcept { return pd_.crossing_count(); }
  int dart_count() const noexcept { return static_cast<int>(darts_.size()); }
  int edge_count() const noexcept { return dart_count() / 2; }
  std::span<const Dart> darts() const noexcept { return darts_; }
  const Dart& dart(int d) const { return darts_.at(d); }

  int twin(int d) const { return twin_.at(d); }
  static int rotate_ccw(int d) noexcept { return 4 * (d / 4) + (d % 4 + 1) % 4; }
  static int rotate_cw(int d) noexcept { return 4 * (d / 4) + (d % 4 + 3) % 4; }
  // Strand continuation through the crossing.
  static int opposite(int d) noexcept { return 4 * (d / 4) + (d % 4 + 2) % 4; }

 private:
  PDCode pd_;
  std::vector<Dart> darts_;
  std::vector<int> twin_;
};

/// Builds the map. Rejects diagrams whose crossings fall into more than one
/// connected piece (split diagrams).
CombinatorialMap build_map(const PDCode& pd);

enum class Color { White, Black };

std::string_view to_string(Color c) noexcept;

struct Region {
  int id = 0;
  // Face walk: each dart is left along its edge with the region on its right
  // (as seen walking away from the crossing).
  std::vector<int> boundary;
  Color color = Color::White;
  bool is_outer = false;
};

// A corner is identified with the dart that bounds it clockwise: corner d
// lies between dart d and the next dart counterclockwise.
struct RegionSet {
  std::vector<Region> regions;
  std::vector<int> corner_region;

  int size() const noexcept { return static_cast<int>(regions.size()); }
};

/// Traces the faces. Throws InputError when the face count violates Euler's
/// formula, i.e. the code describes no planar diagram.
RegionSet trace_regions(const CombinatorialMap& map);

/// Region to the left / right of the strand through dart `d`, relative to
/// the strand's orientation.
int left_region(const CombinatorialMap& map, const RegionSet& regions, int d);
int right_region(const CombinatorialMap& map, const RegionSet& regions, int d);

/// Proper two-coloring with the outer region white.
void checkerboard(const CombinatorialMap& map, RegionSet& regions, int outer_region);

enum class IncidenceKind { Into, OutOf, Sideswipe };

std::string_view to_string(IncidenceKind k) noexcept;

// One record per corner, so a region can meet a crossing more than once.
struct CrossingIncidence {
  int crossing;
  int corner;  // dart id of the corner
  int region;
  IncidenceKind kind;
};

std::vector<CrossingIncidence> classify_incidences(const CombinatorialMap& map,
                                                   const RegionSet& regions);

struct ArcBalance {
  int arcs_in = 0;
  int arcs_out = 0;
  bool operator==(const ArcBalance&) const = default;
};

/// Arcs beginning / ceasing to border `region` summed over its corners.
ArcBalance arc_balance(int region, std::span<const CrossingIncidence> incidences);

/// A fully analysed planar diagram: map, colored regions, corner incidences
/// and crossing signs, relative to one choice of outer region.
struct Diagram {
  CombinatorialMap map;
  RegionSet regions;
  std::vector<CrossingIncidence> incidences;
  std::vector<Sign> signs;
  std::vector<int> into_region;    // per crossing
  std::vector<int> out_of_region;  // per crossing
  int outer_region = 0;
  std::optional<int> outer_dart;

  int crossing_count() const noexcept { return map.crossing_count(); }
};

/// Dart whose corner is the default outer region: the outgoing dart of the
/// smallest edge label. Empty for the crossingless unknot.
std::optional<int> default_outer_dart(const CombinatorialMap& map);

/// Runs build_map, trace_regions, checkerboard and classify_incidences.
/// `outer_dart` selects the region in that dart's corner as the outer one.
Diagram make_diagram(const PDCode& pd, std::optional<int> outer_dart = std::nullopt);

}  // namespace knotalt

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "holocolor/coloring.hpp"
#include "holocolor/permutation.hpp"

namespace holocolor {

using Rational = boost::multiprecision::cpp_rational;

/// Parses "a/b" or an integer. Throws ParseError.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& r);

/// Closed arc [start, end] of one layer; `end` may exceed the circumference
/// for the arc that wraps past 0.
struct Arc {
  std::size_t id = 0;
  int layer = 0;  ///< 1-based
  Rational start;
  Rational end;
};

/// j complexes on a circle of circumference C, each given by its vertex
/// positions. All positions are distinct across layers (full transversality).
class CircleLayers {
 public:
  /// Throws DomainError when a layer has fewer than 2 points, a position lies
  /// outside [0, C), C <= 0, or two positions coincide.
  CircleLayers(Rational circumference, std::vector<std::vector<Rational>> layers);

  int layer_count() const noexcept { return static_cast<int>(layers_.size()); }
  const Rational& circumference() const noexcept { return circumference_; }
  /// Sorted boundary positions of layer i (1-based).
  const std::vector<Rational>& layer(int i) const { return layers_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<std::vector<Rational>>& layers() const noexcept { return layers_; }

  /// Arcs numbered consecutively layer by layer; arc t of a layer starts at
  /// that layer's t-th point.
  std::vector<Arc> arcs() const;
  std::size_t arc_count() const;

  /// Two-fold cover: circumference 2C, every point p repeated at p + C. One
  /// sweep of the cover traverses the original loop twice.
  CircleLayers double_cover() const;

  bool operator==(const CircleLayers&) const = default;

 private:
  Rational circumference_;
  std::vector<std::vector<Rational>> layers_;
};

CircleLayers parse_circle_layers(std::string_view text);
std::string serialize_circle_layers(const CircleLayers& cl);

/// Colors of every layer at one point of the sweep; the remaining color of
/// 1..j+1 is free.
struct LayerState {
  std::vector<Color> layer_color;  ///< index i-1 for layer i
  Color free_color = 0;

  /// Boundary point of layer i: that layer trades its color for the free one.
  void cross(int layer);
  bool operator==(const LayerState&) const = default;
};

LayerState initial_layer_state(int layers);

/// One boundary crossing of the sweep.
struct SweepEvent {
  Rational position;
  int layer = 0;
};

enum class SweepDirection { kIncreasing, kDecreasing };

/// Boundary points in the order met by a sweep that starts just after 0 and
/// runs once around. Increasing: a point at 0 comes last; decreasing: first.
std::vector<SweepEvent> sweep_events(const CircleLayers& cl,
                                     SweepDirection direction = SweepDirection::kIncreasing);

/// Runs the canonical state of `layers` through the crossings.
LayerState run_sweep(int layers, const std::vector<SweepEvent>& events);

/// Permutation rho in S_{j+1} with rho(start color) = end color after one
/// sweep, the free color included.
Permutation sweep_permutation(const LayerState& start, const LayerState& end);

Permutation circle_holonomy(const CircleLayers& cl,
                            SweepDirection direction = SweepDirection::kIncreasing);

/// Multilayer coloring indexed by arc id.
using ArcColoring = std::vector<Color>;

/// (j+1)-coloring from the sweep states, present iff the holonomy is trivial.
std::optional<ArcColoring> circle_colorable(const CircleLayers& cl);

/// Closed arcs share at least one point of the circle.
bool arcs_meet(const Arc& a, const Arc& b, const Rational& circumference);

/// Adjacent arcs of one layer differ and overlapping arcs of different layers
/// differ; colors within 1..colors. Throws DomainError on a size mismatch.
bool verify_arc_coloring(const CircleLayers& cl, const ArcColoring& f, int colors);

}  // namespace holocolor

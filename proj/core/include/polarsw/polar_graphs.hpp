#pragma once

#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "polarsw/graph.hpp"
#include "polarsw/polar_space.hpp"

namespace polarsw {

enum class PolarGraphKind {
  /// Isotropic points, adjacent when collinear in the polar space.
  collinearity,
  /// All non-isotropic points, adjacent when orthogonal.
  polarity,
  /// Non-isotropic points with sigma square (resp. non-square), adjacent
  /// when orthogonal. Quadrics only.
  plus,
  minus,
};

std::string_view to_string(PolarGraphKind kind);
std::optional<PolarGraphKind> parse_polar_graph_kind(std::string_view name);

/// A geometry-derived graph, vertex v standing for points[v]. Vertices
/// follow the canonical point order and are labelled by coordinate strings.
struct PolarGraph {
  Graph graph;
  std::vector<ProjectivePoint> points;
  std::unordered_map<std::uint64_t, std::size_t> index;

  std::optional<std::size_t> vertex_of(const FiniteField& f, const Vector& v) const;
};

PointFilter vertex_filter(PolarGraphKind kind);

/// Throws std::invalid_argument for plus/minus on non-quadratic spaces.
PolarGraph build_polar_graph(const PolarSpace& space, PolarGraphKind kind);

}  // namespace polarsw

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>

#include "polarsw/graph.hpp"

namespace polarsw {

/// value -> number of occurrences.
using Histogram = std::map<std::uint64_t, std::uint64_t>;

/// For every triangle {x,y,z}: |N(x) & N(y) & N(z)|.
Histogram triple_intersection_distribution(const Graph& g);

/// First triangle (x < y < z, scan order) whose common neighbourhood has
/// the given size.
std::optional<std::array<std::size_t, 3>> find_triangle_with_value(const Graph& g, std::uint64_t value);

/// For every 4-clique {a,b,c,d}: |N(a) & N(b) & N(c) & N(d)|.
Histogram four_clique_distribution(const Graph& g);
std::optional<std::array<std::size_t, 4>> find_four_clique_with_value(const Graph& g, std::uint64_t value);

struct CliqueCensus {
  /// Sizes of maximal cliques with size >= floor.
  Histogram sizes;
  /// First maximal clique found of each size, vertices ascending.
  std::map<std::uint64_t, VertexSet> witnesses;
};

/// Bron-Kerbosch with Tomita pivoting over bit rows. Branches that cannot
/// reach size_floor are pruned.
CliqueCensus maximal_cliques(const Graph& g, std::size_t size_floor = 0);

bool is_clique(const Graph& g, const VertexSet& vs);
bool is_maximal_clique(const Graph& g, const VertexSet& vs);

}  // namespace polarsw

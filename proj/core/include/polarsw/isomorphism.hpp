#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polarsw/graph.hpp"

namespace polarsw {

inline constexpr std::size_t kExhaustiveIsomorphismLimit = 64;

struct IsomorphismSearch {
  /// mapping[u] = image of u in H, when an isomorphism exists.
  std::optional<std::vector<std::size_t>> mapping;
  std::uint64_t nodes = 0;
};

/// Individualisation-refinement backtracking: colour refinement on both
/// graphs with a shared colour naming, then branch on the smallest
/// non-singleton class. Complete; refuses graphs above
/// kExhaustiveIsomorphismLimit vertices with std::invalid_argument.
IsomorphismSearch find_isomorphism(const Graph& g, const Graph& h);

bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<std::size_t>& mapping);

}  // namespace polarsw

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polarsw/graph.hpp"
#include "polarsw/subspace.hpp"

namespace polarsw {

/// A 2-(v, b, lambda) design. Following the usual finite-geometry
/// convention here, b is the block SIZE.
struct Design {
  std::size_t point_count = 0;
  std::vector<std::string> point_labels;
  /// Each block sorted ascending.
  std::vector<VertexSet> blocks;
  std::size_t block_size = 0;
  std::size_t lambda = 0;
};

/// Points and lines of PG(n-1, q), with the projective points kept for
/// subspace lookups. Blocks are sorted lexicographically by point indices.
struct GrassmannDesign {
  Design design;
  FiniteField field;
  std::size_t n;
  std::vector<ProjectivePoint> points;
};

struct SubdesignEmbedding {
  VertexSet points;
  /// Indices of parent blocks contained in `points`.
  VertexSet blocks;
};

struct DesignCheck {
  bool valid = false;
  std::optional<std::pair<std::size_t, std::size_t>> witness_pair;
  std::optional<std::size_t> witness_block;
  std::string reason;
};

/// Throws std::invalid_argument when n < 3.
GrassmannDesign grassmann_design(std::size_t n, unsigned q);

/// Points and affine lines of AG(3,3): 27 points, 117 blocks of size 3.
Design ag_design();

/// Throws std::invalid_argument unless 2 < dim(S) < n.
SubdesignEmbedding subdesign_from_subspace(const GrassmannDesign& d, const Subspace& s);

DesignCheck verify_design(const Design& d);

/// Vertices are blocks, adjacent when they meet. Throws
/// std::invalid_argument unless lambda == 1.
Graph block_graph(const Design& d);

/// Blocks of the subdesign through p1 but not p2 have p1 replaced by p2,
/// and vice versa. Block positions are kept, so the block graph of the
/// result lines up vertex-for-vertex with the original.
Design jungnickel_modify(const Design& d, const SubdesignEmbedding& emb, std::size_t p1, std::size_t p2);

/// Text format, version 1:
///   design 1
///   v <points> b <block size> lambda <lambda> blocks <count>
///   <sorted point indices of a block, space separated>   (one line per block)
void write_design(std::ostream& os, const Design& d);
/// Throws FormatError on malformed input.
Design read_design(std::istream& is);

}  // namespace polarsw

#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polarsw/designs.hpp"
#include "polarsw/graph.hpp"
#include "polarsw/polar_graphs.hpp"
#include "polarsw/polar_space.hpp"

namespace polarsw {

/// Two disjoint, equally sized vertex sets {C1, C2}; the rest of the
/// vertex set is D.
struct SwitchingSetPair {
  VertexSet c1;
  VertexSet c2;
};

/// Cells C1..Ct of a Godsil-McKay partition; D is implicit.
struct GMPartition {
  std::vector<VertexSet> cells;
};

enum class WqhFailure {
  none,
  malformed,
  c1_irregular,
  c2_irregular,
  cell_degree_mismatch,
  union_irregular,
  outside_vertex,
};

std::string_view to_string(WqhFailure f);

struct WqhVerdict {
  bool ok = false;
  WqhFailure failure = WqhFailure::none;
  std::optional<std::size_t> witness;
  std::string message;

  // Structure of the pair (filled when the cells are well formed).
  std::size_t c1_degree = 0;
  std::size_t c2_degree = 0;
  std::size_t union_degree = 0;
  std::size_t cross_edges = 0;

  // Outside vertices by the condition they satisfy.
  std::size_t balanced = 0;
  std::size_t attached_c1 = 0;
  std::size_t attached_c2 = 0;
};

/// Checks that |C1| = |C2| >= 1, the induced subgraphs on C1 and C2 are
/// regular of the same degree, C1 u C2 induces a regular graph, and every
/// outside vertex x has |N(x) & C1| = |N(x) & C2| or N(x) & (C1 u C2) in
/// {C1, C2}.
WqhVerdict validate_wqh(const Graph& g, const SwitchingSetPair& pair);

class SwitchingError : public std::runtime_error {
 public:
  explicit SwitchingError(const std::string& what, std::optional<std::size_t> witness = std::nullopt)
      : std::runtime_error(what), witness_(witness) {}
  std::optional<std::size_t> witness() const { return witness_; }

 private:
  std::optional<std::size_t> witness_;
};

/// Outside vertices attached to exactly C1 are reattached to C2 and vice
/// versa. Throws SwitchingError when validation fails.
Graph apply_wqh(const Graph& g, const SwitchingSetPair& pair);

enum class GmFailure { none, malformed, not_equitable, outside_vertex };
std::string_view to_string(GmFailure f);

struct GmVerdict {
  bool ok = false;
  GmFailure failure = GmFailure::none;
  std::optional<std::size_t> witness;
  std::optional<std::size_t> cell;
  std::string message;
};

GmVerdict validate_gm(const Graph& g, const GMPartition& partition);

/// Outside vertices adjacent to exactly half of a cell get the other half
/// instead. Throws SwitchingError when validation fails.
Graph apply_gm(const Graph& g, const GMPartition& partition);

/// For a single GM cell C of size 4, a split {C1, C2} into pairs that is a
/// WQH switching set with the same effect up to relabelling, together with
/// that relabelling: applying `relabel` to apply_gm(G, {C}) gives
/// apply_wqh(G, {C1, C2}). The relabelling swaps the two vertices of C1 and
/// the two vertices of C2.
struct GmAsWqh {
  SwitchingSetPair pair;
  std::vector<std::size_t> relabel;
};
/// Throws std::invalid_argument unless the cell has 4 vertices and induces
/// a regular subgraph.
GmAsWqh gm_cell_as_wqh(const Graph& g, const VertexSet& cell);

// Constructors for the geometric and design switching sets.

/// C_i = points of L_i not on L_{3-i}, as vertices of a collinearity graph.
/// P must be totally isotropic of dimension m (2 <= m <= rank) and L1 != L2
/// hyperplanes of P. Throws std::invalid_argument otherwise.
SwitchingSetPair collinearity_switch_set(const PolarSpace& space, const PolarGraph& graph, const Subspace& plane,
                                         const Subspace& l1, const Subspace& l2);

/// C1 = blocks of the subdesign through p1 but not p2; C2 symmetric.
/// Throws std::invalid_argument for lambda != 1, p1 == p2 or points
/// outside the subdesign.
SwitchingSetPair design_switch_set(const Design& d, const SubdesignEmbedding& emb, std::size_t p1, std::size_t p2);

/// C_i = the non-isotropic points of L_i other than p. L1 != L2 must be
/// lines with radical exactly p whose span has radical p, and (for
/// quadrics) all their non-isotropic points must be vertices of `graph`.
/// Throws std::invalid_argument otherwise.
SwitchingSetPair tangent_line_switch_set(const PolarSpace& space, const PolarGraph& graph, const Subspace& p,
                                         const Subspace& l1, const Subspace& l2);

enum class QuotientTarget { any, hermitian_nondeg, hyperbolic, elliptic };
std::optional<QuotientTarget> parse_quotient_target(std::string_view s);
std::string_view to_string(QuotientTarget t);

/// The quotient type that makes the tangent construction non-isomorphic:
/// U(2, sqrt q) for hermitian spaces, O^-(2,q) for q = 3 mod 4 and O^+(2,q)
/// for q = 1 mod 4.
QuotientTarget witness_quotient(const PolarSpace& space);

struct TangentConfiguration {
  Subspace p;
  Subspace l1;
  Subspace l2;
  Subspace plane;
  LineClass quotient;
};

/// First isotropic point p (canonical order, starting `start` positions in
/// and wrapping) with tangent lines L1 < L2 through p whose points other
/// than p pass `type_filter`, whose span P has radical p and whose
/// quotient P/p matches `target`. An empty result means the search was
/// exhaustive and found nothing.
std::optional<TangentConfiguration> find_tangent_configuration(const PolarSpace& space, QuotientTarget target,
                                                               PointFilter type_filter, std::size_t start = 0);

struct CollinearityConfiguration {
  Subspace plane;
  Subspace l1;
  Subspace l2;
};

/// The `choice`-th totally isotropic m-space (canonical order, wrapping)
/// with its first two hyperplanes.
std::optional<CollinearityConfiguration> find_collinearity_configuration(const PolarSpace& space, std::size_t m,
                                                                         std::size_t choice = 0);

/// All k-subspaces of the subspace s, in canonical order.
std::vector<Subspace> subspaces_of(const Subspace& s, std::size_t k);

struct DesignConfiguration {
  Subspace s;
  SubdesignEmbedding embedding;
  std::size_t p1;
  std::size_t p2;
};

/// The first s-space of the canonical order and its `choice`-th point pair.
DesignConfiguration find_design_configuration(const GrassmannDesign& d, std::size_t s, std::size_t choice = 0);

}  // namespace polarsw

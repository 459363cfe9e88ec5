#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polarsw {

using VertexSet = std::vector<std::size_t>;

/// Simple undirected graph stored as bit rows. Immutable; build with
/// GraphBuilder. Optional per-vertex labels tie vertices back to the
/// geometric objects they came from.
class Graph {
 public:
  Graph() = default;

  std::size_t order() const { return n_; }
  std::size_t words_per_row() const { return words_; }

  bool adjacent(std::size_t u, std::size_t v) const {
    return (rows_[u * words_ + v / 64] >> (v % 64)) & 1u;
  }
  std::span<const std::uint64_t> row(std::size_t u) const {
    return {rows_.data() + u * words_, words_};
  }
  std::size_t degree(std::size_t u) const;
  VertexSet neighbours(std::size_t u) const;
  std::size_t common_neighbours(std::size_t u, std::size_t v) const;
  std::uint64_t edge_count() const;

  const std::vector<std::string>& labels() const { return labels_; }
  std::string_view label(std::size_t u) const {
    return u < labels_.size() ? std::string_view(labels_[u]) : std::string_view();
  }
  Graph with_labels(std::vector<std::string> labels) const;

  /// Edge-set equality; labels are ignored.
  bool operator==(const Graph& other) const { return n_ == other.n_ && rows_ == other.rows_; }

 private:
  friend class GraphBuilder;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<std::string> labels_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);
  explicit GraphBuilder(const Graph& g);

  std::size_t order() const { return n_; }
  bool adjacent(std::size_t u, std::size_t v) const;
  /// Throws std::invalid_argument on loops or out-of-range vertices.
  void set_edge(std::size_t u, std::size_t v, bool present);
  void add_edge(std::size_t u, std::size_t v) { set_edge(u, v, true); }
  void set_labels(std::vector<std::string> labels);

  Graph build() &&;

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
  std::vector<std::string> labels_;
};

Graph complement(const Graph& g);

/// Relabels vertex v as perm[v].
Graph permute(const Graph& g, std::span<const std::size_t> perm);

Graph induced_subgraph(const Graph& g, std::span<const std::size_t> vertices);

Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph complete_graph(std::size_t n);

struct SrgParams {
  std::uint64_t v = 0;
  std::uint64_t k = 0;
  std::uint64_t lambda = 0;
  std::uint64_t mu = 0;

  /// k(k - lambda - 1) = (v - k - 1) mu.
  bool feasible() const { return k * (k - lambda - 1) == (v - k - 1) * mu; }
  std::string to_string() const;
  auto operator<=>(const SrgParams&) const = default;
};

struct SrgScan {
  std::optional<SrgParams> params;
  /// Vertex pair (or a single vertex twice, for irregularity) that breaks
  /// strong regularity.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  std::string reason;
};

/// Full pair scan. Complete and edgeless graphs are not considered strongly
/// regular.
SrgScan srg_scan(const Graph& g);
inline std::optional<SrgParams> srg_params(const Graph& g) { return srg_scan(g).params; }

/// One line per vertex: "u: v1 v2 ...". Debugging aid.
std::string to_adjacency_list(const Graph& g);

}  // namespace polarsw

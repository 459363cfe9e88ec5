#include "polarsw/graph.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include "polarsw/parallel.hpp"

namespace polarsw {

std::size_t Graph::degree(std::size_t u) const {
  std::size_t d = 0;
  for (auto w : row(u)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

VertexSet Graph::neighbours(std::size_t u) const {
  VertexSet out;
  const auto r = row(u);
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t bits = r[w];
    while (bits) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::size_t Graph::common_neighbours(std::size_t u, std::size_t v) const {
  const auto a = row(u);
  const auto b = row(v);
  std::size_t c = 0;
  for (std::size_t w = 0; w < words_; ++w) c += static_cast<std::size_t>(std::popcount(a[w] & b[w]));
  return c;
}

std::uint64_t Graph::edge_count() const {
  std::uint64_t twice = 0;
  for (auto w : rows_) twice += static_cast<std::uint64_t>(std::popcount(w));
  return twice / 2;
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != n_) throw std::invalid_argument("label count does not match order");
  Graph g = *this;
  g.labels_ = std::move(labels);
  return g;
}

GraphBuilder::GraphBuilder(std::size_t n) : n_(n), words_((n + 63) / 64), rows_(n * words_, 0) {}

GraphBuilder::GraphBuilder(const Graph& g)
    : n_(g.n_), words_(g.words_), rows_(g.rows_), labels_(g.labels_) {}

bool GraphBuilder::adjacent(std::size_t u, std::size_t v) const {
  return (rows_[u * words_ + v / 64] >> (v % 64)) & 1u;
}

void GraphBuilder::set_edge(std::size_t u, std::size_t v, bool present) {
  if (u >= n_ || v >= n_) throw std::invalid_argument("vertex out of range");
  if (u == v) throw std::invalid_argument("loops are not allowed");
  const std::uint64_t bu = std::uint64_t{1} << (v % 64);
  const std::uint64_t bv = std::uint64_t{1} << (u % 64);
  if (present) {
    rows_[u * words_ + v / 64] |= bu;
    rows_[v * words_ + u / 64] |= bv;
  } else {
    rows_[u * words_ + v / 64] &= ~bu;
    rows_[v * words_ + u / 64] &= ~bv;
  }
}

void GraphBuilder::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n_) throw std::invalid_argument("label count does not match order");
  labels_ = std::move(labels);
}

Graph GraphBuilder::build() && {
  Graph g;
  g.n_ = n_;
  g.words_ = words_;
  g.rows_ = std::move(rows_);
  g.labels_ = std::move(labels_);
  return g;
}

Graph complement(const Graph& g) {
  GraphBuilder b(g.order());
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  b.set_labels(g.labels());
  return std::move(b).build();
}

Graph permute(const Graph& g, std::span<const std::size_t> perm) {
  if (perm.size() != g.order()) throw std::invalid_argument("permutation size mismatch");
  GraphBuilder b(g.order());
  for (std::size_t u = 0; u < g.order(); ++u)
    for (auto v : g.neighbours(u))
      if (u < v) b.add_edge(perm[u], perm[v]);
  if (!g.labels().empty()) {
    std::vector<std::string> labels(g.order());
    for (std::size_t u = 0; u < g.order(); ++u) labels[perm[u]] = g.labels()[u];
    b.set_labels(std::move(labels));
  }
  return std::move(b).build();
}

Graph induced_subgraph(const Graph& g, std::span<const std::size_t> vertices) {
  GraphBuilder b(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.adjacent(vertices[i], vertices[j])) b.add_edge(i, j);
  if (!g.labels().empty()) {
    std::vector<std::string> labels;
    for (auto v : vertices) labels.emplace_back(g.label(v));
    b.set_labels(std::move(labels));
  }
  return std::move(b).build();
}

Graph cycle_graph(std::size_t n) {
  GraphBuilder b(n);
  for (std::size_t i = 0; i < n && n >= 3; ++i) b.add_edge(i, (i + 1) % n);
  return std::move(b).build();
}

Graph path_graph(std::size_t n) {
  GraphBuilder b(n);
  for (std::size_t i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return std::move(b).build();
}

Graph complete_graph(std::size_t n) {
  GraphBuilder b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) b.add_edge(i, j);
  return std::move(b).build();
}

std::string SrgParams::to_string() const {
  return "(" + std::to_string(v) + "," + std::to_string(k) + "," + std::to_string(lambda) + "," +
         std::to_string(mu) + ")";
}

SrgScan srg_scan(const Graph& g) {
  SrgScan out;
  const std::size_t n = g.order();
  if (n < 2) {
    out.reason = "fewer than two vertices";
    return out;
  }
  const std::size_t k = g.degree(0);
  for (std::size_t u = 1; u < n; ++u) {
    if (g.degree(u) != k) {
      out.witness = std::make_pair(std::size_t{0}, u);
      out.reason = "not regular";
      return out;
    }
  }
  if (k == 0 || k == n - 1) {
    out.reason = k == 0 ? "edgeless" : "complete";
    return out;
  }

  // Per-chunk first values seen on edges and non-edges; -1 = none yet.
  struct Partial {
    long long lambda = -1;
    long long mu = -1;
    std::optional<std::pair<std::size_t, std::size_t>> lambda_at, mu_at, bad;
    std::string reason;
  };
  std::vector<Partial> parts(chunk_count(n));
  parallel_chunks(n, [&](std::size_t begin, std::size_t end, std::size_t c) {
    Partial& p = parts[c];
    for (std::size_t u = begin; u < end && !p.bad; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        const long long cn = static_cast<long long>(g.common_neighbours(u, v));
        auto& slot = g.adjacent(u, v) ? p.lambda : p.mu;
        auto& at = g.adjacent(u, v) ? p.lambda_at : p.mu_at;
        if (slot < 0) {
          slot = cn;
          at = std::make_pair(u, v);
        } else if (slot != cn) {
          p.bad = std::make_pair(u, v);
          p.reason = g.adjacent(u, v) ? "edges disagree on common neighbours"
                                      : "non-edges disagree on common neighbours";
          break;
        }
      }
    }
  });

  long long lambda = -1, mu = -1;
  for (const auto& p : parts) {
    if (p.bad) {
      out.witness = p.bad;
      out.reason = p.reason;
      return out;
    }
    if (p.lambda >= 0) {
      if (lambda >= 0 && lambda != p.lambda) {
        out.witness = p.lambda_at;
        out.reason = "edges disagree on common neighbours";
        return out;
      }
      lambda = p.lambda;
    }
    if (p.mu >= 0) {
      if (mu >= 0 && mu != p.mu) {
        out.witness = p.mu_at;
        out.reason = "non-edges disagree on common neighbours";
        return out;
      }
      mu = p.mu;
    }
  }
  out.params = SrgParams{n, k, static_cast<std::uint64_t>(lambda), static_cast<std::uint64_t>(mu)};
  return out;
}

std::string to_adjacency_list(const Graph& g) {
  std::ostringstream os;
  for (std::size_t u = 0; u < g.order(); ++u) {
    os << u << ':';
    for (auto v : g.neighbours(u)) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

}  // namespace polarsw

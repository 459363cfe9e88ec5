#include "polarsw/switching.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace polarsw {
namespace {

using Bits = std::vector<std::uint64_t>;

Bits mask_of(const Graph& g, const VertexSet& vs) {
  Bits m(g.words_per_row(), 0);
  for (auto v : vs) m[v / 64] |= std::uint64_t{1} << (v % 64);
  return m;
}

std::size_t count_in(const Graph& g, std::size_t u, const Bits& mask) {
  const auto r = g.row(u);
  std::size_t c = 0;
  for (std::size_t w = 0; w < mask.size(); ++w) c += static_cast<std::size_t>(std::popcount(r[w] & mask[w]));
  return c;
}

bool test_bit(const Bits& b, std::size_t v) { return (b[v / 64] >> (v % 64)) & 1u; }

// Empty string when the cells are fine.
std::string cell_problem(const Graph& g, const std::vector<const VertexSet*>& cells) {
  std::vector<bool> seen(g.order(), false);
  for (const auto* c : cells) {
    if (c->empty()) return "empty cell";
    for (auto v : *c) {
      if (v >= g.order()) return "vertex " + std::to_string(v) + " out of range";
      if (seen[v]) return "vertex " + std::to_string(v) + " appears twice";
      seen[v] = true;
    }
  }
  return {};
}

}  // namespace

std::string_view to_string(WqhFailure f) {
  switch (f) {
    case WqhFailure::none: return "none";
    case WqhFailure::malformed: return "malformed";
    case WqhFailure::c1_irregular: return "c1_irregular";
    case WqhFailure::c2_irregular: return "c2_irregular";
    case WqhFailure::cell_degree_mismatch: return "cell_degree_mismatch";
    case WqhFailure::union_irregular: return "union_irregular";
    case WqhFailure::outside_vertex: return "outside_vertex";
  }
  return "?";
}

std::string_view to_string(GmFailure f) {
  switch (f) {
    case GmFailure::none: return "none";
    case GmFailure::malformed: return "malformed";
    case GmFailure::not_equitable: return "not_equitable";
    case GmFailure::outside_vertex: return "outside_vertex";
  }
  return "?";
}

WqhVerdict validate_wqh(const Graph& g, const SwitchingSetPair& pair) {
  WqhVerdict v;
  auto fail = [&](WqhFailure f, std::optional<std::size_t> w, std::string msg) {
    v.failure = f;
    v.witness = w;
    v.message = std::move(msg);
    return v;
  };
  if (auto problem = cell_problem(g, {&pair.c1, &pair.c2}); !problem.empty())
    return fail(WqhFailure::malformed, std::nullopt, problem);
  if (pair.c1.size() != pair.c2.size()) return fail(WqhFailure::malformed, std::nullopt, "|C1| != |C2|");

  const Bits m1 = mask_of(g, pair.c1), m2 = mask_of(g, pair.c2);
  Bits both = m1;
  for (std::size_t w = 0; w < both.size(); ++w) both[w] |= m2[w];

  v.c1_degree = count_in(g, pair.c1.front(), m1);
  for (auto u : pair.c1)
    if (count_in(g, u, m1) != v.c1_degree)
      return fail(WqhFailure::c1_irregular, u, "induced subgraph on C1 is not regular");
  v.c2_degree = count_in(g, pair.c2.front(), m2);
  for (auto u : pair.c2)
    if (count_in(g, u, m2) != v.c2_degree)
      return fail(WqhFailure::c2_irregular, u, "induced subgraph on C2 is not regular");
  if (v.c1_degree != v.c2_degree)
    return fail(WqhFailure::cell_degree_mismatch, std::nullopt, "C1 and C2 induce different degrees");
  v.union_degree = count_in(g, pair.c1.front(), both);
  for (const auto* cell : {&pair.c1, &pair.c2})
    for (auto u : *cell)
      if (count_in(g, u, both) != v.union_degree)
        return fail(WqhFailure::union_irregular, u, "induced subgraph on C1 u C2 is not regular");
  for (auto u : pair.c1) v.cross_edges += count_in(g, u, m2);

  const std::size_t s = pair.c1.size();
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (test_bit(both, x)) continue;
    const std::size_t a = count_in(g, x, m1), b = count_in(g, x, m2);
    if (a == b) {
      ++v.balanced;
    } else if (a == s && b == 0) {
      ++v.attached_c1;
    } else if (a == 0 && b == s) {
      ++v.attached_c2;
    } else {
      return fail(WqhFailure::outside_vertex, x,
                  "vertex " + std::to_string(x) + " meets C1 in " + std::to_string(a) + " and C2 in " +
                      std::to_string(b) + " vertices");
    }
  }
  v.ok = true;
  return v;
}

Graph apply_wqh(const Graph& g, const SwitchingSetPair& pair) {
  const auto v = validate_wqh(g, pair);
  if (!v.ok) throw SwitchingError("invalid switching set: " + v.message, v.witness);
  const Bits m1 = mask_of(g, pair.c1), m2 = mask_of(g, pair.c2);
  const std::size_t s = pair.c1.size();
  GraphBuilder b(g);
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (test_bit(m1, x) || test_bit(m2, x)) continue;
    const std::size_t a = count_in(g, x, m1), c = count_in(g, x, m2);
    if (a == c) continue;
    const bool to_c2 = a == s;
    for (auto u : pair.c1) b.set_edge(x, u, !to_c2);
    for (auto u : pair.c2) b.set_edge(x, u, to_c2);
  }
  return std::move(b).build();
}

GmVerdict validate_gm(const Graph& g, const GMPartition& partition) {
  GmVerdict v;
  std::vector<const VertexSet*> cells;
  for (const auto& c : partition.cells) cells.push_back(&c);
  if (cells.empty()) {
    v.failure = GmFailure::malformed;
    v.message = "no cells";
    return v;
  }
  if (auto problem = cell_problem(g, cells); !problem.empty()) {
    v.failure = GmFailure::malformed;
    v.message = problem;
    return v;
  }
  std::vector<Bits> masks;
  Bits all(g.words_per_row(), 0);
  for (const auto& c : partition.cells) {
    masks.push_back(mask_of(g, c));
    for (std::size_t w = 0; w < all.size(); ++w) all[w] |= masks.back()[w];
  }
  for (std::size_t i = 0; i < partition.cells.size(); ++i) {
    for (std::size_t j = 0; j < partition.cells.size(); ++j) {
      const std::size_t expected = count_in(g, partition.cells[i].front(), masks[j]);
      for (auto u : partition.cells[i]) {
        if (count_in(g, u, masks[j]) != expected) {
          v.failure = GmFailure::not_equitable;
          v.witness = u;
          v.cell = j;
          v.message = "vertex " + std::to_string(u) + " breaks equitability towards cell " + std::to_string(j);
          return v;
        }
      }
    }
  }
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (test_bit(all, x)) continue;
    for (std::size_t i = 0; i < partition.cells.size(); ++i) {
      const std::size_t c = count_in(g, x, masks[i]), size = partition.cells[i].size();
      if (c == 0 || c == size || 2 * c == size) continue;
      v.failure = GmFailure::outside_vertex;
      v.witness = x;
      v.cell = i;
      v.message = "vertex " + std::to_string(x) + " meets cell " + std::to_string(i) + " in " + std::to_string(c) +
                  " of " + std::to_string(size) + " vertices";
      return v;
    }
  }
  v.ok = true;
  return v;
}

Graph apply_gm(const Graph& g, const GMPartition& partition) {
  const auto v = validate_gm(g, partition);
  if (!v.ok) throw SwitchingError("invalid GM partition: " + v.message, v.witness);
  Bits all(g.words_per_row(), 0);
  std::vector<Bits> masks;
  for (const auto& c : partition.cells) {
    masks.push_back(mask_of(g, c));
    for (std::size_t w = 0; w < all.size(); ++w) all[w] |= masks.back()[w];
  }
  GraphBuilder b(g);
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (test_bit(all, x)) continue;
    for (std::size_t i = 0; i < partition.cells.size(); ++i) {
      const auto& cell = partition.cells[i];
      if (2 * count_in(g, x, masks[i]) != cell.size()) continue;
      for (auto u : cell) b.set_edge(x, u, !g.adjacent(x, u));
    }
  }
  return std::move(b).build();
}

GmAsWqh gm_cell_as_wqh(const Graph& g, const VertexSet& cell) {
  if (cell.size() != 4) throw std::invalid_argument("GM cell must have 4 vertices");
  const Graph sub = induced_subgraph(g, cell);
  for (std::size_t i = 1; i < 4; ++i)
    if (sub.degree(i) != sub.degree(0)) throw std::invalid_argument("GM cell does not induce a regular graph");
  // The pairing of cell[0] with cell[j] whose two pairs agree on adjacency.
  for (std::size_t j = 1; j < 4; ++j) {
    VertexSet rest;
    for (std::size_t k = 1; k < 4; ++k)
      if (k != j) rest.push_back(k);
    if (g.adjacent(cell[0], cell[j]) != g.adjacent(cell[rest[0]], cell[rest[1]])) continue;
    GmAsWqh out;
    out.pair.c1 = {cell[0], cell[j]};
    out.pair.c2 = {cell[rest[0]], cell[rest[1]]};
    std::sort(out.pair.c1.begin(), out.pair.c1.end());
    std::sort(out.pair.c2.begin(), out.pair.c2.end());
    out.relabel.resize(g.order());
    for (std::size_t v = 0; v < g.order(); ++v) out.relabel[v] = v;
    std::swap(out.relabel[out.pair.c1[0]], out.relabel[out.pair.c1[1]]);
    std::swap(out.relabel[out.pair.c2[0]], out.relabel[out.pair.c2[1]]);
    return out;
  }
  throw std::logic_error("regular 4-vertex graph without a consistent pairing");
}

namespace {

VertexSet vertices_of(const PolarSpace& space, const PolarGraph& graph, const std::vector<ProjectivePoint>& pts) {
  VertexSet out;
  for (const auto& p : pts) {
    const auto v = graph.vertex_of(space.field(), p.coords());
    if (!v) throw std::invalid_argument("point " + encode_vector(space.field(), p.coords()) + " is not a vertex");
    out.push_back(*v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ProjectivePoint> points_outside(const Subspace& a, const Subspace& b) {
  std::vector<ProjectivePoint> out;
  for (auto& p : a.points())
    if (!b.contains(p.coords())) out.push_back(std::move(p));
  return out;
}

}  // namespace

SwitchingSetPair collinearity_switch_set(const PolarSpace& space, const PolarGraph& graph, const Subspace& plane,
                                         const Subspace& l1, const Subspace& l2) {
  const std::size_t m = plane.dim();
  if (m < 2 || m > space.rank()) throw std::invalid_argument("P must have dimension between 2 and the rank");
  if (!space.is_totally_isotropic(plane)) throw std::invalid_argument("P is not totally isotropic");
  if (l1.dim() + 1 != m || l2.dim() + 1 != m || !plane.contains(l1) || !plane.contains(l2))
    throw std::invalid_argument("L1 and L2 must be hyperplanes of P");
  if (l1 == l2) throw std::invalid_argument("L1 and L2 must differ");
  return {vertices_of(space, graph, points_outside(l1, l2)), vertices_of(space, graph, points_outside(l2, l1))};
}

SwitchingSetPair design_switch_set(const Design& d, const SubdesignEmbedding& emb, std::size_t p1, std::size_t p2) {
  if (d.lambda != 1) throw std::invalid_argument("design switching needs lambda = 1");
  if (p1 == p2) throw std::invalid_argument("p1 and p2 must differ");
  const auto in_sub = [&](std::size_t p) { return std::binary_search(emb.points.begin(), emb.points.end(), p); };
  if (!in_sub(p1) || !in_sub(p2)) throw std::invalid_argument("p1 and p2 must lie in the subdesign");
  SwitchingSetPair out;
  for (auto b : emb.blocks) {
    const auto& block = d.blocks[b];
    const bool has1 = std::find(block.begin(), block.end(), p1) != block.end();
    const bool has2 = std::find(block.begin(), block.end(), p2) != block.end();
    if (has1 && !has2) out.c1.push_back(b);
    if (has2 && !has1) out.c2.push_back(b);
  }
  return out;
}

SwitchingSetPair tangent_line_switch_set(const PolarSpace& space, const PolarGraph& graph, const Subspace& p,
                                         const Subspace& l1, const Subspace& l2) {
  if (p.dim() != 1 || !space.is_totally_isotropic(p)) throw std::invalid_argument("p must be an isotropic point");
  if (l1.dim() != 2 || l2.dim() != 2) throw std::invalid_argument("L1 and L2 must be lines");
  if (l1 == l2) throw std::invalid_argument("L1 and L2 must differ");
  if (space.radical(l1) != p || space.radical(l2) != p)
    throw std::invalid_argument("L1 and L2 must have radical exactly p");
  if (space.radical(join(l1, l2)) != p) throw std::invalid_argument("the span of L1 and L2 must have radical p");
  SwitchingSetPair out;
  for (const auto* line : {&l1, &l2}) {
    const auto pts = points_outside(*line, p);
    for (const auto& x : pts)
      if (space.is_isotropic(x.coords())) throw std::invalid_argument("tangent line has a second isotropic point");
    (line == &l1 ? out.c1 : out.c2) = vertices_of(space, graph, pts);
  }
  return out;
}

std::optional<QuotientTarget> parse_quotient_target(std::string_view s) {
  if (s == "any") return QuotientTarget::any;
  if (s == "u2" || s == "hermitian") return QuotientTarget::hermitian_nondeg;
  if (s == "hyperbolic" || s == "o+") return QuotientTarget::hyperbolic;
  if (s == "elliptic" || s == "o-") return QuotientTarget::elliptic;
  return std::nullopt;
}

std::string_view to_string(QuotientTarget t) {
  switch (t) {
    case QuotientTarget::any: return "any";
    case QuotientTarget::hermitian_nondeg: return "u2";
    case QuotientTarget::hyperbolic: return "hyperbolic";
    case QuotientTarget::elliptic: return "elliptic";
  }
  return "?";
}

QuotientTarget witness_quotient(const PolarSpace& space) {
  if (space.kind() == FormKind::hermitian) return QuotientTarget::hermitian_nondeg;
  return space.q() % 4 == 3 ? QuotientTarget::elliptic : QuotientTarget::hyperbolic;
}

std::optional<TangentConfiguration> find_tangent_configuration(const PolarSpace& space, QuotientTarget target,
                                                               PointFilter type_filter, std::size_t start) {
  const auto& f = space.field();
  const auto isotropic = space.points(PointFilter::isotropic);
  if (isotropic.empty()) return std::nullopt;
  for (std::size_t step = 0; step < isotropic.size(); ++step) {
    const auto& point = isotropic[(start + step) % isotropic.size()];
    const Subspace p = Subspace::of_point(f, point);
    std::set<Subspace> lines;
    for (const auto& x : space.perp(p).points()) {
      if (x == point || space.is_isotropic(x.coords()) || !space.matches(x, type_filter)) continue;
      lines.insert(join(p, Subspace::of_point(f, x)));
    }
    const std::vector<Subspace> tangents(lines.begin(), lines.end());
    for (std::size_t i = 0; i < tangents.size(); ++i) {
      for (std::size_t j = i + 1; j < tangents.size(); ++j) {
        Subspace plane = join(tangents[i], tangents[j]);
        if (space.radical(plane) != p) continue;
        const LineClass quotient = space.quotient_line(plane, p);
        const bool hit = target == QuotientTarget::any ||
                         (target == QuotientTarget::hermitian_nondeg && quotient == LineClass::hermitian_nondeg) ||
                         (target == QuotientTarget::hyperbolic && quotient == LineClass::hyperbolic) ||
                         (target == QuotientTarget::elliptic && quotient == LineClass::elliptic);
        if (hit) return TangentConfiguration{p, tangents[i], tangents[j], std::move(plane), quotient};
      }
    }
  }
  return std::nullopt;
}

std::vector<Subspace> subspaces_of(const Subspace& s, std::size_t k) {
  const auto& f = s.field();
  std::vector<Subspace> out;
  for (const auto& coeff : grassmannian(f, s.dim(), k)) {
    Matrix rows;
    for (const auto& c : coeff.basis()) {
      Vector v(s.ambient(), kZero);
      for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < s.ambient(); ++j) v[j] = f.add(v[j], f.mul(c[i], s.basis()[i][j]));
      rows.push_back(std::move(v));
    }
    out.push_back(Subspace::span(f, s.ambient(), std::move(rows)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<CollinearityConfiguration> find_collinearity_configuration(const PolarSpace& space, std::size_t m,
                                                                         std::size_t choice) {
  if (m < 2 || m > space.rank()) return std::nullopt;
  const auto planes = enumerate_subspaces(space, m, {SubspaceFilterKind::totally_isotropic, std::nullopt});
  if (planes.empty()) return std::nullopt;
  const Subspace& plane = planes[choice % planes.size()];
  const auto hyperplanes = subspaces_of(plane, m - 1);
  return CollinearityConfiguration{plane, hyperplanes[0], hyperplanes[1]};
}

DesignConfiguration find_design_configuration(const GrassmannDesign& d, std::size_t s, std::size_t choice) {
  const auto spaces = grassmannian(d.field, d.n, s);
  if (spaces.empty()) throw std::invalid_argument("no subspace of the requested dimension");
  DesignConfiguration c{spaces.front(), subdesign_from_subspace(d, spaces.front()), 0, 0};
  const std::size_t v = c.embedding.points.size();
  const std::size_t pairs = v * (v - 1) / 2;
  std::size_t k = choice % pairs;
  for (std::size_t i = 0; i < v; ++i) {
    if (k < v - i - 1) {
      c.p1 = c.embedding.points[i];
      c.p2 = c.embedding.points[i + 1 + k];
      return c;
    }
    k -= v - i - 1;
  }
  throw std::logic_error("pair index out of range");
}

}  // namespace polarsw

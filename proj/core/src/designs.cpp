#include "polarsw/designs.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "polarsw/graph6.hpp"

namespace polarsw {

GrassmannDesign grassmann_design(std::size_t n, unsigned q) {
  if (n < 3) throw std::invalid_argument("grassmann design needs n >= 3");
  const FiniteField f = FiniteField::of_order(q);
  GrassmannDesign g{Design{}, f, n, all_points(f, n)};
  auto& d = g.design;
  d.point_count = g.points.size();
  d.block_size = q + 1;
  d.lambda = 1;

  std::map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < g.points.size(); ++i) {
    index.emplace(point_key(f, g.points[i].coords()), i);
    d.point_labels.push_back(encode_vector(f, g.points[i].coords()));
  }
  for (const auto& line : grassmannian(f, n, 2)) {
    VertexSet block;
    for (const auto& p : line.points()) block.push_back(index.at(point_key(f, p.coords())));
    std::sort(block.begin(), block.end());
    d.blocks.push_back(std::move(block));
  }
  std::sort(d.blocks.begin(), d.blocks.end());
  return g;
}

Design ag_design() {
  constexpr std::size_t q = 3;
  Design d;
  d.point_count = 27;
  d.block_size = 3;
  d.lambda = 1;
  auto idx = [](std::size_t a, std::size_t b, std::size_t c) { return a * 9 + b * 3 + c; };
  for (std::size_t i = 0; i < 27; ++i)
    d.point_labels.push_back(std::to_string(i / 9) + std::to_string(i / 3 % 3) + std::to_string(i % 3));
  std::vector<VertexSet> blocks;
  for (std::size_t a = 0; a < 27; ++a) {
    for (std::size_t dir = 1; dir < 27; ++dir) {
      VertexSet block;
      for (std::size_t t = 0; t < q; ++t) {
        const std::size_t x = (a / 9 + t * (dir / 9)) % q;
        const std::size_t y = (a / 3 % 3 + t * (dir / 3 % 3)) % q;
        const std::size_t z = (a % 3 + t * (dir % 3)) % q;
        block.push_back(idx(x, y, z));
      }
      std::sort(block.begin(), block.end());
      blocks.push_back(std::move(block));
    }
  }
  std::sort(blocks.begin(), blocks.end());
  blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
  d.blocks = std::move(blocks);
  return d;
}

SubdesignEmbedding subdesign_from_subspace(const GrassmannDesign& g, const Subspace& s) {
  if (s.dim() <= 2 || s.dim() >= g.n) throw std::invalid_argument("subdesign needs 2 < dim(S) < n");
  SubdesignEmbedding emb;
  std::vector<bool> inside(g.points.size(), false);
  for (std::size_t i = 0; i < g.points.size(); ++i) {
    if (s.contains(g.points[i].coords())) {
      inside[i] = true;
      emb.points.push_back(i);
    }
  }
  for (std::size_t b = 0; b < g.design.blocks.size(); ++b) {
    const auto& block = g.design.blocks[b];
    if (std::all_of(block.begin(), block.end(), [&](std::size_t p) { return inside[p]; })) emb.blocks.push_back(b);
  }
  return emb;
}

DesignCheck verify_design(const Design& d) {
  DesignCheck c;
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    const auto& block = d.blocks[b];
    VertexSet sorted = block;
    std::sort(sorted.begin(), sorted.end());
    const bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    const bool in_range = std::all_of(block.begin(), block.end(), [&](std::size_t p) { return p < d.point_count; });
    if (block.size() != d.block_size || !distinct || !in_range) {
      c.witness_block = b;
      c.reason = "block " + std::to_string(b) + " is not a " + std::to_string(d.block_size) + "-subset";
      return c;
    }
  }
  const std::size_t v = d.point_count;
  std::vector<std::size_t> count(v * v, 0);
  for (const auto& block : d.blocks)
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = i + 1; j < block.size(); ++j) {
        const auto a = std::min(block[i], block[j]), b = std::max(block[i], block[j]);
        ++count[a * v + b];
      }
  for (std::size_t a = 0; a < v; ++a)
    for (std::size_t b = a + 1; b < v; ++b)
      if (count[a * v + b] != d.lambda) {
        c.witness_pair = std::make_pair(a, b);
        c.reason = "points " + std::to_string(a) + "," + std::to_string(b) + " lie in " +
                   std::to_string(count[a * v + b]) + " blocks";
        return c;
      }
  c.valid = true;
  return c;
}

Graph block_graph(const Design& d) {
  if (d.lambda != 1) throw std::invalid_argument("block graph needs lambda = 1");
  const std::size_t nb = d.blocks.size();
  // Incidence bit rows per block.
  const std::size_t words = (d.point_count + 63) / 64;
  std::vector<std::uint64_t> inc(nb * words, 0);
  for (std::size_t b = 0; b < nb; ++b)
    for (auto p : d.blocks[b]) inc[b * words + p / 64] |= std::uint64_t{1} << (p % 64);
  GraphBuilder g(nb);
  for (std::size_t a = 0; a < nb; ++a)
    for (std::size_t b = a + 1; b < nb; ++b) {
      bool meet = false;
      for (std::size_t w = 0; w < words && !meet; ++w) meet = (inc[a * words + w] & inc[b * words + w]) != 0;
      if (meet) g.add_edge(a, b);
    }
  std::vector<std::string> labels;
  for (const auto& block : d.blocks) {
    std::string s;
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i > 0) s += ',';
      s += std::to_string(block[i]);
    }
    labels.push_back(std::move(s));
  }
  g.set_labels(std::move(labels));
  return std::move(g).build();
}

Design jungnickel_modify(const Design& d, const SubdesignEmbedding& emb, std::size_t p1, std::size_t p2) {
  if (p1 == p2) throw std::invalid_argument("jungnickel_modify needs distinct points");
  const auto in_sub = [&](std::size_t p) { return std::binary_search(emb.points.begin(), emb.points.end(), p); };
  if (!in_sub(p1) || !in_sub(p2)) throw std::invalid_argument("points must lie in the subdesign");
  if (d.lambda != 1) throw std::invalid_argument("jungnickel_modify needs lambda = 1");
  Design out = d;
  for (auto b : emb.blocks) {
    auto& block = out.blocks[b];
    const bool has1 = std::binary_search(block.begin(), block.end(), p1);
    const bool has2 = std::binary_search(block.begin(), block.end(), p2);
    if (has1 == has2) continue;
    const std::size_t from = has1 ? p1 : p2, to = has1 ? p2 : p1;
    std::replace(block.begin(), block.end(), from, to);
    std::sort(block.begin(), block.end());
  }
  return out;
}

void write_design(std::ostream& os, const Design& d) {
  os << "design 1\n";
  os << "v " << d.point_count << " b " << d.block_size << " lambda " << d.lambda << " blocks " << d.blocks.size()
     << '\n';
  for (const auto& block : d.blocks) {
    for (std::size_t i = 0; i < block.size(); ++i) os << (i ? " " : "") << block[i];
    os << '\n';
  }
}

Design read_design(std::istream& is) {
  std::string magic;
  int version = 0;
  if (!(is >> magic >> version) || magic != "design" || version != 1)
    throw FormatError("expected 'design 1' header");
  std::string kv, kb, kl, kc;
  Design d;
  std::size_t count = 0;
  if (!(is >> kv >> d.point_count >> kb >> d.block_size >> kl >> d.lambda >> kc >> count) || kv != "v" ||
      kb != "b" || kl != "lambda" || kc != "blocks")
    throw FormatError("malformed design parameter line");
  for (std::size_t i = 0; i < count; ++i) {
    VertexSet block(d.block_size);
    for (auto& p : block)
      if (!(is >> p)) throw FormatError("truncated design block " + std::to_string(i));
    d.blocks.push_back(std::move(block));
  }
  return d;
}

}  // namespace polarsw

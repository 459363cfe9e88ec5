#include "polarsw/polar_graphs.hpp"

#include <bit>
#include <stdexcept>

#include "polarsw/parallel.hpp"

namespace polarsw {

std::string_view to_string(PolarGraphKind kind) {
  switch (kind) {
    case PolarGraphKind::collinearity: return "collinearity";
    case PolarGraphKind::polarity: return "polarity";
    case PolarGraphKind::plus: return "plus";
    case PolarGraphKind::minus: return "minus";
  }
  return "?";
}

std::optional<PolarGraphKind> parse_polar_graph_kind(std::string_view name) {
  if (name == "collinearity") return PolarGraphKind::collinearity;
  if (name == "polarity") return PolarGraphKind::polarity;
  if (name == "plus") return PolarGraphKind::plus;
  if (name == "minus") return PolarGraphKind::minus;
  return std::nullopt;
}

std::optional<std::size_t> PolarGraph::vertex_of(const FiniteField& f, const Vector& v) const {
  Vector w = v;
  normalize(f, w);
  const auto it = index.find(point_key(f, w));
  if (it == index.end()) return std::nullopt;
  return it->second;
}

PointFilter vertex_filter(PolarGraphKind kind) {
  switch (kind) {
    case PolarGraphKind::collinearity: return PointFilter::isotropic;
    case PolarGraphKind::polarity: return PointFilter::nonisotropic;
    case PolarGraphKind::plus: return PointFilter::plus;
    case PolarGraphKind::minus: return PointFilter::minus;
  }
  return PointFilter::all;
}

PolarGraph build_polar_graph(const PolarSpace& space, PolarGraphKind kind) {
  if ((kind == PolarGraphKind::plus || kind == PolarGraphKind::minus) && !space.is_quadratic())
    throw std::invalid_argument("plus/minus graphs need a quadric");
  const auto& f = space.field();
  PolarGraph pg;
  pg.points = space.points(vertex_filter(kind));
  const std::size_t v = pg.points.size();
  const std::size_t n = space.dimension();

  std::vector<std::uint8_t> coords(v * n), polar(v * n);
  std::vector<std::string> labels;
  labels.reserve(v);
  for (std::size_t i = 0; i < v; ++i) {
    const auto& c = pg.points[i].coords();
    const Vector w = space.polar_vector(c);
    for (std::size_t j = 0; j < n; ++j) {
      coords[i * n + j] = c[j].index;
      polar[i * n + j] = w[j].index;
    }
    pg.index.emplace(point_key(f, c), i);
    labels.push_back(encode_vector(f, c));
  }

  // Row bits are filled per chunk of u; the symmetric half is mirrored below.
  const std::size_t words = (v + 63) / 64;
  std::vector<std::uint64_t> upper(v * words, 0);
  parallel_chunks(v, [&](std::size_t begin, std::size_t end, std::size_t) {
    for (std::size_t a = begin; a < end; ++a) {
      for (std::size_t b = a + 1; b < v; ++b) {
        Element s = kZero;
        for (std::size_t j = 0; j < n; ++j)
          s = f.add(s, f.mul(Element{coords[a * n + j]}, Element{polar[b * n + j]}));
        if (s == kZero) upper[a * words + b / 64] |= std::uint64_t{1} << (b % 64);
      }
    }
  });
  GraphBuilder builder(v);
  for (std::size_t a = 0; a < v; ++a)
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t bits = upper[a * words + w];
      while (bits) {
        const std::size_t b = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        builder.add_edge(a, b);
        bits &= bits - 1;
      }
    }
  builder.set_labels(std::move(labels));
  pg.graph = std::move(builder).build();
  return pg;
}

}  // namespace polarsw

#include "polarsw/invariants.hpp"

#include <algorithm>
#include <bit>

#include "polarsw/parallel.hpp"

namespace polarsw {
namespace {

using Bits = std::vector<std::uint64_t>;

std::size_t popcount(const Bits& b) {
  std::size_t c = 0;
  for (auto w : b) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

// Clears bits 0..v inclusive.
void clear_upto(Bits& b, std::size_t v) {
  for (std::size_t w = 0; w < v / 64; ++w) b[w] = 0;
  const std::size_t r = v % 64;
  b[v / 64] &= r == 63 ? 0 : ~((std::uint64_t{2} << r) - 1);
}

template <typename Fn>
void for_each_bit(const Bits& b, Fn&& fn) {
  for (std::size_t w = 0; w < b.size(); ++w) {
    std::uint64_t bits = b[w];
    while (bits) {
      fn(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
}

Bits row_bits(const Graph& g, std::size_t u) {
  const auto r = g.row(u);
  return Bits(r.begin(), r.end());
}

void intersect(Bits& a, std::span<const std::uint64_t> b) {
  for (std::size_t w = 0; w < a.size(); ++w) a[w] &= b[w];
}

std::size_t and_popcount(const Bits& a, std::span<const std::uint64_t> b) {
  std::size_t c = 0;
  for (std::size_t w = 0; w < a.size(); ++w) c += static_cast<std::size_t>(std::popcount(a[w] & b[w]));
  return c;
}

// Calls fn(x, y, z, common) for every triangle x<y<z in [begin,end) for x;
// `common` is N(x)&N(y)&N(z). Returning true from fn stops the scan.
template <typename Fn>
bool scan_triangles(const Graph& g, std::size_t begin, std::size_t end, Fn&& fn) {
  for (std::size_t x = begin; x < end; ++x) {
    Bits nx = row_bits(g, x);
    Bits higher = nx;
    clear_upto(higher, x);
    bool stop = false;
    for_each_bit(higher, [&](std::size_t y) {
      if (stop) return;
      Bits nxy = nx;
      intersect(nxy, g.row(y));
      Bits zs = nxy;
      clear_upto(zs, y);
      for_each_bit(zs, [&](std::size_t z) {
        if (stop) return;
        Bits common = nxy;
        intersect(common, g.row(z));
        if (fn(x, y, z, common)) stop = true;
      });
    });
    if (stop) return true;
  }
  return false;
}

}  // namespace

Histogram triple_intersection_distribution(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Histogram> parts(chunk_count(n));
  parallel_chunks(n, [&](std::size_t begin, std::size_t end, std::size_t c) {
    scan_triangles(g, begin, end, [&](std::size_t, std::size_t, std::size_t, const Bits& common) {
      ++parts[c][popcount(common)];
      return false;
    });
  });
  Histogram out;
  for (const auto& p : parts)
    for (const auto& [v, cnt] : p) out[v] += cnt;
  return out;
}

std::optional<std::array<std::size_t, 3>> find_triangle_with_value(const Graph& g, std::uint64_t value) {
  std::optional<std::array<std::size_t, 3>> hit;
  scan_triangles(g, 0, g.order(), [&](std::size_t x, std::size_t y, std::size_t z, const Bits& common) {
    if (popcount(common) != value) return false;
    hit = std::array<std::size_t, 3>{x, y, z};
    return true;
  });
  return hit;
}

namespace {

template <typename Fn>
bool scan_four_cliques(const Graph& g, std::size_t begin, std::size_t end, Fn&& fn) {
  bool stop = false;
  scan_triangles(g, begin, end, [&](std::size_t x, std::size_t y, std::size_t z, const Bits& common) {
    Bits ws = common;
    clear_upto(ws, z);
    for_each_bit(ws, [&](std::size_t w) {
      if (stop) return;
      if (fn(x, y, z, w, and_popcount(common, g.row(w)))) stop = true;
    });
    return stop;
  });
  return stop;
}

}  // namespace

Histogram four_clique_distribution(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Histogram> parts(chunk_count(n));
  parallel_chunks(n, [&](std::size_t begin, std::size_t end, std::size_t c) {
    scan_four_cliques(g, begin, end, [&](std::size_t, std::size_t, std::size_t, std::size_t, std::size_t v) {
      ++parts[c][v];
      return false;
    });
  });
  Histogram out;
  for (const auto& p : parts)
    for (const auto& [v, cnt] : p) out[v] += cnt;
  return out;
}

std::optional<std::array<std::size_t, 4>> find_four_clique_with_value(const Graph& g, std::uint64_t value) {
  std::optional<std::array<std::size_t, 4>> hit;
  scan_four_cliques(g, 0, g.order(),
                    [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d, std::size_t v) {
                      if (v != value) return false;
                      hit = std::array<std::size_t, 4>{a, b, c, d};
                      return true;
                    });
  return hit;
}

namespace {

struct BronKerbosch {
  const Graph& g;
  std::size_t floor;
  CliqueCensus& out;
  VertexSet r;

  void run(Bits p, Bits x) {
    const std::size_t pc = popcount(p);
    if (r.size() + pc < floor) return;
    if (pc == 0) {
      if (popcount(x) == 0 && r.size() >= floor) {
        ++out.sizes[r.size()];
        if (!out.witnesses.count(r.size())) {
          VertexSet c = r;
          std::sort(c.begin(), c.end());
          out.witnesses.emplace(r.size(), std::move(c));
        }
      }
      return;
    }
    // Pivot maximizing |P & N(u)| over P | X.
    std::size_t pivot = 0, best = 0;
    bool have = false;
    auto consider = [&](std::size_t u) {
      const std::size_t c = and_popcount(p, g.row(u));
      if (!have || c > best) {
        best = c;
        pivot = u;
        have = true;
      }
    };
    for_each_bit(p, consider);
    for_each_bit(x, consider);

    Bits candidates = p;
    const auto pr = g.row(pivot);
    for (std::size_t w = 0; w < candidates.size(); ++w) candidates[w] &= ~pr[w];
    for_each_bit(candidates, [&](std::size_t v) {
      Bits np = p, nx = x;
      intersect(np, g.row(v));
      intersect(nx, g.row(v));
      r.push_back(v);
      run(std::move(np), std::move(nx));
      r.pop_back();
      p[v / 64] &= ~(std::uint64_t{1} << (v % 64));
      x[v / 64] |= std::uint64_t{1} << (v % 64);
    });
  }
};

}  // namespace

CliqueCensus maximal_cliques(const Graph& g, std::size_t size_floor) {
  CliqueCensus out;
  const std::size_t n = g.order();
  if (n == 0) return out;
  Bits p(g.words_per_row(), 0), x(g.words_per_row(), 0);
  for (std::size_t v = 0; v < n; ++v) p[v / 64] |= std::uint64_t{1} << (v % 64);
  BronKerbosch bk{g, size_floor, out, {}};
  bk.run(std::move(p), std::move(x));
  return out;
}

bool is_clique(const Graph& g, const VertexSet& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j])) return false;
  return true;
}

bool is_maximal_clique(const Graph& g, const VertexSet& vs) {
  if (!is_clique(g, vs)) return false;
  for (std::size_t u = 0; u < g.order(); ++u) {
    if (std::find(vs.begin(), vs.end(), u) != vs.end()) continue;
    if (std::all_of(vs.begin(), vs.end(), [&](std::size_t v) { return g.adjacent(u, v); })) return false;
  }
  return true;
}

}  // namespace polarsw

#include <cstdlib>
#include <filesystem>
#include <random>

#include "doctest.h"
#include "polarsw/graph.hpp"
#include "polarsw/graph6.hpp"
#include "polarsw/invariants.hpp"
#include "polarsw/parallel.hpp"
#include "polarsw/polar_graphs.hpp"
#include "test_support.hpp"

using namespace polarsw;
using namespace polarsw::testing;

namespace {

SrgScan brute_srg(const Graph& g) {
  SrgScan s;
  const auto n = g.order();
  long long lambda = -1, mu = -1;
  for (std::size_t u = 0; u < n; ++u) {
    if (g.degree(u) != g.degree(0)) return s;
    for (std::size_t v = u + 1; v < n; ++v) {
      long long c = 0;
      for (std::size_t w = 0; w < n; ++w) c += g.adjacent(u, w) && g.adjacent(v, w);
      long long& slot = g.adjacent(u, v) ? lambda : mu;
      if (slot >= 0 && slot != c) return s;
      slot = c;
    }
  }
  const auto k = n ? g.degree(0) : 0;
  if (n < 2 || k == 0 || k == n - 1) return s;
  s.params = SrgParams{n, k, static_cast<std::uint64_t>(lambda), static_cast<std::uint64_t>(mu)};
  return s;
}

Histogram brute_triangles(const Graph& g) {
  Histogram h;
  const auto n = g.order();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t z = y + 1; z < n; ++z) {
        if (!g.adjacent(x, y) || !g.adjacent(y, z) || !g.adjacent(x, z)) continue;
        std::uint64_t c = 0;
        for (std::size_t w = 0; w < n; ++w) c += g.adjacent(w, x) && g.adjacent(w, y) && g.adjacent(w, z);
        ++h[c];
      }
  return h;
}

// Maximal cliques by subset enumeration (n <= 14).
Histogram brute_maximal_cliques(const Graph& g) {
  Histogram h;
  const auto n = g.order();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    VertexSet vs;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) vs.push_back(i);
    if (is_clique(g, vs) && is_maximal_clique(g, vs)) ++h[vs.size()];
  }
  return h;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("polarsw_test_" + name);
}

}  // namespace

TEST_CASE("srg_params examples") {
  CHECK(srg_params(cycle_graph(5)) == SrgParams{5, 2, 0, 1});
  CHECK_FALSE(srg_params(path_graph(3)).has_value());
  const auto scan = srg_scan(path_graph(3));
  CHECK(scan.witness.has_value());
  CHECK_FALSE(srg_params(complete_graph(5)).has_value());
  CHECK_FALSE(srg_params(GraphBuilder(4).build()).has_value());
  CHECK(srg_params(petersen()) == SrgParams{10, 3, 0, 1});

  const auto sp = PolarSpace::standard(FormKind::symplectic, 6, 2);
  CHECK(srg_params(build_polar_graph(sp, PolarGraphKind::collinearity).graph) == SrgParams{63, 30, 13, 15});
}

TEST_CASE("srg_scan agrees with brute force and is feasible") {
  std::mt19937_64 rng(3);
  std::vector<Graph> corpus = {cycle_graph(5), petersen(), shrikhande(), rook44(), complement(petersen())};
  for (int i = 0; i < 40; ++i) corpus.push_back(random_graph(4 + i % 10, 0.5, rng));
  for (const auto& g : corpus) {
    const auto a = srg_scan(g).params, b = brute_srg(g).params;
    CHECK(a == b);
    if (a) CHECK(a->feasible());
  }
}

TEST_CASE("complement") {
  const auto c5 = cycle_graph(5);
  CHECK(complement(complement(c5)) == c5);
  CHECK(srg_params(complement(c5)) == SrgParams{5, 2, 0, 1});
  std::mt19937_64 rng(5);
  const auto g = random_graph(70, 0.3, rng);
  CHECK(complement(complement(g)) == g);
  CHECK(complement(g).edge_count() + g.edge_count() == 70 * 69 / 2);
}

TEST_CASE("builder errors") {
  GraphBuilder b(3);
  CHECK_THROWS_AS(b.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(b.add_edge(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(b.set_labels({"a"}), std::invalid_argument);
}

TEST_CASE("graph6 encoding") {
  CHECK(graph6_encode(GraphBuilder(0).build()) == "?");
  CHECK(graph6_encode(complete_graph(2)) == "A_");
  CHECK(graph6_encode(path_graph(3)) == "Bg");
  CHECK(graph6_encode(cycle_graph(5)) == "Dhc");
  CHECK(graph6_encode(complete_graph(4)) == "C~");
  CHECK(graph6_encode(petersen()) == "IheA@GUAo");
  CHECK(graph6_encode(complete_graph(63)).substr(0, 8) == "~??~~~~~");
  CHECK(graph6_encode(GraphBuilder(64).build()).substr(0, 5) == "~?@??");
}

TEST_CASE("graph6 round trip") {
  std::mt19937_64 rng(9);
  std::vector<Graph> corpus;
  for (std::size_t n : {0, 1, 2, 5, 62, 63, 64, 65, 130}) corpus.push_back(random_graph(n, 0.4, rng));
  const auto sp = PolarSpace::standard(FormKind::symplectic, 6, 2);
  corpus.push_back(build_polar_graph(sp, PolarGraphKind::collinearity).graph);
  for (const auto& g : corpus) {
    CHECK(graph6_decode(graph6_encode(g)) == g);
    CHECK(graph6_decode(">>graph6<<" + graph6_encode(g) + "\n") == g);
  }
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(graph6_decode(""), FormatError);
  CHECK_THROWS_AS(graph6_decode("A"), FormatError);
  CHECK_THROWS_AS(graph6_decode("A_?"), FormatError);
  CHECK_THROWS_AS(graph6_decode("A`"), FormatError);
  CHECK_THROWS_AS(graph6_decode("D\x01\x02"), FormatError);
  CHECK_THROWS_AS(graph6_decode("~?@"), FormatError);
}

TEST_CASE("graph6 and label files") {
  const auto path = temp_path("g.g6");
  const auto g = petersen();
  write_graph6(path, g);
  CHECK(read_graph6(path) == g);
  const auto lp = temp_path("g.labels");
  write_labels(lp, {"polarsw-labels v1 test"}, {"a", "b", "c"});
  const auto lf = read_labels(lp);
  CHECK(lf.header == std::vector<std::string>{"polarsw-labels v1 test"});
  CHECK(lf.labels == std::vector<std::string>{"a", "b", "c"});
  std::filesystem::remove(path);
  std::filesystem::remove(lp);
  CHECK_THROWS(read_graph6(temp_path("missing.g6")));
}

TEST_CASE("triangle distribution") {
  CHECK(triple_intersection_distribution(cycle_graph(6)).empty());
  CHECK(triple_intersection_distribution(complete_graph(5)) == Histogram{{2, 10}});
  std::mt19937_64 rng(13);
  for (int i = 0; i < 30; ++i) {
    const auto g = random_graph(8 + i, 0.45, rng);
    const auto h = triple_intersection_distribution(g);
    REQUIRE(h == brute_triangles(g));
    for (const auto& [value, count] : h) {
      const auto t = find_triangle_with_value(g, value);
      REQUIRE(t.has_value());
      const VertexSet vs(t->begin(), t->end());
      CHECK(is_clique(g, vs));
    }
  }
}

TEST_CASE("four-clique distribution") {
  CHECK(four_clique_distribution(complete_graph(6)) == Histogram{{2, 15}});
  std::mt19937_64 rng(17);
  for (int i = 0; i < 10; ++i) {
    const auto g = random_graph(14, 0.6, rng);
    Histogram brute;
    const auto n = g.order();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        for (std::size_t c = b + 1; c < n; ++c)
          for (std::size_t d = c + 1; d < n; ++d) {
            if (!is_clique(g, {a, b, c, d})) continue;
            std::uint64_t cnt = 0;
            for (std::size_t w = 0; w < n; ++w)
              cnt += g.adjacent(w, a) && g.adjacent(w, b) && g.adjacent(w, c) && g.adjacent(w, d);
            ++brute[cnt];
          }
    CHECK(four_clique_distribution(g) == brute);
  }
}

TEST_CASE("maximal cliques") {
  CHECK(maximal_cliques(complete_graph(5)).sizes == Histogram{{5, 1}});
  CHECK(maximal_cliques(cycle_graph(7)).sizes == Histogram{{2, 7}});
  CHECK(maximal_cliques(petersen(), 3).sizes.empty());
  std::mt19937_64 rng(19);
  for (int i = 0; i < 25; ++i) {
    const auto g = random_graph(6 + i % 8, 0.5, rng);
    const auto census = maximal_cliques(g);
    CHECK(census.sizes == brute_maximal_cliques(g));
    for (const auto& [size, vs] : census.witnesses) {
      CHECK(vs.size() == size);
      CHECK(is_maximal_clique(g, vs));
    }
    const auto floored = maximal_cliques(g, 3);
    for (const auto& [size, count] : census.sizes)
      if (size >= 3) CHECK(floored.sizes.at(size) == count);
  }
}

TEST_CASE("invariants are unchanged by relabelling") {
  std::mt19937_64 rng(23);
  const auto sp = PolarSpace::standard(FormKind::symplectic, 6, 2);
  std::vector<Graph> corpus = {build_polar_graph(sp, PolarGraphKind::collinearity).graph, shrikhande()};
  for (int i = 0; i < 5; ++i) corpus.push_back(random_graph(30, 0.4, rng));
  for (const auto& g : corpus) {
    const auto h = permute(g, random_permutation(g.order(), rng));
    CHECK(srg_params(g) == srg_params(h));
    CHECK(triple_intersection_distribution(g) == triple_intersection_distribution(h));
    CHECK(four_clique_distribution(g) == four_clique_distribution(h));
    CHECK(maximal_cliques(g).sizes == maximal_cliques(h).sizes);
  }
}

TEST_CASE("permute and induced subgraph") {
  const auto p = path_graph(3).with_labels({"a", "b", "c"});
  const std::vector<std::size_t> perm = {2, 0, 1};
  const auto q = permute(p, perm);
  CHECK(q.adjacent(2, 0));
  CHECK(q.adjacent(0, 1));
  CHECK_FALSE(q.adjacent(2, 1));
  CHECK(q.label(2) == "a");
  const std::vector<std::size_t> keep = {0, 2};
  CHECK(induced_subgraph(p, keep).edge_count() == 0);
  CHECK(to_adjacency_list(p) == "0: 1\n1: 0 2\n2: 1\n");
}

TEST_CASE("parallel chunks cover the range once") {
  setenv("POLARSW_THREADS", "3", 1);
  CHECK(thread_count() == 3);
  std::vector<int> hits(1000, 0);
  std::vector<int> per_chunk(chunk_count(1000), 0);
  parallel_chunks(1000, [&](std::size_t b, std::size_t e, std::size_t c) {
    for (auto i = b; i < e; ++i) ++hits[i];
    per_chunk[c] += 1;
  });
  for (int h : hits) CHECK(h == 1);
  // Multi-threaded scans agree with the sequential ones.
  std::mt19937_64 rng(29);
  const auto g = random_graph(150, 0.3, rng);
  const auto threaded = triple_intersection_distribution(g);
  setenv("POLARSW_THREADS", "1", 1);
  CHECK(thread_count() == 1);
  CHECK(triple_intersection_distribution(g) == threaded);
  unsetenv("POLARSW_THREADS");
}

TEST_CASE("polar graph labels and lookup") {
  const auto sp = PolarSpace::standard(FormKind::symplectic, 4, 3);
  const auto pg = build_polar_graph(sp, PolarGraphKind::collinearity);
  CHECK(pg.graph.order() == 40);
  CHECK(pg.graph.labels().size() == 40);
  CHECK(pg.graph.label(0) == "0001");
  for (std::size_t v = 0; v < pg.points.size(); ++v) CHECK(pg.vertex_of(sp.field(), pg.points[v].coords()) == v);
  CHECK_THROWS_AS(build_polar_graph(sp, PolarGraphKind::plus), std::invalid_argument);
  CHECK(parse_polar_graph_kind("polarity") == PolarGraphKind::polarity);
}

#include <random>

#include "doctest.h"
#include "polarsw/certify.hpp"
#include "polarsw/graph6.hpp"
#include "polarsw/isomorphism.hpp"
#include "polarsw/polar_graphs.hpp"
#include "test_support.hpp"

using namespace polarsw;
using namespace polarsw::testing;

namespace {

Graph k33_minus_matching() {
  // Parts {0,1,2} and {3,4,5}, matching i -- i+3 removed.
  return from_edges(6, {{0, 4}, {0, 5}, {1, 3}, {1, 5}, {2, 3}, {2, 4}});
}

}  // namespace

TEST_CASE("sha256 digests") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(graph_digest(petersen()) == sha256_hex("IheA@GUAo"));
}

TEST_CASE("exhaustive isomorphism examples") {
  const auto c = exhaustive_isomorphism(cycle_graph(6), k33_minus_matching());
  CHECK(c.passed());
  const auto map = c.evidence.at("mapping").get<std::vector<std::size_t>>();
  CHECK(is_isomorphism(cycle_graph(6), k33_minus_matching(), map));

  CHECK(exhaustive_isomorphism(cycle_graph(5), complement(cycle_graph(5))).passed());
  const auto sr = exhaustive_isomorphism(shrikhande(), rook44());
  CHECK_FALSE(sr.passed());
  CHECK(sr.claim == Claim::isomorphic);
  CHECK(srg_params(shrikhande()) == srg_params(rook44()));
  CHECK_THROWS_AS(exhaustive_isomorphism(complete_graph(65), complete_graph(65)), std::invalid_argument);
}

TEST_CASE("isomorphism search finds hidden relabellings") {
  std::mt19937_64 rng(41);
  std::vector<Graph> corpus = {petersen(), shrikhande(), rook44(), GraphBuilder(10).build(), complete_graph(9)};
  for (int i = 0; i < 30; ++i) corpus.push_back(random_graph(5 + i, 0.5, rng));
  for (const auto& g : corpus) {
    const auto perm = random_permutation(g.order(), rng);
    const auto h = permute(g, perm);
    const auto s = find_isomorphism(g, h);
    REQUIRE(s.mapping.has_value());
    CHECK(is_isomorphism(g, h, *s.mapping));
  }
  CHECK_FALSE(is_isomorphism(path_graph(3), path_graph(3), {1, 0, 2}));
}

TEST_CASE("triangle certificates") {
  std::mt19937_64 rng(43);
  const auto sp = build_polar_graph(PolarSpace::standard(FormKind::symplectic, 6, 2), PolarGraphKind::collinearity).graph;
  const auto perm = permute(sp, random_permutation(sp.order(), rng));
  const auto same = certify_non_isomorphic_by_triangles(sp, perm);
  CHECK_FALSE(same.passed());
  CHECK(recheck(same, sp, &perm));

  const auto k5 = complete_graph(5), c5 = cycle_graph(5);
  const auto a = certify_non_isomorphic_by_triangles(k5, c5);
  CHECK(a.passed());
  CHECK(a.evidence.at("witness").at("graph") == "g");
  CHECK(recheck(a, k5, &c5));
}

TEST_CASE("clique certificates") {
  const auto k7 = complete_graph(7), c7 = cycle_graph(7);
  const auto c = certify_non_isomorphic_by_cliques(k7, c7);
  CHECK(c.passed());
  REQUIRE(c.evidence.contains("witness"));
  CHECK(recheck(c, k7, &c7));
  CHECK_FALSE(certify_non_isomorphic_by_cliques(c7, c7).passed());
  CHECK_FALSE(certify_non_isomorphic_by_cliques(petersen(), petersen(), 3).passed());
}

TEST_CASE("same srg certificates") {
  CHECK_FALSE(certify_same_srg(cycle_graph(5), complete_graph(5)).passed());
  CHECK(certify_same_srg(shrikhande(), rook44()).passed());
  const auto c = certify_srg(petersen());
  CHECK(c.passed());
  CHECK(c.evidence.at("params").at("k") == 3);
  const auto bad = certify_srg(path_graph(4));
  CHECK_FALSE(bad.passed());
  CHECK(bad.evidence.contains("witness"));
  CHECK(recheck(c, petersen()));
  CHECK(recheck(bad, path_graph(4)));
}

TEST_CASE("cospectral certificates") {
  const auto a = shrikhande(), b = rook44();
  const auto c = certify_cospectral(a, b);
  CHECK(c.passed());
  CHECK(c.method == "charpoly");
  CHECK(c.evidence.at("primes").size() == 5);
  CHECK(recheck(c, a, &b));
  const auto c5 = cycle_graph(5), p5 = path_graph(5);
  const auto d = certify_cospectral(c5, p5);
  CHECK_FALSE(d.passed());
  CHECK(d.evidence.contains("differing_prime"));
  CHECK(recheck(d, c5, &p5));
  CHECK_FALSE(certify_cospectral(cycle_graph(5), cycle_graph(6)).passed());

  CospectralOptions opt;
  opt.charpoly_limit = 10;
  const auto e = certify_cospectral(a, b, opt);
  CHECK(e.method == "srg_parameters");
  CHECK(e.passed());
  opt.force_charpoly = true;
  CHECK(certify_cospectral(a, b, opt).method == "charpoly");
}

TEST_CASE("invariant verdicts never contradict the exhaustive oracle") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 6 + static_cast<std::size_t>(i % 12);
    const auto g = random_graph(n, 0.5, rng);
    // Half the pairs are relabellings, half are single-edge edits.
    Graph h = permute(g, random_permutation(n, rng));
    if (i % 2) {
      GraphBuilder b(h);
      b.set_edge(0, 1, !h.adjacent(0, 1));
      b.set_edge(2, 3, !h.adjacent(2, 3));
      h = std::move(b).build();
    }
    const bool iso = exhaustive_isomorphism(g, h).passed();
    for (const auto& c : {certify_non_isomorphic_by_triangles(g, h), certify_non_isomorphic_by_four_cliques(g, h),
                          certify_non_isomorphic_by_cliques(g, h)})
      if (c.passed()) CHECK_FALSE(iso);
  }
  const bool both = certify_non_isomorphic(shrikhande(), rook44()).passed() &&
                    exhaustive_isomorphism(shrikhande(), rook44()).passed();
  CHECK_FALSE(both);
}

TEST_CASE("non-isomorphism fallback chain") {
  std::vector<Certificate> tried;
  const auto c = certify_non_isomorphic(shrikhande(), rook44(), &tried);
  CHECK(c.passed());
  CHECK(tried.back().method == c.method);
  std::vector<Certificate> none;
  const auto d = certify_non_isomorphic(petersen(), petersen(), &none);
  CHECK_FALSE(d.passed());
  CHECK(none.size() == 3);
  CHECK(none.back().method == "cliques");
}

TEST_CASE("certificate serialization and recheck") {
  const auto k5 = complete_graph(5), c5 = cycle_graph(5);
  const auto c = certify_non_isomorphic_by_triangles(k5, c5);
  const auto j = to_json(c);
  CHECK(j.at("schema") == std::string(kCertificateSchema));
  CHECK(j.at("verdict") == "pass");
  const auto back = certificate_from_json(nlohmann::json::parse(j.dump()));
  CHECK(to_json(back).dump() == j.dump());
  CHECK(recheck(back, k5, &c5));

  // Wrong inputs or forged evidence do not recheck.
  CHECK_FALSE(recheck(back, c5, &k5));
  auto forged = back;
  forged.evidence["witness"]["value"] = 1;
  CHECK_FALSE(recheck(forged, k5, &c5));
  auto flipped = back;
  flipped.verdict = Verdict::fail;
  CHECK_FALSE(recheck(flipped, k5, &c5));
  CHECK_FALSE(recheck(back, k5));

  auto bad = j;
  bad["schema"] = "other/9";
  CHECK_THROWS_AS(certificate_from_json(bad), FormatError);
  CHECK(parse_claim("cospectral") == Claim::cospectral);
  CHECK_FALSE(parse_claim("nope").has_value());
}

TEST_CASE("switching and design certificates") {
  const auto g = from_edges(5, {{4, 0}, {4, 1}});
  const SwitchingSetPair pair{{0, 1}, {2, 3}};
  const auto c = certify_switching(g, pair);
  CHECK(c.passed());
  CHECK(c.evidence.at("attached_c1") == 1);
  CHECK(recheck(c, g));
  const auto back = switching_pair_from_json(to_json(pair));
  CHECK(back.c1 == pair.c1);
  CHECK(back.c2 == pair.c2);
  CHECK_FALSE(certify_switching(from_edges(5, {{4, 0}}), pair).passed());

  CHECK(certify_design(grassmann_design(4, 2).design).passed());
  auto d = grassmann_design(4, 2).design;
  d.blocks.pop_back();
  const auto bd = certify_design(d);
  CHECK_FALSE(bd.passed());
  CHECK(bd.evidence.contains("witness_pair"));
}

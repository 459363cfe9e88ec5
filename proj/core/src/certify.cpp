#include "polarsw/certify.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "polarsw/graph6.hpp"
#include "polarsw/invariants.hpp"
#include "polarsw/isomorphism.hpp"
#include "polarsw/spectral.hpp"

namespace polarsw {

using nlohmann::json;

namespace {

json params_json(const std::optional<SrgParams>& p) {
  if (!p) return nullptr;
  return json{{"v", p->v}, {"k", p->k}, {"lambda", p->lambda}, {"mu", p->mu}};
}

json histogram_json(const Histogram& h) {
  json out = json::array();
  for (const auto& [value, count] : h) out.push_back(json::array({value, count}));
  return out;
}

// A value present in exactly one histogram: (true if it lies in `a`, value).
std::optional<std::pair<bool, std::uint64_t>> distinguishing_value(const Histogram& a, const Histogram& b) {
  for (const auto& [v, c] : b)
    if (!a.count(v)) return std::make_pair(false, v);
  for (const auto& [v, c] : a)
    if (!b.count(v)) return std::make_pair(true, v);
  return std::nullopt;
}

Certificate make(Claim claim, std::string method, const Graph& g, const Graph* h) {
  Certificate c;
  c.claim = claim;
  c.method = std::move(method);
  c.inputs.push_back(graph_digest(g));
  if (h) c.inputs.push_back(graph_digest(*h));
  return c;
}

std::size_t common_of(const Graph& g, std::span<const std::size_t> vs) {
  std::size_t count = 0;
  for (std::size_t x = 0; x < g.order(); ++x)
    if (std::all_of(vs.begin(), vs.end(), [&](std::size_t v) { return g.adjacent(x, v); })) ++count;
  return count;
}

}  // namespace

std::string_view to_string(Claim c) {
  switch (c) {
    case Claim::srg_params: return "srg_params";
    case Claim::cospectral: return "cospectral";
    case Claim::non_isomorphic: return "non_isomorphic";
    case Claim::isomorphic: return "isomorphic";
    case Claim::design_valid: return "design_valid";
    case Claim::switching_valid: return "switching_valid";
  }
  return "?";
}

std::optional<Claim> parse_claim(std::string_view s) {
  for (auto c : {Claim::srg_params, Claim::cospectral, Claim::non_isomorphic, Claim::isomorphic,
                 Claim::design_valid, Claim::switching_valid})
    if (to_string(c) == s) return c;
  return std::nullopt;
}

json to_json(const Certificate& c) {
  return json{{"schema", kCertificateSchema},
              {"claim", to_string(c.claim)},
              {"method", c.method},
              {"inputs", c.inputs},
              {"evidence", c.evidence},
              {"verdict", c.passed() ? "pass" : "fail"}};
}

Certificate certificate_from_json(const json& j) {
  if (j.value("schema", "") != kCertificateSchema) throw FormatError("unknown certificate schema");
  Certificate c;
  const auto claim = parse_claim(j.at("claim").get<std::string>());
  if (!claim) throw FormatError("unknown certificate claim");
  c.claim = *claim;
  c.method = j.at("method").get<std::string>();
  c.inputs = j.at("inputs").get<std::vector<std::string>>();
  c.evidence = j.at("evidence");
  c.verdict = j.at("verdict").get<std::string>() == "pass" ? Verdict::pass : Verdict::fail;
  return c;
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::string hex;
  char buf[3];
  for (unsigned i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

std::string graph_digest(const Graph& g) { return sha256_hex(graph6_encode(g)); }

Certificate certify_srg(const Graph& g) {
  Certificate c = make(Claim::srg_params, "pair_scan", g, nullptr);
  const auto scan = srg_scan(g);
  c.evidence["params"] = params_json(scan.params);
  if (!scan.params) {
    c.evidence["reason"] = scan.reason;
    if (scan.witness) c.evidence["witness"] = json::array({scan.witness->first, scan.witness->second});
  }
  c.verdict = scan.params ? Verdict::pass : Verdict::fail;
  return c;
}

Certificate certify_same_srg(const Graph& g, const Graph& h) {
  Certificate c = make(Claim::srg_params, "pair_scan", g, &h);
  const auto pg = srg_params(g);
  const auto ph = srg_params(h);
  c.evidence["g"] = params_json(pg);
  c.evidence["h"] = params_json(ph);
  c.verdict = pg && ph && *pg == *ph ? Verdict::pass : Verdict::fail;
  return c;
}

Certificate certify_cospectral(const Graph& g, const Graph& h, const CospectralOptions& options) {
  if (g.order() != h.order()) {
    Certificate c = make(Claim::cospectral, "order", g, &h);
    c.evidence["orders"] = json::array({g.order(), h.order()});
    return c;
  }
  if (g.order() > options.charpoly_limit && !options.force_charpoly) {
    Certificate c = make(Claim::cospectral, "srg_parameters", g, &h);
    const auto pg = srg_params(g);
    const auto ph = srg_params(h);
    c.evidence["g"] = params_json(pg);
    c.evidence["h"] = params_json(ph);
    c.evidence["charpoly_limit"] = options.charpoly_limit;
    c.verdict = pg && ph && *pg == *ph ? Verdict::pass : Verdict::fail;
    return c;
  }
  Certificate c = make(Claim::cospectral, "charpoly", g, &h);
  const auto v = cospectral(g, h, options.prime_count, options.seed);
  c.evidence["primes"] = v.primes;
  c.evidence["seed"] = options.seed;
  c.evidence["error_bound"] = v.error_bound;
  if (v.differing_prime) c.evidence["differing_prime"] = *v.differing_prime;
  c.verdict = v.cospectral ? Verdict::pass : Verdict::fail;
  return c;
}

Certificate certify_non_isomorphic_by_triangles(const Graph& g, const Graph& h) {
  Certificate c = make(Claim::non_isomorphic, "triangles", g, &h);
  const Histogram hg = triple_intersection_distribution(g);
  const Histogram hh = triple_intersection_distribution(h);
  c.evidence["g_histogram"] = histogram_json(hg);
  c.evidence["h_histogram"] = histogram_json(hh);
  if (g.order() != h.order() || hg != hh) c.verdict = Verdict::pass;
  if (const auto d = distinguishing_value(hg, hh)) {
    const Graph& side = d->first ? g : h;
    if (const auto t = find_triangle_with_value(side, d->second))
      c.evidence["witness"] = {{"graph", d->first ? "g" : "h"}, {"triangle", *t}, {"value", d->second}};
  }
  return c;
}

Certificate certify_non_isomorphic_by_four_cliques(const Graph& g, const Graph& h) {
  Certificate c = make(Claim::non_isomorphic, "four_cliques", g, &h);
  const Histogram hg = four_clique_distribution(g);
  const Histogram hh = four_clique_distribution(h);
  c.evidence["g_histogram"] = histogram_json(hg);
  c.evidence["h_histogram"] = histogram_json(hh);
  if (g.order() != h.order() || hg != hh) c.verdict = Verdict::pass;
  if (const auto d = distinguishing_value(hg, hh)) {
    const Graph& side = d->first ? g : h;
    if (const auto t = find_four_clique_with_value(side, d->second))
      c.evidence["witness"] = {{"graph", d->first ? "g" : "h"}, {"clique", *t}, {"value", d->second}};
  }
  return c;
}

Certificate certify_non_isomorphic_by_cliques(const Graph& g, const Graph& h, std::size_t size_floor) {
  Certificate c = make(Claim::non_isomorphic, "cliques", g, &h);
  const auto cg = maximal_cliques(g, size_floor);
  const auto ch = maximal_cliques(h, size_floor);
  c.evidence["floor"] = size_floor;
  c.evidence["g_sizes"] = histogram_json(cg.sizes);
  c.evidence["h_sizes"] = histogram_json(ch.sizes);
  if (g.order() != h.order() || cg.sizes != ch.sizes) c.verdict = Verdict::pass;
  // Witness: a clique of a size that occurs more often on its side.
  for (const auto* side : {&ch, &cg}) {
    const auto& other = side == &ch ? cg : ch;
    for (const auto& [size, count] : side->sizes) {
      const auto it = other.sizes.find(size);
      if (it != other.sizes.end() && it->second >= count) continue;
      c.evidence["witness"] = {{"graph", side == &ch ? "h" : "g"}, {"clique", side->witnesses.at(size)}, {"size", size}};
      return c;
    }
  }
  return c;
}

Certificate certify_non_isomorphic(const Graph& g, const Graph& h, std::vector<Certificate>* tried,
                                   std::size_t clique_limit) {
  Certificate last = certify_non_isomorphic_by_triangles(g, h);
  if (tried) tried->push_back(last);
  if (last.passed()) return last;
  last = certify_non_isomorphic_by_four_cliques(g, h);
  if (tried) tried->push_back(last);
  if (last.passed()) return last;
  if (g.order() <= clique_limit && h.order() <= clique_limit) {
    last = certify_non_isomorphic_by_cliques(g, h);
    if (tried) tried->push_back(last);
  }
  return last;
}

Certificate exhaustive_isomorphism(const Graph& g, const Graph& h) {
  Certificate c = make(Claim::isomorphic, "exhaustive", g, &h);
  const auto s = find_isomorphism(g, h);
  c.evidence["nodes"] = s.nodes;
  if (s.mapping) {
    c.evidence["mapping"] = *s.mapping;
    c.verdict = Verdict::pass;
  }
  return c;
}

Certificate certify_design(const Design& d) {
  Certificate c;
  c.claim = Claim::design_valid;
  c.method = "pair_count";
  std::ostringstream os;
  write_design(os, d);
  c.inputs.push_back(sha256_hex(os.str()));
  const auto check = verify_design(d);
  c.evidence = {{"v", d.point_count}, {"k", d.block_size}, {"lambda", d.lambda}, {"blocks", d.blocks.size()}};
  if (!check.valid) {
    c.evidence["reason"] = check.reason;
    if (check.witness_pair) c.evidence["witness_pair"] = json::array({check.witness_pair->first, check.witness_pair->second});
    if (check.witness_block) c.evidence["witness_block"] = *check.witness_block;
  }
  c.verdict = check.valid ? Verdict::pass : Verdict::fail;
  return c;
}

Certificate certify_switching(const Graph& g, const SwitchingSetPair& pair) {
  Certificate c = make(Claim::switching_valid, "wqh_conditions", g, nullptr);
  const auto v = validate_wqh(g, pair);
  c.evidence = to_json(pair);
  c.evidence["failure"] = to_string(v.failure);
  if (v.witness) c.evidence["witness"] = *v.witness;
  if (!v.message.empty()) c.evidence["message"] = v.message;
  if (v.ok) {
    c.evidence["c1_degree"] = v.c1_degree;
    c.evidence["union_degree"] = v.union_degree;
    c.evidence["cross_edges"] = v.cross_edges;
    c.evidence["balanced"] = v.balanced;
    c.evidence["attached_c1"] = v.attached_c1;
    c.evidence["attached_c2"] = v.attached_c2;
  }
  c.verdict = v.ok ? Verdict::pass : Verdict::fail;
  return c;
}

json to_json(const SwitchingSetPair& pair) { return json{{"c1", pair.c1}, {"c2", pair.c2}}; }

SwitchingSetPair switching_pair_from_json(const json& j) {
  SwitchingSetPair p;
  p.c1 = j.at("c1").get<VertexSet>();
  p.c2 = j.at("c2").get<VertexSet>();
  return p;
}

bool recheck(const Certificate& c, const Graph& g, const Graph* h) {
  const bool two_graphs = c.inputs.size() == 2;
  if (c.claim == Claim::design_valid) return false;  // needs the design, not a graph
  if (two_graphs && !h) return false;
  if (c.inputs.empty() || c.inputs[0] != graph_digest(g)) return false;
  if (two_graphs && c.inputs[1] != graph_digest(*h)) return false;
  const auto& e = c.evidence;

  auto witness_side = [&](const json& w) -> const Graph& { return w.at("graph") == "g" ? g : *h; };

  switch (c.claim) {
    case Claim::srg_params: {
      if (!two_graphs) {
        const auto p = srg_params(g);
        return params_json(p) == e.at("params") && (p.has_value() == c.passed());
      }
      const auto pg = srg_params(g), ph = srg_params(*h);
      const bool same = pg && ph && *pg == *ph;
      return params_json(pg) == e.at("g") && params_json(ph) == e.at("h") && same == c.passed();
    }
    case Claim::cospectral: {
      if (c.method == "order") return !c.passed() && g.order() != h->order();
      if (c.method == "srg_parameters") {
        const auto pg = srg_params(g), ph = srg_params(*h);
        return (pg && ph && *pg == *ph) == c.passed();
      }
      bool equal = g.order() == h->order();
      for (const auto& p : e.at("primes"))
        equal = equal && charpoly_mod_p(g, p.get<std::uint64_t>()) == charpoly_mod_p(*h, p.get<std::uint64_t>());
      return equal == c.passed();
    }
    case Claim::non_isomorphic: {
      if (e.contains("witness")) {
        const auto& w = e.at("witness");
        const Graph& side = witness_side(w);
        const Graph& other = &side == &g ? *h : g;
        if (c.method == "triangles" || c.method == "four_cliques") {
          const auto vs = w.at(c.method == "triangles" ? "triangle" : "clique").get<VertexSet>();
          if (!is_clique(side, vs) || common_of(side, vs) != w.at("value").get<std::size_t>()) return false;
          const Histogram ho = c.method == "triangles" ? triple_intersection_distribution(other)
                                                       : four_clique_distribution(other);
          return ho.count(w.at("value").get<std::uint64_t>()) == 0 && c.passed();
        }
        if (c.method == "cliques") {
          const auto vs = w.at("clique").get<VertexSet>();
          if (vs.size() != w.at("size").get<std::size_t>() || !is_maximal_clique(side, vs)) return false;
        }
      }
      if (c.method == "triangles") {
        const auto hg = triple_intersection_distribution(g), hh = triple_intersection_distribution(*h);
        return histogram_json(hg) == e.at("g_histogram") && histogram_json(hh) == e.at("h_histogram") &&
               ((hg != hh) == c.passed());
      }
      if (c.method == "four_cliques") {
        const auto hg = four_clique_distribution(g), hh = four_clique_distribution(*h);
        return histogram_json(hg) == e.at("g_histogram") && histogram_json(hh) == e.at("h_histogram") &&
               ((hg != hh) == c.passed());
      }
      if (c.method == "cliques") {
        const auto floor = e.at("floor").get<std::size_t>();
        const auto cg = maximal_cliques(g, floor), ch = maximal_cliques(*h, floor);
        return histogram_json(cg.sizes) == e.at("g_sizes") && histogram_json(ch.sizes) == e.at("h_sizes") &&
               ((cg.sizes != ch.sizes) == c.passed());
      }
      return false;
    }
    case Claim::isomorphic: {
      if (c.passed()) return is_isomorphism(g, *h, e.at("mapping").get<std::vector<std::size_t>>());
      return !find_isomorphism(g, *h).mapping.has_value();
    }
    case Claim::switching_valid: {
      const auto v = validate_wqh(g, switching_pair_from_json(e));
      return v.ok == c.passed();
    }
    case Claim::design_valid: return false;
  }
  return false;
}

}  // namespace polarsw

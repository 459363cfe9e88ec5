#include "polarsw/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace polarsw {
namespace {

using Colouring = std::vector<std::size_t>;

// Refines both colourings to the coarsest stable joint partition. Returns
// false when the colour class sizes of the two graphs diverge.
bool refine(const Graph& g, const Graph& h, Colouring& cg, Colouring& ch) {
  const std::size_t n = g.order();
  std::size_t classes = 0;
  {
    std::vector<std::size_t> all(cg);
    all.insert(all.end(), ch.begin(), ch.end());
    std::sort(all.begin(), all.end());
    classes = static_cast<std::size_t>(std::unique(all.begin(), all.end()) - all.begin());
  }
  while (true) {
    using Signature = std::pair<std::size_t, std::vector<std::size_t>>;
    auto signature = [&](const Graph& gr, const Colouring& c, std::size_t u) {
      std::vector<std::size_t> nb;
      for (auto v : gr.neighbours(u)) nb.push_back(c[v]);
      std::sort(nb.begin(), nb.end());
      return Signature{c[u], std::move(nb)};
    };
    std::vector<Signature> sg(n), sh(n);
    std::map<Signature, std::pair<std::size_t, std::size_t>> census;
    for (std::size_t u = 0; u < n; ++u) {
      sg[u] = signature(g, cg, u);
      ++census[sg[u]].first;
      sh[u] = signature(h, ch, u);
      ++census[sh[u]].second;
    }
    std::map<Signature, std::size_t> name;
    for (const auto& [sig, counts] : census) {
      if (counts.first != counts.second) return false;
      name.emplace(sig, name.size());
    }
    for (std::size_t u = 0; u < n; ++u) {
      cg[u] = name[sg[u]];
      ch[u] = name[sh[u]];
    }
    if (name.size() == classes) return true;
    classes = name.size();
  }
}

struct Search {
  const Graph& g;
  const Graph& h;
  std::uint64_t nodes = 0;

  std::optional<std::vector<std::size_t>> run(Colouring cg, Colouring ch) {
    ++nodes;
    if (!refine(g, h, cg, ch)) return std::nullopt;
    const std::size_t n = g.order();
    std::map<std::size_t, std::size_t> size;
    for (auto c : cg) ++size[c];
    std::size_t target = 0, best = n + 1;
    for (const auto& [c, s] : size)
      if (s > 1 && s < best) {
        best = s;
        target = c;
      }
    if (best == n + 1) {
      std::vector<std::size_t> where(n);
      for (std::size_t v = 0; v < n; ++v) where[ch[v]] = v;
      std::vector<std::size_t> mapping(n);
      for (std::size_t u = 0; u < n; ++u) mapping[u] = where[cg[u]];
      if (is_isomorphism(g, h, mapping)) return mapping;
      return std::nullopt;
    }
    std::size_t u = 0;
    while (cg[u] != target) ++u;
    const std::size_t fresh = n;  // larger than any refined colour index
    for (std::size_t v = 0; v < n; ++v) {
      if (ch[v] != target) continue;
      Colouring ng = cg, nh = ch;
      ng[u] = fresh;
      nh[v] = fresh;
      if (auto m = run(std::move(ng), std::move(nh))) return m;
    }
    return std::nullopt;
  }
};

}  // namespace

bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<std::size_t>& mapping) {
  if (g.order() != h.order() || mapping.size() != g.order()) return false;
  std::vector<bool> used(h.order(), false);
  for (auto v : mapping) {
    if (v >= h.order() || used[v]) return false;
    used[v] = true;
  }
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = a + 1; b < g.order(); ++b)
      if (g.adjacent(a, b) != h.adjacent(mapping[a], mapping[b])) return false;
  return true;
}

IsomorphismSearch find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() > kExhaustiveIsomorphismLimit || h.order() > kExhaustiveIsomorphismLimit)
    throw std::invalid_argument("exhaustive isomorphism is limited to 64 vertices");
  IsomorphismSearch out;
  if (g.order() != h.order()) return out;
  if (g.order() == 0) {
    out.mapping = std::vector<std::size_t>{};
    return out;
  }
  Search s{g, h};
  out.mapping = s.run(Colouring(g.order(), 0), Colouring(h.order(), 0));
  out.nodes = s.nodes;
  return out;
}

}  // namespace polarsw

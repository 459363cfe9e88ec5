#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polarsw/designs.hpp"
#include "polarsw/graph.hpp"
#include "polarsw/switching.hpp"

namespace polarsw {

inline constexpr std::string_view kCertificateSchema = "polarsw-certificate/1";

enum class Claim { srg_params, cospectral, non_isomorphic, isomorphic, design_valid, switching_valid };
enum class Verdict { pass, fail };

std::string_view to_string(Claim c);
std::optional<Claim> parse_claim(std::string_view s);

/// A self-describing verification record. `evidence` carries everything a
/// verifier needs to recompute the verdict from the inputs alone.
struct Certificate {
  Claim claim = Claim::srg_params;
  /// How the claim was decided, e.g. "triangles" or "charpoly".
  std::string method;
  /// sha256 of each input's canonical bytes (graph6 for graphs).
  std::vector<std::string> inputs;
  nlohmann::json evidence = nlohmann::json::object();
  Verdict verdict = Verdict::fail;

  bool passed() const { return verdict == Verdict::pass; }
};

/// Keys are sorted (nlohmann::json objects are ordered maps), so dumps are
/// canonical.
nlohmann::json to_json(const Certificate& c);
/// Throws FormatError on schema mismatch.
Certificate certificate_from_json(const nlohmann::json& j);

std::string sha256_hex(std::string_view bytes);
/// sha256 of the graph6 encoding.
std::string graph_digest(const Graph& g);

/// Pass iff both graphs are strongly regular with equal parameters.
Certificate certify_same_srg(const Graph& g, const Graph& h);
/// Pass iff the graph is strongly regular; evidence holds the parameters.
Certificate certify_srg(const Graph& g);

struct CospectralOptions {
  std::size_t prime_count = 5;
  std::uint64_t seed = 0;
  /// Above this order, strongly regular inputs are compared by parameters
  /// instead (equal SRG parameters imply equal spectra).
  std::size_t charpoly_limit = 2000;
  bool force_charpoly = false;
};

Certificate certify_cospectral(const Graph& g, const Graph& h, const CospectralOptions& options = {});

/// Pass iff the triangle common-neighbourhood histograms differ. When one
/// side is constant the evidence includes a triangle of the other side
/// with a different value.
Certificate certify_non_isomorphic_by_triangles(const Graph& g, const Graph& h);

/// Pass iff the maximal-clique size multisets (sizes >= floor) differ.
/// Evidence includes a maximal clique of a size whose count differs.
Certificate certify_non_isomorphic_by_cliques(const Graph& g, const Graph& h, std::size_t size_floor = 0);

/// Pass iff the 4-clique common-neighbourhood histograms differ.
Certificate certify_non_isomorphic_by_four_cliques(const Graph& g, const Graph& h);

/// Triangles, then 4-cliques, then maximal cliques (only for graphs of at
/// most `clique_limit` vertices); returns the first passing certificate or,
/// if none passes, the last one tried. `tried` receives every certificate.
Certificate certify_non_isomorphic(const Graph& g, const Graph& h, std::vector<Certificate>* tried = nullptr,
                                   std::size_t clique_limit = 200);

/// Claim `isomorphic`: pass with an explicit bijection, fail with an
/// exhaustive refutation. Throws std::invalid_argument above 64 vertices.
Certificate exhaustive_isomorphism(const Graph& g, const Graph& h);

Certificate certify_design(const Design& d);
Certificate certify_switching(const Graph& g, const SwitchingSetPair& pair);

/// Recomputes the verdict from the inputs and the evidence: input digests
/// must match, witnesses are recounted directly on the graphs, and
/// histogram or parameter payloads must agree with a fresh computation.
/// `h` is required for two-graph claims.
bool recheck(const Certificate& c, const Graph& g, const Graph* h = nullptr);

nlohmann::json to_json(const SwitchingSetPair& pair);
SwitchingSetPair switching_pair_from_json(const nlohmann::json& j);

}  // namespace polarsw

#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "polarsw/certify.hpp"
#include "polarsw/designs.hpp"
#include "polarsw/graph6.hpp"
#include "polarsw/isomorphism.hpp"
#include "polarsw/polar_graphs.hpp"
#include "polarsw/switching.hpp"

#ifndef POLARSW_VERSION
#define POLARSW_VERSION "0.0.0"
#endif

namespace polarsw::cli {

namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

constexpr std::string_view kLabelsHeader = "polarsw-labels v1";
constexpr std::string_view kSwitchsetSchema = "polarsw-switchset/1";
constexpr std::string_view kTranscriptSchema = "polarsw-transcript/1";
constexpr std::string_view kReportSchema = "polarsw-report/1";
constexpr std::string_view kManifestSchema = "polarsw-manifest/1";

// Ambient projective point count above which build needs --allow-large.
constexpr std::uint64_t kLargePoints = 10000;
// Vertex count above which certify needs --allow-large.
constexpr std::size_t kLargeOrder = 5000;
// Maximal-clique enumeration above this order needs --allow-large.
constexpr std::size_t kCliqueOrder = 200;

using Clock = std::chrono::steady_clock;

[[noreturn]] void bad_input(const std::string& what) { throw CliError(kBadInput, what); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad_input("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) bad_input("cannot write " + path);
  out << text;
}

std::string file_digest(const std::string& path) { return sha256_hex(read_file(path)); }

json read_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::exception& e) {
    bad_input(path + ": " + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

class Manifest {
 public:
  Manifest(const std::vector<std::string>& argv, std::optional<std::uint64_t> seed) : start_(Clock::now()) {
    j_["schema"] = kManifestSchema;
    j_["tool"] = "polarsw";
    j_["version"] = POLARSW_VERSION;
    j_["command_line"] = argv;
    j_["seed"] = seed ? json(*seed) : json(nullptr);
    j_["inputs"] = json::object();
    j_["outputs"] = json::object();
  }

  void input(const std::string& path) { j_["inputs"][path] = file_digest(path); }
  void output(const std::string& path) { j_["outputs"][path] = file_digest(path); }

  void write(const std::string& path) {
    j_["wall_clock_seconds"] = std::chrono::duration<double>(Clock::now() - start_).count();
    write_file(path, dump(j_));
  }

 private:
  json j_;
  Clock::time_point start_;
};

using Origin = std::map<std::string, std::string>;

std::string origin_line(const Origin& o) {
  std::string s(kLabelsHeader);
  for (const auto& key : {"space", "design", "n", "q", "graph"})
    if (auto it = o.find(key); it != o.end()) s += " " + it->first + "=" + it->second;
  return s;
}

Origin parse_origin(const std::vector<std::string>& header) {
  for (const auto& line : header) {
    std::istringstream ss(line);
    std::string a, b;
    ss >> a >> b;
    if (a + " " + b != kLabelsHeader) continue;
    Origin o;
    for (std::string kv; ss >> kv;) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) bad_input("malformed label header entry " + kv);
      o[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    return o;
  }
  bad_input("label file has no polarsw-labels header");
}

std::size_t to_size(const Origin& o, const std::string& key) {
  const auto it = o.find(key);
  if (it == o.end()) bad_input("missing " + key);
  try {
    return std::stoul(it->second);
  } catch (const std::exception&) {
    bad_input("bad " + key + ": " + it->second);
  }
}

// A graph together with the structure it was built from.
struct Built {
  Graph graph;
  std::optional<PolarSpace> space;
  std::optional<PolarGraph> polar;
  PolarGraphKind kind = PolarGraphKind::collinearity;
  std::optional<GrassmannDesign> grassmann;
};

std::uint64_t projective_points(std::size_t n, unsigned q) {
  std::uint64_t total = 0, power = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total += power;
    power *= q;
    if (total > (std::uint64_t{1} << 40)) break;
  }
  return total;
}

Built build_from(const Origin& o, bool allow_large) {
  const auto n = to_size(o, "n");
  const auto q = static_cast<unsigned>(to_size(o, "q"));
  const auto graph = o.count("graph") ? o.at("graph") : "";
  if (!allow_large && projective_points(n, q) > kLargePoints)
    bad_input("PG(" + std::to_string(n - 1) + "," + std::to_string(q) + ") has more than " +
              std::to_string(kLargePoints) + " points; pass --allow-large");
  Built b;
  if (auto it = o.find("design"); it != o.end()) {
    if (graph != "block") bad_input("designs only support --graph block");
    if (it->second == "grassmann") {
      b.grassmann = grassmann_design(n, q);
      b.graph = block_graph(b.grassmann->design);
    } else if (it->second == "ag") {
      if (n != 3 || q != 3) bad_input("the affine design is AG(3,3): use --n 3 --q 3");
      b.graph = block_graph(ag_design());
    } else {
      bad_input("unknown design " + it->second);
    }
    return b;
  }
  const auto it = o.find("space");
  if (it == o.end()) bad_input("one of --space or --design is required");
  const auto kind = parse_form_kind(it->second);
  if (!kind) bad_input("unknown space " + it->second);
  const auto gk = parse_polar_graph_kind(graph);
  if (!gk) bad_input("unknown graph kind " + graph);
  b.space = PolarSpace::standard(*kind, n, q);
  b.kind = *gk;
  b.polar = build_polar_graph(*b.space, *gk);
  b.graph = b.polar->graph;
  return b;
}

std::string labels_path(const std::string& graph) { return graph + ".labels"; }
std::string manifest_path(const std::string& out) { return out + ".manifest.json"; }

Graph read_graph(const std::string& path) {
  try {
    return read_graph6(path);
  } catch (const FormatError& e) {
    bad_input(path + ": " + e.what());
  }
}

json vertices_json(const Graph& g, const VertexSet& vs) {
  json labels = json::array();
  for (auto v : vs) labels.push_back(std::string(g.label(v)));
  return labels;
}

bool parse_verdict(const std::string& s) {
  if (s == "pass") return true;
  if (s == "fail") return false;
  bad_input("expectation must be pass or fail, got " + s);
}

}  // namespace

int cmd_build(const BuildOptions& o, const std::vector<std::string>& argv) {
  if (o.space.empty() == o.design.empty()) bad_input("exactly one of --space or --design is required");
  Origin origin{{"n", std::to_string(o.n)}, {"q", std::to_string(o.q)}, {"graph", o.graph}};
  if (!o.space.empty()) origin["space"] = o.space;
  if (!o.design.empty()) origin["design"] = o.design;

  Manifest manifest(argv, std::nullopt);
  const auto built = build_from(origin, o.allow_large);
  write_graph6(o.out, built.graph);
  write_labels(labels_path(o.out), {origin_line(origin)}, built.graph.labels());
  manifest.output(o.out);
  manifest.output(labels_path(o.out));
  manifest.write(manifest_path(o.out));
  std::cout << o.out << ": " << built.graph.order() << " vertices, " << built.graph.edge_count() << " edges\n";
  return kOk;
}

int cmd_switchset(const SwitchsetOptions& o, const std::vector<std::string>& argv) {
  Manifest manifest(argv, o.seed);
  const auto g = read_graph(o.graph);
  const auto labels = read_labels(labels_path(o.graph));
  manifest.input(o.graph);
  manifest.input(labels_path(o.graph));
  const auto origin = parse_origin(labels.header);
  const auto built = build_from(origin, true);
  if (!(built.graph == g)) bad_input(o.graph + " does not match the structure named in its label header");
  const auto& lg = built.graph;

  json record;
  record["schema"] = kSwitchsetSchema;
  record["graph"] = graph_digest(g);
  record["origin"] = origin;
  record["kind"] = o.kind;
  record["seed"] = o.seed;
  SwitchingSetPair pair;
  json witness;

  if (o.kind == "collinearity") {
    if (!built.space || built.kind != PolarGraphKind::collinearity)
      bad_input("collinearity switching needs a collinearity graph");
    const auto m = o.m.value_or(built.space->rank());
    if (m < 2 || m > built.space->rank())
      bad_input("--m must lie in [2, " + std::to_string(built.space->rank()) + "]");
    const auto cfg = find_collinearity_configuration(*built.space, m, o.seed);
    if (!cfg) throw CliError(kNoConfiguration, "no totally isotropic " + std::to_string(m) + "-space");
    pair = collinearity_switch_set(*built.space, *built.polar, cfg->plane, cfg->l1, cfg->l2);
    record["m"] = m;
    witness = {{"plane", cfg->plane.encode()}, {"l1", cfg->l1.encode()}, {"l2", cfg->l2.encode()}};
  } else if (o.kind == "tangent") {
    if (!built.space || built.kind == PolarGraphKind::collinearity)
      bad_input("tangent switching needs a polarity, plus or minus graph");
    QuotientTarget target;
    if (o.quotient == "auto") {
      target = witness_quotient(*built.space);
    } else if (auto t = parse_quotient_target(o.quotient)) {
      target = *t;
    } else {
      bad_input("unknown quotient " + o.quotient);
    }
    const auto cfg = find_tangent_configuration(*built.space, target, vertex_filter(built.kind), o.seed);
    if (!cfg)
      throw CliError(kNoConfiguration, "no tangent configuration with quotient " + std::string(to_string(target)) +
                                           " (search exhaustive)");
    pair = tangent_line_switch_set(*built.space, *built.polar, cfg->p, cfg->l1, cfg->l2);
    record["quotient"] = to_string(target);
    witness = {{"p", cfg->p.encode()},
               {"l1", cfg->l1.encode()},
               {"l2", cfg->l2.encode()},
               {"plane", cfg->plane.encode()},
               {"quotient_class", to_string(cfg->quotient)}};
  } else if (o.kind == "design") {
    if (!built.grassmann) bad_input("design switching needs a grassmann block graph");
    if (o.s < 3 || o.s >= built.grassmann->n)
      bad_input("--s must lie in [3, " + std::to_string(built.grassmann->n - 1) + "]");
    const auto cfg = find_design_configuration(*built.grassmann, o.s, o.seed);
    pair = design_switch_set(built.grassmann->design, cfg.embedding, cfg.p1, cfg.p2);
    record["s"] = o.s;
    witness = {{"subspace", cfg.s.encode()},
               {"p1", built.grassmann->design.point_labels[cfg.p1]},
               {"p2", built.grassmann->design.point_labels[cfg.p2]}};
  } else {
    bad_input("unknown kind " + o.kind);
  }

  record["c1"] = pair.c1;
  record["c2"] = pair.c2;
  record["c1_labels"] = vertices_json(lg, pair.c1);
  record["c2_labels"] = vertices_json(lg, pair.c2);
  record["witness"] = witness;
  write_file(o.out, dump(record));
  manifest.output(o.out);
  manifest.write(manifest_path(o.out));
  std::cout << o.out << ": |C1| = " << pair.c1.size() << "\n";
  return kOk;
}

int cmd_switch(const SwitchOptions& o, const std::vector<std::string>& argv) {
  Manifest manifest(argv, std::nullopt);
  const auto g = read_graph(o.graph);
  const auto labels = read_labels(labels_path(o.graph));
  const auto record = read_json(o.set);
  manifest.input(o.graph);
  manifest.input(labels_path(o.graph));
  manifest.input(o.set);
  if (record.value("schema", "") != kSwitchsetSchema) bad_input(o.set + " is not a switching-set record");
  if (record.value("graph", "") != graph_digest(g)) bad_input(o.set + " was computed for a different graph");

  SwitchingSetPair pair;
  try {
    pair = switching_pair_from_json(record);
  } catch (const json::exception& e) {
    bad_input(o.set + ": " + e.what());
  }

  json transcript;
  transcript["schema"] = kTranscriptSchema;
  transcript["method"] = o.method;
  transcript["input"] = graph_digest(g);
  transcript["set"] = file_digest(o.set);
  std::optional<Graph> out;
  std::optional<std::size_t> witness;
  std::string message;

  if (o.method == "wqh") {
    const auto v = validate_wqh(g, pair);
    transcript["verdict"] = {{"ok", v.ok},
                             {"failure", to_string(v.failure)},
                             {"message", v.message},
                             {"c1_degree", v.c1_degree},
                             {"c2_degree", v.c2_degree},
                             {"union_degree", v.union_degree},
                             {"cross_edges", v.cross_edges},
                             {"balanced", v.balanced},
                             {"attached_c1", v.attached_c1},
                             {"attached_c2", v.attached_c2}};
    if (v.ok) out = apply_wqh(g, pair);
    witness = v.witness;
    message = v.message;
  } else if (o.method == "gm") {
    VertexSet cell = pair.c1;
    cell.insert(cell.end(), pair.c2.begin(), pair.c2.end());
    std::sort(cell.begin(), cell.end());
    const GMPartition part{{cell}};
    const auto v = validate_gm(g, part);
    transcript["verdict"] = {{"ok", v.ok}, {"failure", to_string(v.failure)}, {"message", v.message}};
    if (v.ok) out = apply_gm(g, part);
    witness = v.witness;
    message = v.message;
  } else {
    bad_input("unknown method " + o.method);
  }
  transcript["verdict"]["witness"] = witness ? json(*witness) : json(nullptr);

  if (!out) {
    write_file(o.out + ".transcript.json", dump(transcript));
    std::cerr << "invalid switching set: " << message;
    if (witness) std::cerr << " (witness vertex " << *witness << ")";
    std::cerr << "\n";
    return kInvalidSwitchingSet;
  }
  transcript["output"] = graph_digest(*out);
  transcript["changed_edges"] = [&] {
    std::uint64_t d = 0;
    for (std::size_t u = 0; u < g.order(); ++u)
      for (std::size_t v = u + 1; v < g.order(); ++v) d += g.adjacent(u, v) != out->adjacent(u, v);
    return d;
  }();

  auto header = labels.header;
  header.push_back("switched method=" + o.method + " set=" + file_digest(o.set));
  write_graph6(o.out, *out);
  write_labels(labels_path(o.out), header, labels.labels);
  write_file(o.out + ".transcript.json", dump(transcript));
  for (const auto& p : {o.out, labels_path(o.out), o.out + ".transcript.json"}) manifest.output(p);
  manifest.write(manifest_path(o.out));
  std::cout << o.out << ": " << transcript["changed_edges"].get<std::uint64_t>() << " edges changed\n";
  return kOk;
}

int cmd_certify(const CertifyOptions& o, const std::vector<std::string>& argv) {
  Manifest manifest(argv, o.seed);
  if (o.checks.empty()) bad_input("--checks is empty");
  std::vector<bool> expect(o.checks.size(), true);
  if (!o.expect.empty()) {
    if (o.expect.size() != o.checks.size()) bad_input("--expect needs one verdict per check");
    for (std::size_t i = 0; i < o.expect.size(); ++i) expect[i] = parse_verdict(o.expect[i]);
  }

  const auto a = read_graph(o.a);
  manifest.input(o.a);
  std::optional<Graph> b;
  if (!o.b.empty()) {
    b = read_graph(o.b);
    manifest.input(o.b);
  }
  const auto largest = std::max(a.order(), b ? b->order() : 0);
  if (largest > kLargeOrder && !o.allow_large)
    bad_input("inputs above " + std::to_string(kLargeOrder) + " vertices need --allow-large");

  json report;
  report["schema"] = kReportSchema;
  report["inputs"] = {{"a", graph_digest(a)}, {"b", b ? json(graph_digest(*b)) : json(nullptr)}};
  report["checks"] = json::array();
  bool all_ok = true;

  for (std::size_t i = 0; i < o.checks.size(); ++i) {
    const auto& check = o.checks[i];
    if (check != "srg" && !b) bad_input("check " + check + " needs --b");
    Certificate c;
    if (check == "srg") {
      c = b ? certify_same_srg(a, *b) : certify_srg(a);
    } else if (check == "cospectral") {
      CospectralOptions co;
      co.prime_count = o.primes;
      co.seed = o.seed;
      co.force_charpoly = o.force_charpoly;
      c = certify_cospectral(a, *b, co);
    } else if (check == "triangles") {
      c = certify_non_isomorphic_by_triangles(a, *b);
    } else if (check == "four_cliques") {
      c = certify_non_isomorphic_by_four_cliques(a, *b);
    } else if (check == "cliques") {
      if (largest > kCliqueOrder && !o.allow_large)
        bad_input("clique enumeration above " + std::to_string(kCliqueOrder) + " vertices needs --allow-large");
      c = certify_non_isomorphic_by_cliques(a, *b);
    } else if (check == "noniso") {
      c = certify_non_isomorphic(a, *b, nullptr, o.allow_large ? largest : kCliqueOrder);
    } else if (check == "exhaustive") {
      if (largest > kExhaustiveIsomorphismLimit)
        bad_input("exhaustive search is limited to " + std::to_string(kExhaustiveIsomorphismLimit) + " vertices");
      c = exhaustive_isomorphism(a, *b);
    } else {
      bad_input("unknown check " + check);
    }
    const bool ok = c.passed() == expect[i];
    all_ok = all_ok && ok;
    report["checks"].push_back({{"check", check},
                                {"expect", expect[i] ? "pass" : "fail"},
                                {"verdict", c.passed() ? "pass" : "fail"},
                                {"ok", ok},
                                {"certificate", to_json(c)}});
    std::cout << check << ": " << (c.passed() ? "pass" : "fail") << " by " << c.method
              << (ok ? "" : " (unexpected)") << "\n";
  }
  report["ok"] = all_ok;
  if (!o.report.empty()) {
    write_file(o.report, dump(report));
    manifest.output(o.report);
    manifest.write(manifest_path(o.report));
  }
  return all_ok ? kOk : kExpectationFailed;
}

}  // namespace polarsw::cli

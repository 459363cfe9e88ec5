#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "commands.hpp"
#include "polarsw/graph6.hpp"

using namespace polarsw::cli;

int main(int argc, char** argv) {
  CLI::App app{"Polar-space graphs, switching sets and certificates"};
  app.require_subcommand(1);

  BuildOptions build;
  auto* b = app.add_subcommand("build", "Build a polar-space or design graph");
  b->add_option("--space", build.space, "sp, o, o+, o- or u");
  b->add_option("--design", build.design, "grassmann or ag");
  b->add_option("--n", build.n, "Vector space dimension")->required();
  b->add_option("--q", build.q, "Field order")->required();
  b->add_option("--graph", build.graph, "collinearity, polarity, plus, minus or block")->required();
  b->add_option("--out", build.out, "graph6 output path")->required();
  b->add_flag("--allow-large", build.allow_large, "Allow more than 10000 projective points");

  SwitchsetOptions set;
  auto* s = app.add_subcommand("switchset", "Find a switching set in a built graph");
  s->add_option("--graph", set.graph, "graph6 file written by build")->required();
  s->add_option("--kind", set.kind, "collinearity, tangent or design")->required();
  s->add_option("--m", set.m, "Dimension of the totally isotropic space (collinearity)");
  s->add_option("--s", set.s, "Dimension of the subspace (design)");
  s->add_option("--quotient", set.quotient, "auto, any, u2, hyperbolic or elliptic (tangent)");
  s->add_option("--seed", set.seed, "Offset into the canonical configuration order");
  s->add_option("--out", set.out, "Record output path")->required();

  SwitchOptions sw;
  auto* w = app.add_subcommand("switch", "Apply a switching set");
  w->add_option("--graph", sw.graph, "graph6 file")->required();
  w->add_option("--set", sw.set, "Record written by switchset")->required();
  w->add_option("--method", sw.method, "wqh or gm");
  w->add_option("--out", sw.out, "graph6 output path")->required();

  CertifyOptions cert;
  auto* c = app.add_subcommand("certify", "Run certificates on one or two graphs");
  c->add_option("--a", cert.a, "First graph6 file")->required();
  c->add_option("--b", cert.b, "Second graph6 file");
  c->add_option("--checks", cert.checks, "srg, cospectral, triangles, four_cliques, cliques, noniso, exhaustive")
      ->delimiter(',')
      ->required();
  c->add_option("--expect", cert.expect, "pass or fail per check (default all pass)")->delimiter(',');
  c->add_option("--report", cert.report, "Report output path");
  c->add_option("--primes", cert.primes, "Number of random primes for cospectrality");
  c->add_option("--seed", cert.seed, "Prime sampling seed");
  c->add_flag("--force-charpoly", cert.force_charpoly, "Compare characteristic polynomials at any order");
  c->add_flag("--allow-large", cert.allow_large, "Allow inputs above 5000 vertices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kBadInput;
  }

  const std::vector<std::string> args(argv, argv + argc);
  try {
    if (*b) return cmd_build(build, args);
    if (*s) return cmd_switchset(set, args);
    if (*w) return cmd_switch(sw, args);
    return cmd_certify(cert, args);
  } catch (const CliError& e) {
    std::cerr << "polarsw: " << e.what() << "\n";
    return e.code();
  } catch (const polarsw::FormatError& e) {
    std::cerr << "polarsw: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "polarsw: " << e.what() << "\n";
    return kBadInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "polarsw: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "polarsw: " << e.what() << "\n";
    return kBadInput;
  }
}

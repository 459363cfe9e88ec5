#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polarsw::cli {

enum ExitCode : int {
  kOk = 0,
  kExpectationFailed = 1,
  kBadInput = 2,
  kNoConfiguration = 3,
  kInvalidSwitchingSet = 4,
};

/// Carries an exit code out of a command.
class CliError : public std::runtime_error {
 public:
  CliError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

struct BuildOptions {
  std::string space;
  std::string design;
  std::size_t n = 0;
  unsigned q = 0;
  std::string graph;
  std::string out;
  bool allow_large = false;
};

struct SwitchsetOptions {
  std::string graph;
  std::string kind;
  std::optional<std::size_t> m;
  std::size_t s = 3;
  std::string quotient = "auto";
  std::uint64_t seed = 0;
  std::string out;
};

struct SwitchOptions {
  std::string graph;
  std::string set;
  std::string method = "wqh";
  std::string out;
};

struct CertifyOptions {
  std::string a;
  std::string b;
  std::vector<std::string> checks;
  std::vector<std::string> expect;
  std::string report;
  std::size_t primes = 5;
  std::uint64_t seed = 0;
  bool force_charpoly = false;
  bool allow_large = false;
};

/// Each command returns its exit code and writes a manifest next to its
/// primary output. `argv` is recorded verbatim in the manifest.
int cmd_build(const BuildOptions& o, const std::vector<std::string>& argv);
int cmd_switchset(const SwitchsetOptions& o, const std::vector<std::string>& argv);
int cmd_switch(const SwitchOptions& o, const std::vector<std::string>& argv);
int cmd_certify(const CertifyOptions& o, const std::vector<std::string>& argv);

}  // namespace polarsw::cli

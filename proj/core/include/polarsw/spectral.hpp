#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polarsw/graph.hpp"

namespace polarsw {

/// Characteristic polynomial of an adjacency matrix modulo a prime.
/// coeffs[i] is the coefficient of x^i; coeffs.back() == 1.
struct CharPolyModP {
  std::uint64_t prime = 0;
  std::vector<std::uint64_t> coeffs;

  bool operator==(const CharPolyModP&) const = default;
};

/// Hessenberg reduction followed by the Hessenberg determinant recurrence,
/// O(n^3) operations mod `prime`. Refuses primes <= n or >= 2^31 (products
/// must fit in 64 bits) with std::invalid_argument.
CharPolyModP charpoly_mod_p(const Graph& g, std::uint64_t prime);

/// Deterministic Miller-Rabin, valid for all 64-bit inputs below 2^32.
bool is_prime_u32(std::uint64_t n);

/// `count` distinct primes drawn uniformly from [2^30, 2^31) with a
/// seeded generator.
std::vector<std::uint64_t> random_primes(std::size_t count, std::uint64_t seed);

struct CospectralVerdict {
  bool cospectral = false;
  std::vector<std::uint64_t> primes;
  /// First prime at which the polynomials differed.
  std::optional<std::uint64_t> differing_prime;
  /// Upper bound on the probability that integer characteristic
  /// polynomials differ although all sampled reductions agree:
  /// (log2 B / N)^k with B = n! n^n, N the prime pool size, k the primes used.
  double error_bound = 1.0;
};

/// Compares characteristic polynomials modulo `prime_count` random primes.
/// Graphs of different order are immediately not cospectral.
CospectralVerdict cospectral(const Graph& g, const Graph& h, std::size_t prime_count = 5,
                             std::uint64_t seed = 0);

class SpectrumError : public std::domain_error {
 public:
  enum class Kind { infeasible, irrational };
  SpectrumError(Kind kind, const std::string& what) : std::domain_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Eigenvalue -> multiplicity, largest eigenvalue first.
using Spectrum = std::vector<std::pair<long long, std::uint64_t>>;

/// {k^1, r^f, s^g} from the parameters. Throws SpectrumError for
/// infeasible parameters or an irrational (conference-graph) spectrum.
Spectrum srg_spectrum(const SrgParams& p);

/// prod (x - theta)^m reduced mod prime, same layout as CharPolyModP.
CharPolyModP polynomial_from_spectrum(const Spectrum& s, std::uint64_t prime);

}  // namespace polarsw

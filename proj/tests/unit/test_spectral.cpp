#include <random>
#include <set>

#include "doctest.h"
#include "polarsw/polar_graphs.hpp"
#include "polarsw/spectral.hpp"
#include "polarsw/switching.hpp"
#include "test_support.hpp"

using namespace polarsw;
using namespace polarsw::testing;

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return a * b % p; }
u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  for (a %= p; e; e >>= 1, a = mulmod(a, a, p))
    if (e & 1) r = mulmod(r, a, p);
  return r;
}
u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

// det(xI - A) mod p by Gaussian elimination.
u64 det_at(const Graph& g, u64 x, u64 p) {
  const auto n = g.order();
  std::vector<std::vector<u64>> m(n, std::vector<u64>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = i == j ? x % p : (g.adjacent(i, j) ? p - 1 : 0);
  u64 det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = (p - det) % p;
    }
    det = mulmod(det, m[c][c], p);
    const u64 inv = invmod(m[c][c], p);
    for (std::size_t r = c + 1; r < n; ++r) {
      const u64 f = mulmod(m[r][c], inv, p);
      for (std::size_t k = c; k < n; ++k) m[r][k] = (m[r][k] + p - mulmod(f, m[c][k], p)) % p;
    }
  }
  return det;
}

// Characteristic polynomial by evaluation at 0..n and Lagrange interpolation.
std::vector<u64> interpolated_charpoly(const Graph& g, u64 p) {
  const auto n = g.order();
  std::vector<u64> xs(n + 1), ys(n + 1), coeffs(n + 1, 0);
  for (std::size_t i = 0; i <= n; ++i) {
    xs[i] = i;
    ys[i] = det_at(g, i, p);
  }
  for (std::size_t i = 0; i <= n; ++i) {
    std::vector<u64> basis = {1};
    u64 denom = 1;
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == i) continue;
      std::vector<u64> next(basis.size() + 1, 0);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] = (next[k + 1] + basis[k]) % p;
        next[k] = (next[k] + mulmod(basis[k], p - xs[j], p)) % p;
      }
      basis = next;
      denom = mulmod(denom, (xs[i] + p - xs[j]) % p, p);
    }
    const u64 scale = mulmod(ys[i], invmod(denom, p), p);
    for (std::size_t k = 0; k <= n; ++k) coeffs[k] = (coeffs[k] + mulmod(basis[k], scale, p)) % p;
  }
  return coeffs;
}

std::vector<u64> signed_mod(const std::vector<long long>& c, u64 p) {
  std::vector<u64> out;
  for (auto v : c) out.push_back(static_cast<u64>(((v % static_cast<long long>(p)) + static_cast<long long>(p)) %
                                                  static_cast<long long>(p)));
  return out;
}

}  // namespace

TEST_CASE("charpoly examples") {
  const u64 p = 10007;
  CHECK(charpoly_mod_p(cycle_graph(5), p).coeffs == signed_mod({-2, 5, 0, -5, 0, 1}, p));
  CHECK(charpoly_mod_p(path_graph(5), p).coeffs == signed_mod({0, 3, 0, -4, 0, 1}, p));
  CHECK(charpoly_mod_p(GraphBuilder(4).build(), p).coeffs == signed_mod({0, 0, 0, 0, 1}, p));
  CHECK(charpoly_mod_p(complete_graph(2), p).coeffs == signed_mod({-1, 0, 1}, p));
  const auto cp = charpoly_mod_p(petersen(), p);
  CHECK(cp.coeffs.size() == 11);
  CHECK(cp.coeffs.back() == 1);
}

TEST_CASE("charpoly refuses bad primes") {
  CHECK_THROWS_AS(charpoly_mod_p(cycle_graph(5), 5), std::invalid_argument);
  CHECK_THROWS_AS(charpoly_mod_p(cycle_graph(5), 10005), std::invalid_argument);
  CHECK_THROWS_AS(charpoly_mod_p(cycle_graph(5), 2147483659ull), std::invalid_argument);
}

TEST_CASE("charpoly agrees with evaluation and interpolation") {
  std::mt19937_64 rng(31);
  const auto primes = random_primes(2, 1);
  for (int i = 0; i < 25; ++i) {
    const auto g = random_graph(1 + i, 0.5, rng);
    for (auto p : {u64{1000003}, primes[0], primes[1]}) REQUIRE(charpoly_mod_p(g, p).coeffs == interpolated_charpoly(g, p));
  }
}

TEST_CASE("random primes") {
  const auto a = random_primes(8, 42);
  CHECK(a == random_primes(8, 42));
  CHECK(a != random_primes(8, 43));
  CHECK(std::set<u64>(a.begin(), a.end()).size() == 8);
  for (auto p : a) {
    CHECK(p >= (u64{1} << 30));
    CHECK(p < (u64{1} << 31));
    CHECK(is_prime_u32(p));
  }
  CHECK(is_prime_u32(2147483647));
  CHECK_FALSE(is_prime_u32(2147483649ull));
  CHECK_FALSE(is_prime_u32(1));
  CHECK(is_prime_u32(2));
}

TEST_CASE("cospectral") {
  const auto c5 = cycle_graph(5);
  CHECK(cospectral(c5, c5).cospectral);
  const auto v = cospectral(c5, path_graph(5));
  CHECK_FALSE(v.cospectral);
  CHECK(v.differing_prime.has_value());
  CHECK_FALSE(cospectral(c5, cycle_graph(6)).cospectral);

  const auto ok = cospectral(shrikhande(), rook44(), 5, 3);
  CHECK(ok.cospectral);
  CHECK(ok.primes.size() == 5);
  CHECK(ok.error_bound > 0.0);
  CHECK(ok.error_bound < 1e-30);

  std::mt19937_64 rng(37);
  for (int i = 0; i < 10; ++i) {
    const auto g = random_graph(20, 0.5, rng);
    CHECK(cospectral(g, permute(g, random_permutation(20, rng))).cospectral);
  }
}

TEST_CASE("srg spectrum") {
  const Spectrum sp62 = {{30, 1}, {3, 35}, {-5, 27}};
  CHECK(srg_spectrum({63, 30, 13, 15}) == sp62);
  // Discriminant (-8)^2 + 4*128 = 24^2, so r = 8, s = -16; the trace
  // equations f + g = 671 and 176 + 8f - 16g = 0 give f = 440, g = 231.
  const Spectrum u62 = {{176, 1}, {8, 440}, {-16, 231}};
  CHECK(srg_spectrum({672, 176, 40, 48}) == u62);
  CHECK_THROWS_AS(srg_spectrum({5, 2, 0, 1}), SpectrumError);
  try {
    srg_spectrum({5, 2, 0, 1});
  } catch (const SpectrumError& e) {
    CHECK(e.kind() == SpectrumError::Kind::irrational);
  }
  try {
    srg_spectrum({10, 3, 1, 1});
    FAIL("infeasible parameters accepted");
  } catch (const SpectrumError& e) {
    CHECK(e.kind() == SpectrumError::Kind::infeasible);
  }
}

TEST_CASE("srg spectrum reproduces the characteristic polynomial") {
  std::vector<Graph> corpus = {petersen(), shrikhande(), rook44()};
  corpus.push_back(build_polar_graph(PolarSpace::standard(FormKind::symplectic, 6, 2), PolarGraphKind::collinearity).graph);
  corpus.push_back(build_polar_graph(PolarSpace::standard(FormKind::elliptic, 6, 3), PolarGraphKind::plus).graph);
  corpus.push_back(build_polar_graph(PolarSpace::standard(FormKind::parabolic, 5, 3), PolarGraphKind::plus).graph);
  for (const auto& g : corpus) {
    const auto params = srg_params(g);
    REQUIRE(params.has_value());
    const auto spec = srg_spectrum(*params);
    for (auto p : random_primes(2, 5)) CHECK(polynomial_from_spectrum(spec, p) == charpoly_mod_p(g, p));
  }
}

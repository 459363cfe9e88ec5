#include "polarsw/spectral.hpp"

#include <cmath>
#include <future>
#include <random>
#include <set>

#include "polarsw/parallel.hpp"

namespace polarsw {
namespace {

using u64 = std::uint64_t;

u64 mul_mod(u64 a, u64 b, u64 m) { return a * b % m; }

u64 pow_mod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

u64 inv_mod(u64 a, u64 m) { return pow_mod(a, m - 2, m); }

constexpr u64 kPoolLow = u64{1} << 30;
constexpr u64 kPoolHigh = u64{1} << 31;

}  // namespace

bool is_prime_u32(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<u64> random_primes(std::size_t count, u64 seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<u64> dist(kPoolLow, kPoolHigh - 1);
  std::vector<u64> out;
  std::set<u64> seen;
  while (out.size() < count) {
    const u64 c = dist(rng) | 1;
    if (is_prime_u32(c) && seen.insert(c).second) out.push_back(c);
  }
  return out;
}

CharPolyModP charpoly_mod_p(const Graph& g, u64 prime) {
  const std::size_t n = g.order();
  if (prime <= n || prime >= kPoolHigh || !is_prime_u32(prime))
    throw std::invalid_argument("charpoly_mod_p needs a prime with n < p < 2^31");
  const u64 p = prime;

  std::vector<u64> a(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = g.adjacent(i, j) ? 1 : 0;
  auto at = [&](std::size_t i, std::size_t j) -> u64& { return a[i * n + j]; };

  // Reduce to upper Hessenberg form by similarity transformations.
  for (std::size_t c = 0; c + 2 < n; ++c) {
    std::size_t piv = c + 1;
    while (piv < n && at(piv, c) == 0) ++piv;
    if (piv == n) continue;
    if (piv != c + 1) {
      for (std::size_t k = 0; k < n; ++k) std::swap(at(piv, k), at(c + 1, k));
      for (std::size_t k = 0; k < n; ++k) std::swap(at(k, piv), at(k, c + 1));
    }
    const u64 inv = inv_mod(at(c + 1, c), p);
    for (std::size_t j = c + 2; j < n; ++j) {
      if (at(j, c) == 0) continue;
      const u64 m = mul_mod(at(j, c), inv, p);
      const u64 neg_m = p - m;
      // row_j -= m row_{c+1}
      u64* rj = &a[j * n];
      const u64* rc = &a[(c + 1) * n];
      for (std::size_t k = c; k < n; ++k) rj[k] = (rj[k] + neg_m * rc[k]) % p;
      // col_{c+1} += m col_j
      for (std::size_t k = 0; k < n; ++k) {
        u64& dst = a[k * n + c + 1];
        dst = (dst + m * a[k * n + j]) % p;
      }
    }
  }

  // polys[m] = charpoly of the leading m x m block.
  std::vector<std::vector<u64>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    const std::size_t r = m - 1;  // 0-based index of the new row/column
    std::vector<u64> next(m + 1, 0);
    const auto& prev = polys[m - 1];
    const u64 h = at(r, r);
    for (std::size_t i = 0; i < prev.size(); ++i) {
      next[i + 1] = (next[i + 1] + prev[i]) % p;
      next[i] = (next[i] + (p - h) * prev[i]) % p;
    }
    u64 t = 1;
    for (std::size_t i = r; i-- > 0;) {
      t = mul_mod(t, at(i + 1, i), p);
      if (t == 0) break;
      const u64 coef = mul_mod(at(i, r), t, p);
      if (coef == 0) continue;
      const auto& lower = polys[i];
      for (std::size_t k = 0; k < lower.size(); ++k) next[k] = (next[k] + (p - coef) * lower[k]) % p;
    }
    polys[m] = std::move(next);
  }
  return CharPolyModP{prime, std::move(polys[n])};
}

CospectralVerdict cospectral(const Graph& g, const Graph& h, std::size_t prime_count, u64 seed) {
  CospectralVerdict v;
  if (g.order() != h.order()) return v;
  v.primes = random_primes(prime_count, seed);

  std::vector<std::future<bool>> jobs;
  const bool threaded = thread_count() > 1;
  for (auto prime : v.primes) {
    jobs.push_back(std::async(threaded ? std::launch::async : std::launch::deferred,
                              [&g, &h, prime] { return charpoly_mod_p(g, prime) == charpoly_mod_p(h, prime); }));
  }
  v.cospectral = true;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (!jobs[i].get() && v.cospectral) {
      v.cospectral = false;
      v.differing_prime = v.primes[i];
    }
  }

  if (v.cospectral) {
    const double n = static_cast<double>(g.order());
    const double log2_bound = n < 2 ? 1.0 : (std::lgamma(n + 1) / std::log(2.0) + n * std::log2(n));
    const double pool = static_cast<double>(kPoolHigh - kPoolLow) / std::log(static_cast<double>(kPoolHigh));
    v.error_bound = std::pow(std::min(1.0, log2_bound / 30.0 / pool), static_cast<double>(prime_count));
  } else {
    v.error_bound = 0.0;
  }
  return v;
}

Spectrum srg_spectrum(const SrgParams& s) {
  if (!s.feasible() || s.k >= s.v || s.k == 0)
    throw SpectrumError(SpectrumError::Kind::infeasible, "infeasible parameters " + s.to_string());
  const long long v = static_cast<long long>(s.v), k = static_cast<long long>(s.k);
  const long long lambda = static_cast<long long>(s.lambda), mu = static_cast<long long>(s.mu);
  const long long disc = (lambda - mu) * (lambda - mu) + 4 * (k - mu);
  long long root = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(disc))));
  while (root * root > disc) --root;
  while ((root + 1) * (root + 1) <= disc) ++root;
  if (root * root != disc || ((lambda - mu + root) % 2) != 0)
    throw SpectrumError(SpectrumError::Kind::irrational, "irrational eigenvalues for " + s.to_string());
  const long long r = (lambda - mu + root) / 2;
  const long long t = (lambda - mu - root) / 2;
  // f + g = v - 1 and k + f r + g t = 0.
  const long long num = 2 * k + (v - 1) * (lambda - mu);
  if (root == 0 || num % root != 0 || ((v - 1) * root - num) % (2 * root) != 0)
    throw SpectrumError(SpectrumError::Kind::irrational, "non-integral multiplicities for " + s.to_string());
  const long long f = ((v - 1) * root - num) / (2 * root);
  const long long g = (v - 1) - f;
  if (f < 0 || g < 0) throw SpectrumError(SpectrumError::Kind::infeasible, "negative multiplicity");
  return {{k, 1}, {r, static_cast<u64>(f)}, {t, static_cast<u64>(g)}};
}

CharPolyModP polynomial_from_spectrum(const Spectrum& s, u64 prime) {
  std::vector<u64> poly{1};
  for (const auto& [theta, mult] : s) {
    const long long m = static_cast<long long>(prime);
    const u64 neg_theta = static_cast<u64>((((-theta) % m) + m) % m);
    for (u64 rep = 0; rep < mult; ++rep) {
      std::vector<u64> next(poly.size() + 1, 0);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i + 1] = (next[i + 1] + poly[i]) % prime;
        next[i] = (next[i] + mul_mod(neg_theta, poly[i], prime)) % prime;
      }
      poly = std::move(next);
    }
  }
  return CharPolyModP{prime, std::move(poly)};
}

}  // namespace polarsw

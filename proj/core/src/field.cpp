#include "polarsw/field.hpp"

#include <stdexcept>

namespace polarsw {
namespace {

using Poly = std::vector<unsigned>;  // little-endian coefficients over GF(p)

unsigned inv_mod(unsigned a, unsigned p) {
  for (unsigned b = 1; b < p; ++b)
    if (a * b % p == 1) return b;
  throw std::domain_error("no inverse mod p");
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo g (g nonzero) over GF(p).
Poly poly_mod(Poly f, const Poly& g, unsigned p) {
  trim(f);
  const unsigned lead_inv = inv_mod(g.back(), p);
  while (f.size() >= g.size()) {
    const unsigned c = f.back() * lead_inv % p;
    const std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i)
      f[shift + i] = (f[shift + i] + p * p - c * g[i] % p) % p;
    trim(f);
  }
  return f;
}

Poly digits_of(unsigned index, unsigned p, unsigned len) {
  Poly d(len, 0);
  for (unsigned i = 0; i < len; ++i) {
    d[i] = index % p;
    index /= p;
  }
  return d;
}

unsigned index_of(const Poly& d, unsigned p) {
  unsigned v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

}  // namespace

bool is_prime(unsigned long long n) {
  if (n < 2) return false;
  for (unsigned long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible(unsigned p, std::span<const std::uint8_t> lower_coeffs) {
  const unsigned k = static_cast<unsigned>(lower_coeffs.size());
  Poly f(lower_coeffs.begin(), lower_coeffs.end());
  f.push_back(1);
  // Try every monic divisor g of degree 1..k/2.
  for (unsigned deg = 1; 2 * deg <= k; ++deg) {
    unsigned count = 1;
    for (unsigned i = 0; i < deg; ++i) count *= p;
    for (unsigned idx = 0; idx < count; ++idx) {
      Poly g = digits_of(idx, p, deg);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

FiniteField FiniteField::make(unsigned p, unsigned k) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (k == 0) throw std::invalid_argument("extension degree must be positive");
  unsigned q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > 256) throw std::invalid_argument("field order exceeds 256");
  }

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->k = k;
  t->q = q;

  // Lexicographically least monic irreducible of degree k.
  for (unsigned idx = 0; idx < q; ++idx) {
    std::vector<std::uint8_t> lower(k);
    unsigned rest = idx;
    for (unsigned i = 0; i < k; ++i) {
      lower[i] = static_cast<std::uint8_t>(rest % p);
      rest /= p;
    }
    if (is_irreducible(p, lower)) {
      t->modulus = std::move(lower);
      break;
    }
  }
  if (t->modulus.size() != k) throw std::logic_error("no irreducible polynomial found");

  Poly modulus(t->modulus.begin(), t->modulus.end());
  modulus.push_back(1);

  t->add.resize(q * q);
  t->mul.resize(q * q);
  t->neg.resize(q);
  t->inv.assign(q, 0);
  for (unsigned a = 0; a < q; ++a) {
    const Poly da = digits_of(a, p, k);
    Poly dn(k);
    for (unsigned i = 0; i < k; ++i) dn[i] = (p - da[i]) % p;
    t->neg[a] = static_cast<std::uint8_t>(index_of(dn, p));
    for (unsigned b = 0; b < q; ++b) {
      const Poly db = digits_of(b, p, k);
      Poly sum(k);
      for (unsigned i = 0; i < k; ++i) sum[i] = (da[i] + db[i]) % p;
      t->add[a * q + b] = static_cast<std::uint8_t>(index_of(sum, p));

      Poly prod(2 * k - 1, 0);
      for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      Poly r = poly_mod(prod, modulus, p);
      r.resize(k, 0);
      t->mul[a * q + b] = static_cast<std::uint8_t>(index_of(r, p));
    }
  }
  for (unsigned a = 1; a < q; ++a)
    for (unsigned b = 1; b < q; ++b)
      if (t->mul[a * q + b] == 1) t->inv[a] = static_cast<std::uint8_t>(b);

  // Least primitive element: multiplicative order q - 1.
  for (unsigned g = 1; g < q; ++g) {
    unsigned x = 1;
    unsigned order = 0;
    do {
      x = t->mul[x * q + g];
      ++order;
    } while (x != 1);
    if (order == q - 1) {
      t->primitive = static_cast<std::uint8_t>(g);
      break;
    }
  }
  return FiniteField(std::move(t));
}

FiniteField FiniteField::of_order(unsigned q) {
  for (unsigned p = 2; p <= q; ++p) {
    if (!is_prime(p) || q % p != 0) continue;
    unsigned k = 0;
    unsigned r = q;
    while (r % p == 0) {
      r /= p;
      ++k;
    }
    if (r != 1) break;
    return make(p, k);
  }
  throw std::invalid_argument("field order must be a prime power: " + std::to_string(q));
}

Element FiniteField::inv(Element a) const {
  if (a == kZero) throw std::domain_error("inverse of zero");
  return Element{t_->inv[a.index]};
}

Element FiniteField::pow(Element a, unsigned long long e) const {
  Element result = kOne;
  Element base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Element FiniteField::from_int(long long v) const {
  const long long p = t_->p;
  return Element{static_cast<std::uint8_t>(((v % p) + p) % p)};
}

Element FiniteField::frobenius(Element x) const {
  if (t_->k % 2 != 0) throw std::domain_error("conjugation needs an even extension degree");
  unsigned long long e = 1;
  for (unsigned i = 0; i < t_->k / 2; ++i) e *= t_->p;
  return pow(x, e);
}

bool FiniteField::is_square(Element x) const {
  if (x == kZero) throw std::domain_error("square class of zero");
  if (t_->q % 2 == 0) throw std::domain_error("square classes need odd order");
  return pow(x, (t_->q - 1) / 2) == kOne;
}

Element FiniteField::least_nonsquare() const {
  for (unsigned i = 1; i < t_->q; ++i) {
    const Element x{static_cast<std::uint8_t>(i)};
    if (!is_square(x)) return x;
  }
  throw std::logic_error("no non-square");
}

std::string FiniteField::symbol(Element x) const {
  static constexpr char kDigits[] = "0123456789abcdefghijklmnopqrstuvwxyz";
  if (t_->q <= 36) return std::string(1, kDigits[x.index]);
  return std::to_string(x.index);
}

}  // namespace polarsw

#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "polarsw/field.hpp"

using namespace polarsw;

namespace {

const std::vector<unsigned> kOrders = {2, 3, 4, 5, 7, 8, 9, 16, 25, 27};

// Schoolbook polynomial arithmetic on base-p digit vectors, reduced by the
// field's own modulus. Independent of the lookup tables.
struct PolyOracle {
  unsigned p, k;
  std::vector<unsigned> modulus;

  std::vector<unsigned> digits(unsigned index) const {
    std::vector<unsigned> d(k);
    for (unsigned i = 0; i < k; ++i, index /= p) d[i] = index % p;
    return d;
  }
  unsigned index(const std::vector<unsigned>& d) const {
    unsigned v = 0;
    for (unsigned i = k; i-- > 0;) v = v * p + d[i];
    return v;
  }
  unsigned mul(unsigned a, unsigned b) const {
    const auto x = digits(a), y = digits(b);
    std::vector<unsigned> prod(2 * k, 0);
    for (unsigned i = 0; i < k; ++i)
      for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
    for (unsigned d = 2 * k; d-- > k;) {
      const unsigned c = prod[d];
      if (!c) continue;
      prod[d] = 0;
      for (unsigned i = 0; i < k; ++i) prod[d - k + i] = (prod[d - k + i] + p * p - c * modulus[i]) % p;
    }
    prod.resize(k);
    return index(prod);
  }
  unsigned add(unsigned a, unsigned b) const {
    auto x = digits(a);
    const auto y = digits(b);
    for (unsigned i = 0; i < k; ++i) x[i] = (x[i] + y[i]) % p;
    return index(x);
  }
};

// Monic polynomial (lower coefficients given) has a monic factor of degree
// 1..deg/2, found by brute-force long division.
bool has_small_factor(unsigned p, const std::vector<unsigned>& lower) {
  const unsigned k = static_cast<unsigned>(lower.size());
  for (unsigned d = 1; d <= k / 2; ++d) {
    unsigned count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (unsigned f = 0; f < count; ++f) {
      std::vector<unsigned> divisor(d + 1, 1);
      for (unsigned i = 0, t = f; i < d; ++i, t /= p) divisor[i] = t % p;
      std::vector<unsigned> rem(lower.begin(), lower.end());
      rem.push_back(1);
      for (unsigned top = k + 1; top-- > d;) {
        const unsigned c = rem[top];
        if (!c) continue;
        for (unsigned i = 0; i <= d; ++i) rem[top - d + i] = (rem[top - d + i] + p * p - c * divisor[i]) % p;
      }
      bool zero = true;
      for (unsigned i = 0; i < d; ++i) zero = zero && rem[i] == 0;
      if (zero) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("small field examples") {
  const auto f2 = FiniteField::make(2, 1);
  CHECK(f2.add(kOne, kOne) == kZero);

  const auto f4 = FiniteField::make(2, 2);
  const Element w{2};
  const Element w2 = f4.mul(w, w);
  CHECK(w2 == Element{3});
  CHECK(f4.mul(w, w2) == kOne);
  CHECK(f4.frobenius(w) == w2);
  CHECK(f4.frobenius(kOne) == kOne);

  const auto f5 = FiniteField::make(5, 1);
  CHECK(f5.inv(Element{2}) == Element{3});
  CHECK(f5.is_square(Element{4}));
  CHECK_FALSE(f5.is_square(Element{3}));

  const auto f3 = FiniteField::make(3, 1);
  CHECK(f3.is_square(Element{1}));
  CHECK_FALSE(f3.is_square(Element{2}));

  const auto f9 = FiniteField::make(3, 2);
  CHECK(f9.frobenius(kZero) == kZero);
}

TEST_CASE("documented moduli") {
  using M = std::vector<std::uint8_t>;
  const std::map<unsigned, M> expected = {
      {4, {1, 1}}, {8, {1, 1, 0}}, {9, {1, 0}}, {16, {1, 1, 0, 0}}, {25, {2, 0}}};
  for (const auto& [q, lower] : expected) {
    const auto f = FiniteField::of_order(q);
    CHECK(M(f.modulus().begin(), f.modulus().end()) == lower);
  }
}

TEST_CASE("modulus is irreducible and lexicographically least") {
  for (unsigned q : kOrders) {
    const auto f = FiniteField::of_order(q);
    const unsigned p = f.characteristic(), k = f.degree();
    if (k == 1) continue;
    std::vector<unsigned> lower(f.modulus().begin(), f.modulus().end());
    CAPTURE(q);
    CHECK_FALSE(has_small_factor(p, lower));
    unsigned key = 0;
    for (unsigned i = k; i-- > 0;) key = key * p + lower[i];
    for (unsigned smaller = 0; smaller < key; ++smaller) {
      std::vector<unsigned> cand(k);
      for (unsigned i = 0, t = smaller; i < k; ++i, t /= p) cand[i] = t % p;
      CHECK(has_small_factor(p, cand));
    }
  }
}

TEST_CASE("is_irreducible agrees with brute force") {
  for (unsigned p : {2u, 3u, 5u}) {
    for (unsigned k = 1; k <= 4; ++k) {
      unsigned count = 1;
      for (unsigned i = 0; i < k; ++i) count *= p;
      if (count > 256) continue;
      for (unsigned c = 0; c < count; ++c) {
        std::vector<unsigned> lower(k);
        std::vector<std::uint8_t> bytes(k);
        for (unsigned i = 0, t = c; i < k; ++i, t /= p) bytes[i] = static_cast<std::uint8_t>(lower[i] = t % p);
        CHECK(is_irreducible(p, bytes) == !has_small_factor(p, lower));
      }
    }
  }
}

TEST_CASE("tables agree with polynomial arithmetic") {
  for (unsigned q : kOrders) {
    const auto f = FiniteField::of_order(q);
    PolyOracle o{f.characteristic(), f.degree(), {f.modulus().begin(), f.modulus().end()}};
    for (unsigned a = 0; a < q; ++a)
      for (unsigned b = 0; b < q; ++b) {
        const Element x{static_cast<std::uint8_t>(a)}, y{static_cast<std::uint8_t>(b)};
        REQUIRE(f.mul(x, y).index == o.mul(a, b));
        REQUIRE(f.add(x, y).index == o.add(a, b));
      }
  }
}

TEST_CASE("field axioms hold exhaustively") {
  for (unsigned q : kOrders) {
    const auto f = FiniteField::of_order(q);
    CAPTURE(q);
    for (unsigned a = 0; a < q; ++a) {
      const Element x{static_cast<std::uint8_t>(a)};
      REQUIRE(f.add(x, f.neg(x)) == kZero);
      REQUIRE(f.add(x, kZero) == x);
      REQUIRE(f.mul(x, kOne) == x);
      if (x != kZero) REQUIRE(f.mul(x, f.inv(x)) == kOne);
      for (unsigned b = 0; b < q; ++b) {
        const Element y{static_cast<std::uint8_t>(b)};
        REQUIRE(f.add(x, y) == f.add(y, x));
        REQUIRE(f.mul(x, y) == f.mul(y, x));
        REQUIRE(f.sub(f.add(x, y), y) == x);
        for (unsigned c = 0; c < q; ++c) {
          const Element z{static_cast<std::uint8_t>(c)};
          REQUIRE(f.add(f.add(x, y), z) == f.add(x, f.add(y, z)));
          REQUIRE(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
          REQUIRE(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
        }
      }
    }
  }
}

TEST_CASE("frobenius is an involutory automorphism") {
  for (unsigned q : {4u, 9u, 16u, 25u}) {
    const auto f = FiniteField::of_order(q);
    unsigned fixed = 0;
    for (unsigned a = 0; a < q; ++a) {
      const Element x{static_cast<std::uint8_t>(a)};
      CHECK(f.frobenius(f.frobenius(x)) == x);
      if (f.frobenius(x) == x) ++fixed;
      for (unsigned b = 0; b < q; ++b) {
        const Element y{static_cast<std::uint8_t>(b)};
        REQUIRE(f.frobenius(f.add(x, y)) == f.add(f.frobenius(x), f.frobenius(y)));
        REQUIRE(f.frobenius(f.mul(x, y)) == f.mul(f.frobenius(x), f.frobenius(y)));
      }
    }
    unsigned root = 1;
    while (root * root < q) ++root;
    CHECK(fixed == root);
  }
}

TEST_CASE("is_square matches a table scan and splits the units evenly") {
  for (unsigned q : {3u, 5u, 7u, 9u, 25u, 27u}) {
    const auto f = FiniteField::of_order(q);
    std::set<std::uint8_t> squares;
    for (unsigned a = 1; a < q; ++a) {
      const Element x{static_cast<std::uint8_t>(a)};
      squares.insert(f.mul(x, x).index);
    }
    CHECK(squares.size() == (q - 1) / 2);
    for (unsigned a = 1; a < q; ++a)
      CHECK(f.is_square(Element{static_cast<std::uint8_t>(a)}) == squares.count(static_cast<std::uint8_t>(a)) > 0);
    CHECK_FALSE(f.is_square(f.least_nonsquare()));
  }
}

TEST_CASE("primitive element generates the unit group") {
  for (unsigned q : kOrders) {
    const auto f = FiniteField::of_order(q);
    std::set<std::uint8_t> seen;
    Element x = kOne;
    for (unsigned i = 0; i + 1 < q; ++i, x = f.mul(x, f.primitive())) seen.insert(x.index);
    CHECK(seen.size() == q - 1);
    CHECK(f.pow(f.primitive(), q - 1) == kOne);
  }
}

TEST_CASE("from_int reduces modulo p") {
  const auto f = FiniteField::make(5, 1);
  CHECK(f.from_int(7) == Element{2});
  CHECK(f.from_int(-1) == Element{4});
  const auto f9 = FiniteField::make(3, 2);
  CHECK(f9.from_int(4) == kOne);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(FiniteField::make(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(FiniteField::make(2, 9), std::invalid_argument);
  CHECK_THROWS_AS(FiniteField::make(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(FiniteField::of_order(6), std::invalid_argument);
  const auto f8 = FiniteField::make(2, 3);
  CHECK_THROWS_AS(f8.inv(kZero), std::domain_error);
  CHECK_THROWS_AS(f8.frobenius(kOne), std::domain_error);
  CHECK_THROWS_AS(f8.is_square(kOne), std::domain_error);
  CHECK_THROWS_AS(FiniteField::make(3, 1).is_square(kZero), std::domain_error);
}

TEST_CASE("symbols") {
  const auto f25 = FiniteField::make(5, 2);
  CHECK(f25.symbol(Element{0}) == "0");
  CHECK(f25.symbol(Element{10}) == "a");
  CHECK(f25.symbol(Element{24}) == "o");
}

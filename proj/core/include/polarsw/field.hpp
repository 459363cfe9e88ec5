#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace polarsw {

/// An element of GF(p^k), identified by its index in the base-p digit
/// enumeration of polynomial coefficients (constant term least significant).
/// Index 0 is zero and index 1 is one.
struct Element {
  std::uint8_t index = 0;

  constexpr auto operator<=>(const Element&) const = default;
};

inline constexpr Element kZero{0};
inline constexpr Element kOne{1};

/// Lookup-table arithmetic in a small finite field GF(p^k), p^k <= 256.
///
/// The defining polynomial is the lexicographically least monic irreducible
/// polynomial of degree k, where the lower coefficients are compared as the
/// base-p integer c_0 + c_1 p + ... + c_{k-1} p^{k-1}. For the fields used
/// here that gives:
///
///   GF(4)  = GF(2)[x]/(x^2 + x + 1)
///   GF(8)  = GF(2)[x]/(x^3 + x + 1)
///   GF(9)  = GF(3)[x]/(x^2 + 1)
///   GF(16) = GF(2)[x]/(x^4 + x + 1)
///   GF(25) = GF(5)[x]/(x^2 + 2)
///
/// Instances are immutable and cheap to copy (tables are shared).
class FiniteField {
 public:
  /// Throws std::invalid_argument for non-prime p, k == 0 or p^k > 256.
  static FiniteField make(unsigned p, unsigned k);

  /// Field of the given order q = p^k.
  static FiniteField of_order(unsigned q);

  unsigned characteristic() const { return t_->p; }
  unsigned degree() const { return t_->k; }
  unsigned order() const { return t_->q; }

  /// Coefficients c_0..c_{k-1} of the monic modulus (leading 1 omitted).
  std::span<const std::uint8_t> modulus() const { return t_->modulus; }

  Element add(Element a, Element b) const { return Element{t_->add[slot(a, b)]}; }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element mul(Element a, Element b) const { return Element{t_->mul[slot(a, b)]}; }
  Element neg(Element a) const { return Element{t_->neg[a.index]}; }
  /// Throws std::domain_error on zero.
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, unsigned long long e) const;

  /// Image of the integer v under Z -> GF(p).
  Element from_int(long long v) const;

  /// x -> x^(p^(k/2)), the involutory automorphism of GF(q) over GF(sqrt q).
  /// Throws std::domain_error when k is odd.
  Element frobenius(Element x) const;

  /// Euler's criterion. Throws std::domain_error on zero or even order.
  bool is_square(Element x) const;

  /// Least-index non-square; requires odd order.
  Element least_nonsquare() const;

  /// A generator of the multiplicative group (least index).
  Element primitive() const { return Element{t_->primitive}; }

  /// Single character per element for orders <= 36 ("0-9a-z"), otherwise
  /// the decimal index.
  std::string symbol(Element x) const;

  bool operator==(const FiniteField& other) const {
    return t_->p == other.t_->p && t_->k == other.t_->k;
  }

 private:
  struct Tables {
    unsigned p = 0;
    unsigned k = 0;
    unsigned q = 0;
    std::vector<std::uint8_t> modulus;
    std::vector<std::uint8_t> add;
    std::vector<std::uint8_t> mul;
    std::vector<std::uint8_t> neg;
    std::vector<std::uint8_t> inv;
    std::uint8_t primitive = 1;
  };

  explicit FiniteField(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}

  std::size_t slot(Element a, Element b) const {
    return static_cast<std::size_t>(a.index) * t_->q + b.index;
  }

  std::shared_ptr<const Tables> t_;
};

bool is_prime(unsigned long long n);

/// True iff the monic polynomial x^k + c_{k-1}x^{k-1} + ... + c_0 over GF(p)
/// has no factor of degree 1..k/2 (exhaustive trial division).
bool is_irreducible(unsigned p, std::span<const std::uint8_t> lower_coeffs);

}  // namespace polarsw

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polarsw/field.hpp"
#include "polarsw/subspace.hpp"

namespace polarsw {

enum class FormKind { symplectic, parabolic, hyperbolic, elliptic, hermitian };

std::string_view to_string(FormKind kind);
/// Accepts "sp", "o", "o+", "o-", "u" and the long names.
std::optional<FormKind> parse_form_kind(std::string_view name);

enum class PointClass { isotropic, nonisotropic, nonisotropic_plus, nonisotropic_minus };

enum class LineClass {
  hyperbolic,
  elliptic,
  tangent,
  totally_isotropic,
  hermitian_nondeg,
  hermitian_tangent,
};

std::string_view to_string(PointClass c);
std::string_view to_string(LineClass c);

enum class PointFilter { all, isotropic, nonisotropic, plus, minus };

/// A non-degenerate reflexive form on F_q^n together with its polar space.
///
/// Standard forms (x_0 first):
///   symplectic  Sp(2d,q):   sum_i x_{2i} y_{2i+1} - x_{2i+1} y_{2i}
///   hyperbolic  O+(2d,q):   Q = sum_i x_{2i} x_{2i+1}
///   parabolic   O(2d+1,q):  Q = x_0^2 + sum_{i>=1} x_{2i-1} x_{2i}
///   elliptic    O-(2d,q):   Q = x_0^2 - nu x_1^2 + sum_{i>=1} x_{2i} x_{2i+1},
///                           nu the least non-square
///   hermitian   U(n,r):     H(x,y) = sum_i x_i y_i^r over GF(r^2)
///
/// With x_0^2 as the diagonal term of the parabolic form, a non-isotropic
/// point p has sigma(p) a square exactly when p^perp is hyperbolic. The
/// constructor checks this on one point of each class.
class PolarSpace {
 public:
  /// Throws std::invalid_argument on inconsistent parameters: odd n for
  /// symplectic/hyperbolic/elliptic, even n for parabolic, even q for
  /// quadrics, non-square q for hermitian.
  static PolarSpace standard(FormKind kind, std::size_t n, unsigned q);

  FormKind kind() const { return kind_; }
  std::size_t dimension() const { return n_; }
  const FiniteField& field() const { return field_; }
  unsigned q() const { return field_.order(); }
  bool is_quadratic() const {
    return kind_ == FormKind::parabolic || kind_ == FormKind::hyperbolic || kind_ == FormKind::elliptic;
  }

  /// Witt index.
  std::size_t rank() const { return rank_; }

  /// Number of generators through a totally isotropic (rank-1)-space, i.e.
  /// q^e + 1. Kept as a count because e is fractional for hermitian spaces.
  unsigned generators_per_next_to_maximal() const { return gens_per_sub_; }

  const Matrix& gram() const { return gram_; }
  /// Upper-triangular monomial coefficients c_ij (i <= j) of the quadratic
  /// form; empty for non-quadratic kinds.
  const Matrix& quadratic_coefficients() const { return quad_; }

  /// The (sesqui)linear form B(x, y) = x^T G conj(y).
  Element form(const Vector& x, const Vector& y) const;

  /// w with B(x, y) = x . w for all x.
  Vector polar_vector(const Vector& y) const;

  /// sigma(x) for quadrics, H(x,x) for hermitian, 0 for symplectic.
  Element evaluate(const Vector& x) const;
  Element evaluate(const ProjectivePoint& x) const { return evaluate(x.coords()); }

  bool is_isotropic(const Vector& x) const { return evaluate(x) == kZero; }

  Subspace perp(const Subspace& s) const;
  Subspace perp(const ProjectivePoint& p) const { return perp(Subspace::of_point(field_, p)); }
  Subspace radical(const Subspace& s) const { return meet(s, perp(s)); }

  bool is_totally_isotropic(const Subspace& s) const;

  PointClass classify_point(const ProjectivePoint& x) const;
  bool matches(const ProjectivePoint& x, PointFilter filter) const;

  /// Throws std::invalid_argument unless dim(line) == 2.
  LineClass classify_line(const Subspace& line) const;

  /// Classification of the induced form on P/p. Requires p = radical(P)
  /// and dim(P) = dim(p) + 2; throws std::invalid_argument otherwise.
  LineClass quotient_line(const Subspace& plane, const Subspace& p) const;

  std::vector<ProjectivePoint> points(PointFilter filter) const;

  std::string label() const;

 private:
  PolarSpace(FormKind kind, std::size_t n, FiniteField field);

  FormKind kind_;
  std::size_t n_;
  FiniteField field_;
  Matrix gram_;
  Matrix quad_;
  std::size_t rank_ = 0;
  unsigned gens_per_sub_ = 0;
};

/// Invariants of the form restricted to a subspace.
struct FormType {
  std::size_t dim = 0;
  std::size_t radical_dim = 0;
  /// Witt index of the non-degenerate part, found by splitting off
  /// hyperbolic pairs.
  std::size_t witt_index = 0;
  /// Quadrics with even non-degenerate part: (-1)^(m/2) det(Gram) is a
  /// square, i.e. the part is hyperbolic.
  std::optional<bool> discriminant_hyperbolic;
};

FormType restricted_form_type(const PolarSpace& space, const Subspace& s);

enum class SubspaceFilterKind { any, totally_isotropic, through, tangent_with_radical };

struct SubspaceFilter {
  SubspaceFilterKind kind = SubspaceFilterKind::any;
  /// The contained subspace for `through`, the radical for
  /// `tangent_with_radical`.
  std::optional<Subspace> anchor;
};

/// All subspaces of the given dimension passing the filter, sorted by
/// canonical echelon form. Totally isotropic and anchored searches extend
/// subspaces one point at a time and deduplicate by echelon form.
std::vector<Subspace> enumerate_subspaces(const PolarSpace& space, std::size_t dim,
                                          const SubspaceFilter& filter);

}  // namespace polarsw

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polarsw/field.hpp"

namespace polarsw {

using Vector = std::vector<Element>;
using Matrix = std::vector<Vector>;

Element dot(const FiniteField& f, const Vector& a, const Vector& b);

/// Reduces `rows` in place to reduced row echelon form and drops zero rows.
/// Returns the pivot column of each remaining row.
std::vector<std::size_t> row_reduce(const FiniteField& f, Matrix& rows);

/// Basis (in RREF) of { x in F^n : r . x = 0 for every row r }.
Matrix nullspace(const FiniteField& f, const Matrix& rows, std::size_t n);

Element determinant(const FiniteField& f, Matrix m);

/// Scales v so that its first nonzero coordinate is 1. Zero stays zero.
void normalize(const FiniteField& f, Vector& v);

/// Base-q integer of the coordinates, x_0 most significant. On normalized
/// vectors this is the canonical point order.
std::uint64_t point_key(const FiniteField& f, const Vector& v);
Vector vector_from_key(const FiniteField& f, std::uint64_t key, std::size_t n);

/// Coordinate digit string, e.g. "0121".
std::string encode_vector(const FiniteField& f, const Vector& v);

/// A projective point: a nonzero vector with leading nonzero coordinate 1.
class ProjectivePoint {
 public:
  /// Throws std::invalid_argument on the zero vector.
  ProjectivePoint(const FiniteField& f, Vector coords);

  const Vector& coords() const { return coords_; }
  std::size_t ambient() const { return coords_.size(); }

  auto operator<=>(const ProjectivePoint&) const = default;

 private:
  Vector coords_;
};

/// All projective points of F_q^n in canonical (lexicographic) order.
std::vector<ProjectivePoint> all_points(const FiniteField& f, std::size_t n);

/// A linear subspace of F_q^n stored by its reduced row echelon basis, so
/// equal subspaces have identical representations.
class Subspace {
 public:
  Subspace() = default;

  static Subspace span(const FiniteField& f, std::size_t n, Matrix rows);
  static Subspace zero(const FiniteField& f, std::size_t n) { return span(f, n, {}); }
  static Subspace full(const FiniteField& f, std::size_t n);
  static Subspace of_point(const FiniteField& f, const ProjectivePoint& p) {
    return span(f, p.ambient(), {p.coords()});
  }

  const FiniteField& field() const { return *field_; }
  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const Matrix& basis() const { return basis_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& s) const;

  /// Projective points of the subspace in canonical order.
  std::vector<ProjectivePoint> points() const;

  /// Rows as digit strings separated by '/'; "0" for the zero space.
  std::string encode() const;

  bool operator==(const Subspace& o) const { return n_ == o.n_ && basis_ == o.basis_; }
  std::strong_ordering operator<=>(const Subspace& o) const {
    if (auto c = n_ <=> o.n_; c != 0) return c;
    return basis_ <=> o.basis_;
  }

 private:
  Subspace(const FiniteField& f, std::size_t n, Matrix basis);

  std::optional<FiniteField> field_;
  std::size_t n_ = 0;
  Matrix basis_;
};

Subspace join(const Subspace& a, const Subspace& b);
Subspace meet(const Subspace& a, const Subspace& b);

/// All subspaces of dimension k of F_q^n, ordered by pivot pattern and then
/// by free entries (both lexicographic).
std::vector<Subspace> grassmannian(const FiniteField& f, std::size_t n, std::size_t k);

/// Vectors completing a basis of `sub` to a basis of `super`.
Matrix complement_basis(const Subspace& super, const Subspace& sub);

/// Gaussian binomial [n choose k]_q.
std::uint64_t gaussian_binomial(unsigned n, unsigned k, unsigned q);

}  // namespace polarsw

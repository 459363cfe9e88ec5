#include "polarsw/polar_space.hpp"

#include <set>
#include <stdexcept>

namespace polarsw {

std::string_view to_string(FormKind kind) {
  switch (kind) {
    case FormKind::symplectic: return "symplectic";
    case FormKind::parabolic: return "parabolic";
    case FormKind::hyperbolic: return "hyperbolic";
    case FormKind::elliptic: return "elliptic";
    case FormKind::hermitian: return "hermitian";
  }
  return "?";
}

std::optional<FormKind> parse_form_kind(std::string_view name) {
  if (name == "sp" || name == "symplectic") return FormKind::symplectic;
  if (name == "o" || name == "parabolic") return FormKind::parabolic;
  if (name == "o+" || name == "hyperbolic") return FormKind::hyperbolic;
  if (name == "o-" || name == "elliptic") return FormKind::elliptic;
  if (name == "u" || name == "hermitian") return FormKind::hermitian;
  return std::nullopt;
}

std::string_view to_string(PointClass c) {
  switch (c) {
    case PointClass::isotropic: return "isotropic";
    case PointClass::nonisotropic: return "nonisotropic";
    case PointClass::nonisotropic_plus: return "nonisotropic_plus";
    case PointClass::nonisotropic_minus: return "nonisotropic_minus";
  }
  return "?";
}

std::string_view to_string(LineClass c) {
  switch (c) {
    case LineClass::hyperbolic: return "hyperbolic";
    case LineClass::elliptic: return "elliptic";
    case LineClass::tangent: return "tangent";
    case LineClass::totally_isotropic: return "totally_isotropic";
    case LineClass::hermitian_nondeg: return "hermitian_nondeg";
    case LineClass::hermitian_tangent: return "hermitian_tangent";
  }
  return "?";
}

PolarSpace::PolarSpace(FormKind kind, std::size_t n, FiniteField field)
    : kind_(kind), n_(n), field_(std::move(field)) {}

PolarSpace PolarSpace::standard(FormKind kind, std::size_t n, unsigned q) {
  const FiniteField f = FiniteField::of_order(q);
  const bool odd_q = q % 2 == 1;
  switch (kind) {
    case FormKind::symplectic:
    case FormKind::hyperbolic:
    case FormKind::elliptic:
      if (n < 2 || n % 2 != 0) throw std::invalid_argument("this form needs an even dimension >= 2");
      break;
    case FormKind::parabolic:
      if (n < 3 || n % 2 != 1) throw std::invalid_argument("parabolic quadric needs an odd dimension >= 3");
      break;
    case FormKind::hermitian:
      if (n < 2) throw std::invalid_argument("hermitian form needs dimension >= 2");
      if (f.degree() % 2 != 0) throw std::invalid_argument("hermitian form needs a square field order");
      break;
  }
  if (kind != FormKind::symplectic && kind != FormKind::hermitian && !odd_q)
    throw std::invalid_argument("quadrics are only supported in odd characteristic");

  PolarSpace s(kind, n, f);
  s.gram_.assign(n, Vector(n, kZero));
  const Element minus_one = f.neg(kOne);

  auto hyperbolic_pairs = [&](std::size_t from) {
    for (std::size_t i = from; i + 1 < n; i += 2) s.quad_[i][i + 1] = kOne;
  };

  switch (kind) {
    case FormKind::symplectic:
      for (std::size_t i = 0; i < n; i += 2) {
        s.gram_[i][i + 1] = kOne;
        s.gram_[i + 1][i] = minus_one;
      }
      s.rank_ = n / 2;
      s.gens_per_sub_ = q + 1;
      break;
    case FormKind::hyperbolic:
      s.quad_.assign(n, Vector(n, kZero));
      hyperbolic_pairs(0);
      s.rank_ = n / 2;
      s.gens_per_sub_ = 2;
      break;
    case FormKind::parabolic:
      s.quad_.assign(n, Vector(n, kZero));
      s.quad_[0][0] = kOne;
      hyperbolic_pairs(1);
      s.rank_ = (n - 1) / 2;
      s.gens_per_sub_ = q + 1;
      break;
    case FormKind::elliptic:
      s.quad_.assign(n, Vector(n, kZero));
      s.quad_[0][0] = kOne;
      s.quad_[1][1] = f.neg(f.least_nonsquare());
      hyperbolic_pairs(2);
      s.rank_ = n / 2 - 1;
      s.gens_per_sub_ = q * q + 1;
      break;
    case FormKind::hermitian: {
      for (std::size_t i = 0; i < n; ++i) s.gram_[i][i] = kOne;
      unsigned r = 1;
      for (unsigned i = 0; i < f.degree() / 2; ++i) r *= f.characteristic();
      s.rank_ = n / 2;
      s.gens_per_sub_ = n % 2 == 0 ? r + 1 : r * r * r + 1;
      break;
    }
  }

  if (!s.quad_.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      s.gram_[i][i] = f.add(s.quad_[i][i], s.quad_[i][i]);
      for (std::size_t j = i + 1; j < n; ++j) {
        s.gram_[i][j] = s.quad_[i][j];
        s.gram_[j][i] = s.quad_[i][j];
      }
    }
  }

  if (determinant(f, s.gram_) == kZero) throw std::logic_error("standard form is degenerate");

  if (kind == FormKind::parabolic) {
    // sigma(p) square <=> p^perp hyperbolic, checked on one point per class.
    bool seen_plus = false, seen_minus = false;
    for (const auto& p : all_points(f, n)) {
      const auto c = s.classify_point(p);
      if (c == PointClass::isotropic) continue;
      const bool plus = c == PointClass::nonisotropic_plus;
      if ((plus && seen_plus) || (!plus && seen_minus)) continue;
      const auto t = restricted_form_type(s, s.perp(p));
      const std::size_t expected = plus ? s.rank_ : s.rank_ - 1;
      if (t.witt_index != expected) throw std::logic_error("parabolic form calibration failed");
      (plus ? seen_plus : seen_minus) = true;
      if (seen_plus && seen_minus) break;
    }
  }
  return s;
}

Vector PolarSpace::polar_vector(const Vector& y) const {
  const auto& f = field_;
  Vector w(n_, kZero);
  if (kind_ == FormKind::hermitian) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (gram_[i][j] != kZero) w[i] = f.add(w[i], f.mul(gram_[i][j], f.frobenius(y[j])));
  } else {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (gram_[i][j] != kZero) w[i] = f.add(w[i], f.mul(gram_[i][j], y[j]));
  }
  return w;
}

Element PolarSpace::form(const Vector& x, const Vector& y) const { return dot(field_, x, polar_vector(y)); }

Element PolarSpace::evaluate(const Vector& x) const {
  const auto& f = field_;
  if (kind_ == FormKind::symplectic) return kZero;
  if (kind_ == FormKind::hermitian) return form(x, x);
  Element s = kZero;
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i] == kZero) continue;
    for (std::size_t j = i; j < n_; ++j)
      if (quad_[i][j] != kZero && x[j] != kZero) s = f.add(s, f.mul(quad_[i][j], f.mul(x[i], x[j])));
  }
  return s;
}

Subspace PolarSpace::perp(const Subspace& s) const {
  Matrix rows;
  rows.reserve(s.dim());
  for (const auto& b : s.basis()) rows.push_back(polar_vector(b));
  if (rows.empty()) return Subspace::full(field_, n_);
  return Subspace::span(field_, n_, nullspace(field_, rows, n_));
}

bool PolarSpace::is_totally_isotropic(const Subspace& s) const {
  const auto& b = s.basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!is_isotropic(b[i])) return false;
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (form(b[i], b[j]) != kZero) return false;
  }
  return true;
}

PointClass PolarSpace::classify_point(const ProjectivePoint& x) const {
  const Element v = evaluate(x);
  if (v == kZero) return PointClass::isotropic;
  if (!is_quadratic()) return PointClass::nonisotropic;
  return field_.is_square(v) ? PointClass::nonisotropic_plus : PointClass::nonisotropic_minus;
}

bool PolarSpace::matches(const ProjectivePoint& x, PointFilter filter) const {
  if (filter == PointFilter::all) return true;
  const auto c = classify_point(x);
  switch (filter) {
    case PointFilter::all: return true;
    case PointFilter::isotropic: return c == PointClass::isotropic;
    case PointFilter::nonisotropic: return c != PointClass::isotropic;
    case PointFilter::plus: return c == PointClass::nonisotropic_plus;
    case PointFilter::minus: return c == PointClass::nonisotropic_minus;
  }
  return false;
}

LineClass PolarSpace::classify_line(const Subspace& line) const {
  if (line.dim() != 2) throw std::invalid_argument("classify_line needs a 2-dimensional subspace");
  if (kind_ == FormKind::symplectic)
    return form(line.basis()[0], line.basis()[1]) == kZero ? LineClass::totally_isotropic
                                                           : LineClass::hyperbolic;
  std::size_t isotropic = 0;
  const auto pts = line.points();
  for (const auto& p : pts)
    if (is_isotropic(p.coords())) ++isotropic;
  if (isotropic == pts.size()) return LineClass::totally_isotropic;
  if (kind_ == FormKind::hermitian) {
    if (isotropic == 1) return LineClass::hermitian_tangent;
    return LineClass::hermitian_nondeg;
  }
  if (isotropic == 2) return LineClass::hyperbolic;
  if (isotropic == 0) return LineClass::elliptic;
  return LineClass::tangent;
}

LineClass PolarSpace::quotient_line(const Subspace& plane, const Subspace& p) const {
  if (plane.dim() != p.dim() + 2 || !plane.contains(p))
    throw std::invalid_argument("quotient_line needs p inside P with codimension 2");
  if (radical(plane) != p) throw std::invalid_argument("p is not the radical of P");
  Matrix reps = complement_basis(plane, p);
  return classify_line(Subspace::span(field_, n_, std::move(reps)));
}

std::vector<ProjectivePoint> PolarSpace::points(PointFilter filter) const {
  std::vector<ProjectivePoint> out;
  for (auto& p : all_points(field_, n_))
    if (matches(p, filter)) out.push_back(std::move(p));
  return out;
}

std::string PolarSpace::label() const {
  const std::string dims = std::to_string(n_) + ",";
  switch (kind_) {
    case FormKind::symplectic: return "Sp(" + dims + std::to_string(q()) + ")";
    case FormKind::parabolic: return "O(" + dims + std::to_string(q()) + ")";
    case FormKind::hyperbolic: return "O+(" + dims + std::to_string(q()) + ")";
    case FormKind::elliptic: return "O-(" + dims + std::to_string(q()) + ")";
    case FormKind::hermitian: {
      unsigned r = 1;
      for (unsigned i = 0; i < field_.degree() / 2; ++i) r *= field_.characteristic();
      return "U(" + dims + std::to_string(r) + ")";
    }
  }
  return "?";
}

FormType restricted_form_type(const PolarSpace& space, const Subspace& s) {
  const auto& f = space.field();
  const std::size_t n = space.dimension();
  FormType t;
  t.dim = s.dim();
  const Subspace rad = space.radical(s);
  t.radical_dim = rad.dim();

  const Matrix nondeg_basis = complement_basis(s, rad);
  Subspace w = Subspace::span(f, n, nondeg_basis);

  if (space.is_quadratic() && w.dim() > 0 && w.dim() % 2 == 0) {
    Matrix g(w.dim(), Vector(w.dim()));
    for (std::size_t i = 0; i < w.dim(); ++i)
      for (std::size_t j = 0; j < w.dim(); ++j) g[i][j] = space.form(w.basis()[i], w.basis()[j]);
    Element disc = determinant(f, std::move(g));
    if ((w.dim() / 2) % 2 == 1) disc = f.neg(disc);
    t.discriminant_hyperbolic = f.is_square(disc);
  }

  // Split off hyperbolic pairs while an isotropic vector remains.
  while (w.dim() >= 2) {
    std::optional<Vector> iso;
    for (const auto& p : w.points()) {
      if (space.is_isotropic(p.coords())) {
        iso = p.coords();
        break;
      }
    }
    if (!iso) break;
    const Vector* partner = nullptr;
    for (const auto& b : w.basis()) {
      if (space.form(*iso, b) != kZero) {
        partner = &b;
        break;
      }
    }
    if (!partner) throw std::logic_error("degenerate remainder while splitting hyperbolic pairs");
    const Subspace pair = Subspace::span(f, n, {*iso, *partner});
    w = meet(w, space.perp(pair));
    ++t.witt_index;
  }
  return t;
}

std::vector<Subspace> enumerate_subspaces(const PolarSpace& space, std::size_t dim,
                                          const SubspaceFilter& filter) {
  const auto& f = space.field();
  const std::size_t n = space.dimension();
  if (dim > n) return {};

  if (filter.kind == SubspaceFilterKind::any) return grassmannian(f, n, dim);

  std::set<Subspace> level;
  std::vector<ProjectivePoint> pool;
  switch (filter.kind) {
    case SubspaceFilterKind::totally_isotropic:
      if (dim == 0) return {Subspace::zero(f, n)};
      pool = space.points(PointFilter::isotropic);
      for (const auto& p : pool) level.insert(Subspace::of_point(f, p));
      break;
    case SubspaceFilterKind::through:
    case SubspaceFilterKind::tangent_with_radical: {
      if (!filter.anchor) throw std::invalid_argument("anchored subspace filter needs an anchor");
      const Subspace& a = *filter.anchor;
      if (dim < a.dim()) return {};
      level.insert(a);
      pool = filter.kind == SubspaceFilterKind::through ? all_points(f, n) : space.perp(a).points();
      break;
    }
    case SubspaceFilterKind::any: break;
  }

  while (!level.empty() && level.begin()->dim() < dim) {
    std::set<Subspace> next;
    for (const auto& s : level) {
      const Subspace sp = filter.kind == SubspaceFilterKind::totally_isotropic ? space.perp(s) : Subspace();
      for (const auto& p : pool) {
        if (s.contains(p.coords())) continue;
        if (filter.kind == SubspaceFilterKind::totally_isotropic && !sp.contains(p.coords())) continue;
        next.insert(join(s, Subspace::of_point(f, p)));
      }
    }
    level = std::move(next);
  }

  std::vector<Subspace> out;
  for (const auto& s : level) {
    if (filter.kind == SubspaceFilterKind::tangent_with_radical && space.radical(s) != *filter.anchor) continue;
    out.push_back(s);
  }
  return out;
}

}  // namespace polarsw

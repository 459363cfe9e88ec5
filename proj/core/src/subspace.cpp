#include "polarsw/subspace.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace polarsw {

Element dot(const FiniteField& f, const Vector& a, const Vector& b) {
  Element s = kZero;
  for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
  return s;
}

std::vector<std::size_t> row_reduce(const FiniteField& f, Matrix& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t n = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == kZero) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const Element s = f.inv(rows[r][c]);
    for (auto& x : rows[r]) x = f.mul(x, s);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == kZero) continue;
      const Element m = f.neg(rows[i][c]);
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = f.add(rows[i][j], f.mul(m, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

Matrix nullspace(const FiniteField& f, const Matrix& rows, std::size_t n) {
  Matrix m = rows;
  const auto pivots = row_reduce(f, m);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n, kZero);
    v[free] = kOne;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(m[r][free]);
    basis.push_back(std::move(v));
  }
  row_reduce(f, basis);
  return basis;
}

Element determinant(const FiniteField& f, Matrix m) {
  const std::size_t n = m.size();
  Element det = kOne;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && m[sel][c] == kZero) ++sel;
    if (sel == n) return kZero;
    if (sel != c) {
      std::swap(m[sel], m[c]);
      det = f.neg(det);
    }
    det = f.mul(det, m[c][c]);
    const Element s = f.inv(m[c][c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == kZero) continue;
      const Element factor = f.neg(f.mul(m[i][c], s));
      for (std::size_t j = c; j < n; ++j) m[i][j] = f.add(m[i][j], f.mul(factor, m[c][j]));
    }
  }
  return det;
}

void normalize(const FiniteField& f, Vector& v) {
  for (const auto& x : v) {
    if (x == kZero) continue;
    const Element s = f.inv(x);
    for (auto& y : v) y = f.mul(y, s);
    return;
  }
}

std::uint64_t point_key(const FiniteField& f, const Vector& v) {
  std::uint64_t key = 0;
  for (const auto& x : v) key = key * f.order() + x.index;
  return key;
}

Vector vector_from_key(const FiniteField& f, std::uint64_t key, std::size_t n) {
  Vector v(n);
  for (std::size_t i = n; i-- > 0;) {
    v[i] = Element{static_cast<std::uint8_t>(key % f.order())};
    key /= f.order();
  }
  return v;
}

std::string encode_vector(const FiniteField& f, const Vector& v) {
  std::string s;
  const bool wide = f.order() > 36;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (wide && i > 0) s += '.';
    s += f.symbol(v[i]);
  }
  return s;
}

ProjectivePoint::ProjectivePoint(const FiniteField& f, Vector coords) : coords_(std::move(coords)) {
  if (std::all_of(coords_.begin(), coords_.end(), [](Element x) { return x == kZero; }))
    throw std::invalid_argument("zero vector is not a projective point");
  normalize(f, coords_);
}

std::vector<ProjectivePoint> all_points(const FiniteField& f, std::size_t n) {
  std::vector<ProjectivePoint> out;
  const unsigned q = f.order();
  // Leading position from last to first gives increasing lexicographic order.
  for (std::size_t lead = n; lead-- > 0;) {
    const std::size_t free = n - lead - 1;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < free; ++i) count *= q;
    for (std::uint64_t c = 0; c < count; ++c) {
      Vector v(n, kZero);
      v[lead] = kOne;
      std::uint64_t rest = c;
      for (std::size_t i = n; i-- > lead + 1;) {
        v[i] = Element{static_cast<std::uint8_t>(rest % q)};
        rest /= q;
      }
      out.emplace_back(f, std::move(v));
    }
  }
  return out;
}

Subspace::Subspace(const FiniteField& f, std::size_t n, Matrix basis)
    : field_(f), n_(n), basis_(std::move(basis)) {}

Subspace Subspace::span(const FiniteField& f, std::size_t n, Matrix rows) {
  for (const auto& r : rows)
    if (r.size() != n) throw std::invalid_argument("row length does not match ambient dimension");
  row_reduce(f, rows);
  return Subspace(f, n, std::move(rows));
}

Subspace Subspace::full(const FiniteField& f, std::size_t n) {
  Matrix id(n, Vector(n, kZero));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = kOne;
  return Subspace(f, n, std::move(id));
}

bool Subspace::contains(const Vector& v) const {
  // Reduce v against the RREF basis; it lies in the span iff the residue is zero.
  if (basis_.empty()) return std::all_of(v.begin(), v.end(), [](Element x) { return x == kZero; });
  const auto& f = *field_;
  Vector r = v;
  for (const auto& row : basis_) {
    std::size_t pivot = 0;
    while (row[pivot] == kZero) ++pivot;
    if (r[pivot] == kZero) continue;
    const Element m = f.neg(r[pivot]);
    for (std::size_t j = 0; j < n_; ++j) r[j] = f.add(r[j], f.mul(m, row[j]));
  }
  return std::all_of(r.begin(), r.end(), [](Element x) { return x == kZero; });
}

bool Subspace::contains(const Subspace& s) const {
  return std::all_of(s.basis_.begin(), s.basis_.end(), [&](const Vector& v) { return contains(v); });
}

std::vector<ProjectivePoint> Subspace::points() const {
  std::vector<ProjectivePoint> out;
  if (basis_.empty()) return out;
  const auto& f = *field_;
  for (const auto& coeffs : all_points(f, dim())) {
    Vector v(n_, kZero);
    for (std::size_t i = 0; i < dim(); ++i) {
      if (coeffs.coords()[i] == kZero) continue;
      for (std::size_t j = 0; j < n_; ++j) v[j] = f.add(v[j], f.mul(coeffs.coords()[i], basis_[i][j]));
    }
    out.emplace_back(f, std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string Subspace::encode() const {
  if (basis_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i > 0) s += '/';
    s += encode_vector(*field_, basis_[i]);
  }
  return s;
}

Subspace join(const Subspace& a, const Subspace& b) {
  Matrix rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.field(), a.ambient(), std::move(rows));
}

Subspace meet(const Subspace& a, const Subspace& b) {
  // Annihilators with respect to the standard dot product: (A^0 + B^0)^0.
  const auto& f = a.field();
  const std::size_t n = a.ambient();
  Matrix ann = nullspace(f, a.basis(), n);
  Matrix bnn = nullspace(f, b.basis(), n);
  ann.insert(ann.end(), bnn.begin(), bnn.end());
  if (ann.empty()) return Subspace::full(f, n);
  return Subspace::span(f, n, nullspace(f, ann, n));
}

std::vector<Subspace> grassmannian(const FiniteField& f, std::size_t n, std::size_t k) {
  std::vector<Subspace> out;
  if (k > n) return out;
  if (k == 0) {
    out.push_back(Subspace::zero(f, n));
    return out;
  }
  const unsigned q = f.order();
  std::vector<std::size_t> pivots(k);
  for (std::size_t i = 0; i < k; ++i) pivots[i] = i;

  while (true) {
    // Free slots: (row r, column c) with c > pivot[r] and c not a pivot column.
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = pivots[r] + 1; c < n; ++c)
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) slots.emplace_back(r, c);
    std::vector<unsigned> digit(slots.size(), 0);
    while (true) {
      Matrix m(k, Vector(n, kZero));
      for (std::size_t r = 0; r < k; ++r) m[r][pivots[r]] = kOne;
      for (std::size_t s = 0; s < slots.size(); ++s)
        m[slots[s].first][slots[s].second] = Element{static_cast<std::uint8_t>(digit[s])};
      out.push_back(Subspace::span(f, n, std::move(m)));
      // Lexicographic increment, last slot fastest.
      std::size_t s = slots.size();
      while (s > 0 && digit[s - 1] + 1 == q) digit[--s] = 0;
      if (s == 0) break;
      ++digit[s - 1];
    }
    // Next pivot combination.
    std::size_t i = k;
    while (i > 0 && pivots[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++pivots[i - 1];
    for (std::size_t j = i; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  return out;
}

Matrix complement_basis(const Subspace& super, const Subspace& sub) {
  Matrix extra;
  Subspace acc = sub;
  for (const auto& v : super.basis()) {
    if (acc.contains(v)) continue;
    extra.push_back(v);
    acc = join(acc, Subspace::span(super.field(), super.ambient(), {v}));
  }
  return extra;
}

std::uint64_t gaussian_binomial(unsigned n, unsigned k, unsigned q) {
  if (k > n) return 0;
  std::uint64_t num = 1;
  std::uint64_t den = 1;
  for (unsigned i = 0; i < k; ++i) {
    std::uint64_t a = 1, b = 1;
    for (unsigned j = 0; j < n - i; ++j) a *= q;
    for (unsigned j = 0; j < i + 1; ++j) b *= q;
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

}  // namespace polarsw

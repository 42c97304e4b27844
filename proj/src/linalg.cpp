#include "ncalc/linalg.hpp"

#include <algorithm>

namespace ncalc {

std::pair<Matrix, std::vector<std::size_t>> rref(const Matrix& m) {
  Matrix a(m);
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (!a.at(i, c).is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel == rows) continue;
    if (sel != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(sel, j), a.at(r, j));
    }
    const Scalar inv = a.at(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) a.at(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      const Scalar factor = a.at(i, c);
      for (std::size_t j = c; j < cols; ++j) a.at(i, j) -= factor * a.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix out(r, cols, a.field());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = a.at(i, j);
  return {out, pivots};
}

bool LinearMap::is_injective() const { return rank() == domain_dim(); }
bool LinearMap::is_surjective() const { return rank() == codomain_dim(); }
std::size_t LinearMap::rank() const { return rref(mat_).second.size(); }

Subspace Subspace::zero(std::size_t ambient_dim, const Field& f) {
  return Subspace(ambient_dim, Matrix(0, ambient_dim, f), {});
}

Subspace Subspace::full(std::size_t ambient_dim, const Field& f) {
  std::vector<std::size_t> pivots(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) pivots[i] = i;
  return Subspace(ambient_dim, Matrix::identity(ambient_dim, f), pivots);
}

Subspace Subspace::span(const std::vector<Vec>& vectors, std::size_t ambient_dim, const Field& f) {
  return span(Matrix::from_rows(vectors, ambient_dim, f));
}

Subspace Subspace::span(const Matrix& rows_as_vectors) {
  auto [b, p] = rref(rows_as_vectors);
  return Subspace(rows_as_vectors.cols(), std::move(b), std::move(p));
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw math_error("contains: dimension mismatch");
  Vec w(v);
  for (std::size_t i = 0; i < dim(); ++i) {
    const Scalar c = w[pivots_[i]];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j) w[j] -= c * basis_.at(i, j);
  }
  return is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

Vec Subspace::coords(const Vec& v) const {
  if (!contains(v)) throw math_error("coords: vector outside subspace");
  Vec c = zero_vec(dim(), field());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Vec Subspace::from_coords(const Vec& coords) const {
  if (coords.size() != dim()) throw math_error("from_coords: dimension mismatch");
  Vec v = zero_vec(ambient_, field());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (coords[i].is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j) v[j] += coords[i] * basis_.at(i, j);
  }
  return v;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw math_error("sum: ambient mismatch");
  return Subspace::span(Matrix::vstack(a.basis_, b.basis_));
}

// Zassenhaus: rref of [A|A ; B|0]; rows with zero left half carry the
// intersection in their right half.
Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw math_error("intersect: ambient mismatch");
  const std::size_t d = a.ambient_;
  const Field& f = a.field();
  Matrix top = Matrix::hstack(a.basis_, a.basis_);
  Matrix bottom = Matrix::hstack(b.basis_, Matrix(b.dim(), d, f));
  auto [r, pivots] = rref(Matrix::vstack(top, bottom));
  std::vector<Vec> inter;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    bool left_zero = true;
    for (std::size_t j = 0; j < d; ++j) {
      if (!r.at(i, j).is_zero()) {
        left_zero = false;
        break;
      }
    }
    if (!left_zero) continue;
    Vec v = zero_vec(d, f);
    for (std::size_t j = 0; j < d; ++j) v[j] = r.at(i, d + j);
    if (!is_zero(v)) inter.push_back(v);
  }
  return Subspace::span(inter, d, f);
}

Subspace kernel(const LinearMap& f) {
  const std::size_t n = f.domain_dim();
  const Field& fld = f.field();
  auto [r, pivots] = rref(f.matrix());
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    Vec v = zero_vec(n, fld);
    v[c] = Scalar::one(fld);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, c);
    basis.push_back(v);
  }
  return Subspace::span(basis, n, fld);
}

Subspace image(const LinearMap& f) { return Subspace::span(f.matrix().transposed()); }

std::optional<AffineSolution> solve_affine(const LinearMap& f, const Vec& b) {
  if (b.size() != f.codomain_dim()) throw math_error("solve_affine: rhs dimension mismatch");
  const std::size_t n = f.domain_dim();
  const Field& fld = f.field();
  Matrix aug = Matrix::hstack(f.matrix(), Matrix::from_rows({b}, b.size(), fld).transposed());
  auto [r, pivots] = rref(aug);
  for (auto p : pivots) {
    if (p == n) return std::nullopt;  // pivot in the rhs column: inconsistent
  }
  Vec x = zero_vec(n, fld);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = r.at(i, n);
  return AffineSolution{std::move(x), kernel(f)};
}

QuotientSpace quotient(std::size_t ambient_dim, const Subspace& n) {
  if (n.ambient_dim() != ambient_dim) throw math_error("quotient: ambient mismatch");
  const Field& f = n.field();
  std::vector<bool> is_pivot(ambient_dim, false);
  for (auto p : n.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < ambient_dim; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  const std::size_t q = free_cols.size();

  // projection: reduce modulo n (kill pivot coordinates), read free ones
  Matrix proj(q, ambient_dim, f);
  for (std::size_t i = 0; i < q; ++i) proj.at(i, free_cols[i]) = Scalar::one(f);
  for (std::size_t k = 0; k < n.dim(); ++k) {
    const std::size_t p = n.pivots()[k];
    for (std::size_t i = 0; i < q; ++i) proj.at(i, p) -= n.basis().at(k, free_cols[i]);
  }

  Matrix sec(ambient_dim, q, f);
  for (std::size_t i = 0; i < q; ++i) sec.at(free_cols[i], i) = Scalar::one(f);

  return QuotientSpace{LinearMap(std::move(proj)), LinearMap(std::move(sec)), q, n};
}

LinearMap induced_on_quotients(const LinearMap& f, const QuotientSpace& dom,
                               const QuotientSpace& cod) {
  // well-definedness: f must carry the domain subspace into the codomain one
  for (std::size_t i = 0; i < dom.subspace.dim(); ++i) {
    if (!cod.subspace.contains(f(dom.subspace.basis_vector(i))))
      throw math_error("induced_on_quotients: map does not preserve the subspaces");
  }
  return cod.projection * f * dom.section;
}

}  // namespace ncalc

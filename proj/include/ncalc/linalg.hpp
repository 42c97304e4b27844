#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ncalc/matrix.hpp"

namespace ncalc {

// Reduced row-echelon form with zero rows dropped; second component lists
// the pivot columns in increasing order.
std::pair<Matrix, std::vector<std::size_t>> rref(const Matrix& m);

// A linear map codomain <- domain; columns are indexed by the domain basis.
class LinearMap {
public:
  LinearMap() = default;
  explicit LinearMap(Matrix m) : mat_(std::move(m)) {}
  static LinearMap identity(std::size_t n, const Field& f) {
    return LinearMap(Matrix::identity(n, f));
  }
  static LinearMap zero(std::size_t codomain, std::size_t domain, const Field& f) {
    return LinearMap(Matrix(codomain, domain, f));
  }

  std::size_t domain_dim() const { return mat_.cols(); }
  std::size_t codomain_dim() const { return mat_.rows(); }
  const Field& field() const { return mat_.field(); }
  const Matrix& matrix() const { return mat_; }

  Vec operator()(const Vec& v) const { return mat_.apply(v); }
  LinearMap operator*(const LinearMap& rhs) const { return LinearMap(mat_ * rhs.mat_); }
  LinearMap operator+(const LinearMap& rhs) const { return LinearMap(mat_ + rhs.mat_); }
  LinearMap operator-(const LinearMap& rhs) const { return LinearMap(mat_ - rhs.mat_); }
  friend bool operator==(const LinearMap&, const LinearMap&) = default;

  bool is_injective() const;
  bool is_surjective() const;
  std::size_t rank() const;

private:
  Matrix mat_;
};

// A linear subspace in canonical form: the stored basis rows are the unique
// RREF basis, so equality is entrywise comparison.
class Subspace {
public:
  Subspace() : ambient_(0), basis_() {}  // zero space of the rational point
  static Subspace zero(std::size_t ambient_dim, const Field& f);
  static Subspace full(std::size_t ambient_dim, const Field& f);
  // Canonicalizes the span of the given rows.
  static Subspace span(const std::vector<Vec>& vectors, std::size_t ambient_dim, const Field& f);
  static Subspace span(const Matrix& rows_as_vectors);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Field& field() const { return basis_.field(); }
  const Matrix& basis() const { return basis_; }          // RREF rows
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vec basis_vector(std::size_t i) const { return basis_.row(i); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  // Coordinates of a member vector w.r.t. the canonical basis (these are just
  // its pivot-column entries). Throws if v is not a member.
  Vec coords(const Vec& v) const;
  Vec from_coords(const Vec& coords) const;  // sum of coords[i] * basis row i

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

  friend Subspace sum(const Subspace& a, const Subspace& b);
  friend Subspace intersect(const Subspace& a, const Subspace& b);

private:
  Subspace(std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel(const LinearMap& f);
Subspace image(const LinearMap& f);

struct AffineSolution {
  Vec particular;
  Subspace homogeneous;
};

// One solution of f(x) = b together with kernel(f), or nullopt if unsolvable.
std::optional<AffineSolution> solve_affine(const LinearMap& f, const Vec& b);

// The quotient of k^ambient by a subspace, in canonical coordinates: the
// non-pivot coordinates of the subspace's RREF basis.
struct QuotientSpace {
  LinearMap projection;  // ambient -> quotient, surjective, kernel = subspace
  LinearMap section;     // quotient -> ambient, projection * section = id
  std::size_t dim;
  Subspace subspace;
};

QuotientSpace quotient(std::size_t ambient_dim, const Subspace& n);

// The map induced by f on quotient coordinates; requires f(n_dom) <= n_cod.
LinearMap induced_on_quotients(const LinearMap& f, const QuotientSpace& dom,
                               const QuotientSpace& cod);

}  // namespace ncalc

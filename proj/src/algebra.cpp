#include "ncalc/algebra.hpp"

#include <sstream>

namespace ncalc {

Algebra::Algebra(Field field, std::size_t dim, std::vector<std::string> basis_labels,
                 Vec unit_coords, std::vector<Scalar> structure_constants)
    : field_(field), n_(dim), labels_(std::move(basis_labels)), unit_(std::move(unit_coords)),
      c_(std::move(structure_constants)) {
  if (n_ == 0) throw input_error("algebra dimension must be positive");
  if (labels_.empty()) {
    for (std::size_t i = 0; i < n_; ++i) labels_.push_back("e" + std::to_string(i));
  }
  if (labels_.size() != n_) throw input_error("basis label count differs from dimension");
  if (unit_.size() != n_) throw input_error("unit coordinate count differs from dimension");
  if (c_.size() != n_ * n_ * n_) throw input_error("structure constant count differs from dim^3");

  left_.reserve(n_);
  right_.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    Matrix L(n_, n_, field_), R(n_, n_, field_);
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k) {
        L.at(k, j) = c(i, j, k);   // L_i e_j = e_i e_j
        R.at(k, j) = c(j, i, k);   // R_i e_j = e_j e_i
      }
    left_.push_back(std::move(L));
    right_.push_back(std::move(R));
  }
}

Vec Algebra::mul_basis(std::size_t i, std::size_t j) const {
  Vec v = zero_vec(n_, field_);
  for (std::size_t k = 0; k < n_; ++k) v[k] = c(i, j, k);
  return v;
}

Vec Algebra::mul(const Vec& a, const Vec& b) const {
  if (a.size() != n_ || b.size() != n_) throw math_error("element dimension mismatch");
  Vec v = zero_vec(n_, field_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (b[j].is_zero()) continue;
      const Scalar ab = a[i] * b[j];
      for (std::size_t k = 0; k < n_; ++k) v[k] += ab * c(i, j, k);
    }
  }
  return v;
}

Matrix Algebra::left_mult(const Vec& r) const {
  Matrix m(n_, n_, field_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (r[i].is_zero()) continue;
    m = m + left_[i] * r[i];
  }
  return m;
}

Matrix Algebra::right_mult(const Vec& r) const {
  Matrix m(n_, n_, field_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (r[i].is_zero()) continue;
    m = m + right_[i] * r[i];
  }
  return m;
}

bool Algebra::structurally_equal(const Algebra& other) const {
  return field_ == other.field_ && n_ == other.n_ && unit_ == other.unit_ && c_ == other.c_;
}

std::string AlgebraViolation::describe(const Algebra& a) const {
  std::ostringstream os;
  const auto& lb = a.labels();
  if (kind == Kind::associativity) {
    os << "associativity violated at (" << lb[i] << "," << lb[j] << "," << lb[k]
       << "), coordinate " << lb[l];
  } else {
    os << "unit axiom violated: " << (j == 0 ? "1*" : "") << lb[i] << (j == 1 ? "*1" : "")
       << " != " << lb[i];
  }
  return os.str();
}

AlgebraReport validate_algebra(const Algebra& a) {
  AlgebraReport rep;
  const std::size_t n = a.dim();
  // (e_i e_j) e_k = e_i (e_j e_k), coordinatewise
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vec lhs = a.mul(a.mul_basis(i, j), unit_vec(n, k, a.field()));
        const Vec rhs = a.mul(unit_vec(n, i, a.field()), a.mul_basis(j, k));
        for (std::size_t l = 0; l < n; ++l) {
          if (!(lhs[l] == rhs[l])) {
            rep.violations.push_back({AlgebraViolation::Kind::associativity, i, j, k, l});
            break;
          }
        }
      }
  for (std::size_t i = 0; i < n; ++i) {
    const Vec ei = unit_vec(n, i, a.field());
    if (a.mul(a.unit(), ei) != ei)
      rep.violations.push_back({AlgebraViolation::Kind::unit, i, 0, 0, 0});
    if (a.mul(ei, a.unit()) != ei)
      rep.violations.push_back({AlgebraViolation::Kind::unit, i, 1, 0, 0});
  }
  rep.ok = rep.violations.empty();
  return rep;
}

namespace {

std::vector<Scalar> zero_constants(std::size_t n, const Field& f) {
  return std::vector<Scalar>(n * n * n, Scalar::zero(f));
}

}  // namespace

Algebra truncated_polynomial_algebra(std::size_t m, const Field& f) {
  if (m < 1) throw input_error("truncated_polynomial: m must be >= 1");
  auto c = zero_constants(m, f);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j + i < m; ++j) c[(i * m + j) * m + (i + j)] = Scalar::one(f);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i)
    labels.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
  return Algebra(f, m, std::move(labels), unit_vec(m, 0, f), std::move(c));
}

Algebra matrix_algebra(std::size_t k, const Field& f) {
  if (k < 1) throw input_error("matrix_algebra: k must be >= 1");
  const std::size_t n = k * k;  // basis E_{ab} at index a*k + b
  auto c = zero_constants(n, f);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t d = 0; d < k; ++d) {
        // E_{ab} E_{bd} = E_{ad}
        const std::size_t i = a * k + b, j = b * k + d, l = a * k + d;
        c[(i * n + j) * n + l] = Scalar::one(f);
      }
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      labels.push_back("E" + std::to_string(a + 1) + std::to_string(b + 1));
  Vec unit = zero_vec(n, f);
  for (std::size_t a = 0; a < k; ++a) unit[a * k + a] = Scalar::one(f);
  return Algebra(f, n, std::move(labels), std::move(unit), std::move(c));
}

Algebra cyclic_group_algebra(std::size_t m, const Field& f) {
  if (m < 1) throw input_error("cyclic_group_algebra: m must be >= 1");
  auto c = zero_constants(m, f);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) c[(i * m + j) * m + ((i + j) % m)] = Scalar::one(f);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i)
    labels.push_back(i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i)));
  return Algebra(f, m, std::move(labels), unit_vec(m, 0, f), std::move(c));
}

Algebra quantum_plane_algebra(const Scalar& q, std::size_t N, const Field& f) {
  if (N < 1) throw input_error("quantum_plane: N must be >= 1");
  if (!(q.field() == f)) throw input_error("quantum_plane: q not in the chosen field");
  if (q.is_zero()) throw input_error("quantum_plane: q must be invertible");
  const std::size_t n = N * N;  // basis x^a y^b at index a*N + b
  auto c = zero_constants(n, f);
  const Scalar qinv = q.inverse();
  // y x = q^{-1} x y, so (x^a y^b)(x^r y^s) = q^{-b r} x^{a+r} y^{b+s}
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b)
      for (std::size_t r = 0; r < N; ++r)
        for (std::size_t s = 0; s < N; ++s) {
          if (a + r >= N || b + s >= N) continue;
          Scalar coeff = Scalar::one(f);
          for (std::size_t t = 0; t < b * r; ++t) coeff *= qinv;
          const std::size_t i = a * N + b, j = r * N + s, l = (a + r) * N + (b + s);
          c[(i * n + j) * n + l] = coeff;
        }
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      std::string s;
      if (a) s += (a == 1 ? "x" : "x^" + std::to_string(a));
      if (b) s += (b == 1 ? "y" : "y^" + std::to_string(b));
      labels.push_back(s.empty() ? "1" : s);
    }
  return Algebra(f, n, std::move(labels), unit_vec(n, 0, f), std::move(c));
}

LinearMap mu_map(const Algebra& a) {
  const std::size_t n = a.dim();
  Matrix m(n, n * n, a.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set_col(i * n + j, a.mul_basis(i, j));
  return LinearMap(std::move(m));
}

Algebra opposite(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<Scalar> c = zero_constants(n, a.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = a.c(j, i, k);
  return Algebra(a.field(), n, a.labels(), a.unit(), std::move(c));
}

Subspace center(const Algebra& a) {
  const std::size_t n = a.dim();
  // z with z e_i - e_i z = 0 for all i: stack (R_i - L_i)
  Matrix sys(0, n, a.field());
  for (std::size_t i = 0; i < n; ++i)
    sys = Matrix::vstack(sys, a.right_mult(i) - a.left_mult(i));
  return kernel(LinearMap(std::move(sys)));
}

bool is_commutative(const Algebra& a) { return center(a).dim() == a.dim(); }

}  // namespace ncalc

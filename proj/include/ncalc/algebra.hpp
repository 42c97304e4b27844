#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ncalc/linalg.hpp"

namespace ncalc {

// A finite-dimensional unital associative algebra given by structure
// constants: e_i * e_j = sum_k c[i][j][k] e_k.
class Algebra {
public:
  Algebra(Field field, std::size_t dim, std::vector<std::string> basis_labels,
          Vec unit_coords, std::vector<Scalar> structure_constants);

  const Field& field() const { return field_; }
  std::size_t dim() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vec& unit() const { return unit_; }

  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * n_ + j) * n_ + k];
  }

  Vec mul_basis(std::size_t i, std::size_t j) const;  // e_i * e_j
  Vec mul(const Vec& a, const Vec& b) const;

  // Matrix of left multiplication by e_i (resp. by element r): a |-> r*a.
  const Matrix& left_mult(std::size_t i) const { return left_[i]; }
  const Matrix& right_mult(std::size_t i) const { return right_[i]; }
  Matrix left_mult(const Vec& r) const;
  Matrix right_mult(const Vec& r) const;

  bool structurally_equal(const Algebra& other) const;

private:
  Field field_;
  std::size_t n_;
  std::vector<std::string> labels_;
  Vec unit_;
  std::vector<Scalar> c_;        // n^3, index (i*n+j)*n+k
  std::vector<Matrix> left_;     // L_i, n matrices n x n
  std::vector<Matrix> right_;    // R_i
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

// An element of a fixed algebra, by coordinates.
struct AlgebraElement {
  AlgebraPtr algebra;
  Vec coords;

  AlgebraElement operator*(const AlgebraElement& rhs) const {
    return {algebra, algebra->mul(coords, rhs.coords)};
  }
  AlgebraElement operator+(const AlgebraElement& rhs) const {
    return {algebra, add(coords, rhs.coords)};
  }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.coords == b.coords;
  }
};

struct AlgebraViolation {
  enum class Kind { associativity, unit };
  Kind kind;
  // associativity: the quadruple (i, j, k, l); unit: (i) with side in j (0 =
  // left, 1 = right), k = l = 0.
  std::size_t i = 0, j = 0, k = 0, l = 0;
  std::string describe(const Algebra& a) const;
};

struct AlgebraReport {
  bool ok = true;
  std::vector<AlgebraViolation> violations;
};

// Checks associativity on all basis quadruples and the two-sided unit axiom.
AlgebraReport validate_algebra(const Algebra& a);

// Builtin families.
Algebra truncated_polynomial_algebra(std::size_t m, const Field& f);  // k[x]/(x^m)
Algebra matrix_algebra(std::size_t k, const Field& f);                // M_k
Algebra cyclic_group_algebra(std::size_t m, const Field& f);          // k[Z_m]
// k<x,y>/(xy - q yx, x^N, y^N), dimension N^2 with basis x^a y^b.
Algebra quantum_plane_algebra(const Scalar& q, std::size_t N, const Field& f);

// The multiplication map mu: R (x) R -> R as an n^2 -> n linear map; tensor
// basis e_i (x) e_j sits at index i*n + j.
LinearMap mu_map(const Algebra& a);

Algebra opposite(const Algebra& a);
Subspace center(const Algebra& a);
bool is_commutative(const Algebra& a);

}  // namespace ncalc

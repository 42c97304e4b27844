#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncalc/algebra.hpp"

using namespace ncalc;

namespace {

const Field Q = Field::rationals();

AlgebraPtr dual_numbers() {
  return std::make_shared<Algebra>(truncated_polynomial_algebra(2, Q));
}

// A genuinely non-associative table: x*x = y, x*y = 1, y*x = 0, y*y = 0,
// so (x x) x = y x = 0 but x (x x) = x y = 1.
Algebra broken_algebra() {
  std::vector<Scalar> c(27, Scalar::zero(Q));
  auto set = [&](std::size_t i, std::size_t j, std::size_t k) {
    c[(i * 3 + j) * 3 + k] = Scalar::one(Q);
  };
  for (std::size_t i = 0; i < 3; ++i) {
    set(0, i, i);
    if (i) set(i, 0, i);
  }
  set(1, 1, 2);  // x*x = y
  set(1, 2, 0);  // x*y = 1
  return Algebra(Q, 3, {"1", "x", "y"}, unit_vec(3, 0, Q), std::move(c));
}

}  // namespace

TEST_CASE("builtin algebras validate") {
  for (std::size_t m : {1u, 2u, 3u, 4u}) {
    CHECK(validate_algebra(truncated_polynomial_algebra(m, Q)).ok);
    CHECK(validate_algebra(cyclic_group_algebra(m, Q)).ok);
  }
  CHECK(validate_algebra(matrix_algebra(2, Q)).ok);
  CHECK(validate_algebra(matrix_algebra(3, Q)).ok);
  CHECK(validate_algebra(quantum_plane_algebra(Scalar(-1, Q), 2, Q)).ok);
  const Field F5 = Field::prime(5);
  CHECK(validate_algebra(quantum_plane_algebra(Scalar(2, F5), 3, F5)).ok);
}

TEST_CASE("componentwise product on Q^2 validates") {
  std::vector<Scalar> c(8, Scalar::zero(Q));
  c[(0 * 2 + 0) * 2 + 0] = Scalar::one(Q);  // a*a = a
  c[(1 * 2 + 1) * 2 + 1] = Scalar::one(Q);  // b*b = b
  const Algebra a(Q, 2, {"a", "b"}, Vec{Scalar::one(Q), Scalar::one(Q)}, std::move(c));
  CHECK(validate_algebra(a).ok);
  CHECK(is_commutative(a));
  // the unit is not a basis vector here
  CHECK(a.mul(a.unit(), unit_vec(2, 0, Q)) == unit_vec(2, 0, Q));
}

TEST_CASE("associativity violations are located") {
  const AlgebraReport rep = validate_algebra(broken_algebra());
  CHECK_FALSE(rep.ok);
  bool found = false;
  for (const auto& v : rep.violations)
    if (v.kind == AlgebraViolation::Kind::associativity && v.i == 1 && v.j == 1 && v.k == 1)
      found = true;
  CHECK(found);
}

TEST_CASE("unit violations are located") {
  // x*1 = 0 instead of x
  std::vector<Scalar> c(8, Scalar::zero(Q));
  c[0] = Scalar::one(Q);                     // 1*1 = 1
  c[(0 * 2 + 1) * 2 + 1] = Scalar::one(Q);   // 1*x = x
  const Algebra a(Q, 2, {"1", "x"}, unit_vec(2, 0, Q), std::move(c));
  const AlgebraReport rep = validate_algebra(a);
  CHECK_FALSE(rep.ok);
  bool unit_violation = false;
  for (const auto& v : rep.violations)
    if (v.kind == AlgebraViolation::Kind::unit) unit_violation = true;
  CHECK(unit_violation);
}

TEST_CASE("builtin structure spot checks") {
  const Algebra dn = truncated_polynomial_algebra(2, Q);
  CHECK(dn.dim() == 2);
  CHECK(is_zero(dn.mul_basis(1, 1)));  // x^2 = 0

  const Algebra m2 = matrix_algebra(2, Q);
  CHECK(m2.dim() == 4);
  // indices: E11=0, E12=1, E21=2, E22=3
  CHECK(m2.mul_basis(0, 1) == unit_vec(4, 1, Q));  // E11 E12 = E12
  CHECK(is_zero(m2.mul_basis(1, 0)));              // E12 E11 = 0

  const Algebra qp = quantum_plane_algebra(Scalar(-1, Q), 2, Q);
  CHECK(qp.dim() == 4);
  // basis 1=0, y=1, x=2, xy=3: y*x = -xy, x^2 = y^2 = 0
  CHECK(qp.mul_basis(1, 2) == scale(Scalar(-1, Q), unit_vec(4, 3, Q)));
  CHECK(qp.mul_basis(2, 1) == unit_vec(4, 3, Q));
  CHECK(is_zero(qp.mul_basis(2, 2)));
  CHECK(is_zero(qp.mul_basis(1, 1)));

  CHECK_THROWS_AS(truncated_polynomial_algebra(0, Q), input_error);
  CHECK_THROWS_AS(matrix_algebra(0, Q), input_error);
  CHECK_THROWS_AS(quantum_plane_algebra(Scalar(0, Q), 2, Q), input_error);
}

TEST_CASE("mu map: unit column, dual-number values, full rank") {
  const AlgebraPtr dn = dual_numbers();
  const LinearMap mu = mu_map(*dn);
  CHECK(mu.codomain_dim() == 2);
  CHECK(mu.domain_dim() == 4);
  // mu(1 (x) x) = x, mu(x (x) x) = 0, mu(1 (x) 1) = 1
  CHECK(mu(unit_vec(4, 1, Q)) == unit_vec(2, 1, Q));
  CHECK(is_zero(mu(unit_vec(4, 3, Q))));
  CHECK(mu(unit_vec(4, 0, Q)) == unit_vec(2, 0, Q));

  for (std::size_t k : {2u, 3u}) {
    const Algebra a = matrix_algebra(k, Q);
    CHECK(mu_map(a).rank() == a.dim());  // mu surjective
  }
  CHECK(mu_map(cyclic_group_algebra(3, Q)).rank() == 3);
}

TEST_CASE("opposite, center, commutativity") {
  const Algebra dn = truncated_polynomial_algebra(2, Q);
  CHECK(opposite(dn).structurally_equal(dn));  // commutative
  CHECK(center(dn) == Subspace::full(2, Q));
  CHECK(is_commutative(dn));

  const Algebra m2 = matrix_algebra(2, Q);
  const Subspace z = center(m2);
  CHECK(z.dim() == 1);
  Vec id_mat = zero_vec(4, Q);
  id_mat[0] = id_mat[3] = Scalar::one(Q);  // E11 + E22
  CHECK(z.contains(id_mat));
  CHECK_FALSE(is_commutative(m2));
  CHECK(validate_algebra(opposite(m2)).ok);

  const Algebra qp = quantum_plane_algebra(Scalar(-1, Q), 2, Q);
  CHECK_FALSE(is_commutative(qp));
  const Subspace zq = center(qp);
  CHECK(zq.contains(unit_vec(4, 0, Q)));  // 1
  CHECK(zq.contains(unit_vec(4, 3, Q)));  // xy
  CHECK(validate_algebra(opposite(qp)).ok);
}

TEST_CASE("center always contains the unit") {
  for (std::size_t m : {2u, 3u, 4u}) {
    const Algebra a = cyclic_group_algebra(m, Q);
    CHECK(center(a).contains(a.unit()));
  }
  const Algebra m2 = matrix_algebra(2, Q);
  CHECK(center(m2).contains(m2.unit()));
}

TEST_CASE("algebra element operations") {
  const AlgebraPtr dn = dual_numbers();
  const AlgebraElement one{dn, unit_vec(2, 0, Q)};
  const AlgebraElement x{dn, unit_vec(2, 1, Q)};
  CHECK((x * x).coords == zero_vec(2, Q));
  CHECK((one * x) == x);
  CHECK((x + x).coords == scale(Scalar(2, Q), x.coords));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncalc/bimodule.hpp"
#include "ncalc/util.hpp"

using namespace ncalc;

namespace {

const Field Q = Field::rationals();

AlgebraPtr dual_numbers() {
  return std::make_shared<Algebra>(truncated_polynomial_algebra(2, Q));
}
AlgebraPtr m2() { return std::make_shared<Algebra>(matrix_algebra(2, Q)); }
AlgebraPtr cyclic3() { return std::make_shared<Algebra>(cyclic_group_algebra(3, Q)); }
AlgebraPtr qplane() {
  return std::make_shared<Algebra>(quantum_plane_algebra(Scalar(-1, Q), 2, Q));
}

Subspace ker_mu(const AlgebraPtr& a) { return kernel(mu_map(*a)); }

FreeModuleBraiding lambda_braiding(long lambda) {
  // on dual numbers, one generator: (a + bx) (x) v |-> v (x) (a + lambda b x)
  Matrix m(2, 2, Q);
  m.at(0, 0) = Scalar::one(Q);
  m.at(1, 1) = Scalar(lambda, Q);
  return {FreeModuleBraiding::Direction::r_tensor_v_to_v_tensor_r, 1, LinearMap(std::move(m))};
}

FreeModuleBraiding flip(const AlgebraPtr& a, std::size_t k,
                        FreeModuleBraiding::Direction dir) {
  const std::size_t n = a->dim();
  Matrix m(n * k, n * k, Q);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t v = 0; v < k; ++v) {
      if (dir == FreeModuleBraiding::Direction::r_tensor_v_to_v_tensor_r)
        m.at(v * n + i, i * k + v) = Scalar::one(Q);
      else
        m.at(i * k + v, v * n + i) = Scalar::one(Q);
    }
  return {dir, k, LinearMap(std::move(m))};
}

}  // namespace

TEST_CASE("regular and bifree bimodules satisfy the axioms") {
  for (const AlgebraPtr& a : {dual_numbers(), m2(), cyclic3(), qplane()}) {
    CHECK(check_bimodule(regular_bimodule(a)).ok);
    CHECK(check_bimodule(bifree_square(a)).ok);
    CHECK(check_bimodule(standard_free_bimodule(a, 2)).ok);
  }
}

TEST_CASE("a broken left action is reported at the right pair") {
  const AlgebraPtr a = dual_numbers();
  // Lambda(x) with Lambda(x)^2 != 0 = Lambda(x^2) on a 1-dim module
  std::vector<Matrix> left{Matrix::identity(1, Q), Matrix::identity(1, Q)};
  std::vector<Matrix> right{Matrix::identity(1, Q), Matrix(1, 1, Q)};
  const Bimodule broken(a, 1, std::move(left), std::move(right));
  const BimoduleReport rep = check_bimodule(broken);
  CHECK_FALSE(rep.ok);
  bool at_xx = false;
  for (const auto& v : rep.violations)
    if (v.kind == BimoduleViolation::Kind::left_mult && v.i == 1 && v.j == 1) at_xx = true;
  CHECK(at_xx);
}

TEST_CASE("bifree square acts through the two slots") {
  const AlgebraPtr a = dual_numbers();
  const Bimodule b = bifree_square(a);
  CHECK(b.dim() == 4);
  // x.(1 (x) 1) = x (x) 1 (index 2), (1 (x) 1).x = 1 (x) x (index 1)
  CHECK(b.act_left(1, unit_vec(4, 0, Q)) == unit_vec(4, 2, Q));
  CHECK(b.act_right(1, unit_vec(4, 0, Q)) == unit_vec(4, 1, Q));
}

TEST_CASE("mu is a bimodule map onto the regular bimodule") {
  for (const AlgebraPtr& a : {dual_numbers(), m2()}) {
    const BimoduleMap mu = mu_bimodule_map(a);
    CHECK(verify_module_map(mu));
    CHECK(mu.map.is_surjective());
  }
}

TEST_CASE("subbimodule closure: empty, unit, kernel generator") {
  const AlgebraPtr a = dual_numbers();
  const Bimodule b = bifree_square(a);
  CHECK(sub_bimodule_closure({}, b).dim() == 0);

  const Bimodule r = regular_bimodule(a);
  CHECK(sub_bimodule_closure({unit_vec(2, 0, Q)}, r) == Subspace::full(2, Q));

  // d_mu x = x(x)1 - 1(x)x generates all of ker mu: (d_mu x).x = x(x)x
  Vec dx = zero_vec(4, Q);
  dx[2] = Scalar::one(Q);
  dx[1] = Scalar(-1, Q);
  const SubBimodule km = restrict_to_subbimodule(b, ker_mu(a));
  CHECK(km.module.dim() == 2);
  const Subspace closure = sub_bimodule_closure({km.subspace.coords(dx)}, km.module);
  CHECK(closure.dim() == 2);
}

TEST_CASE("closure is monotone, idempotent, and order-independent") {
  const AlgebraPtr a = m2();
  const Bimodule b = bifree_square(a);
  SplitMix64 rng(5);
  for (int iter = 0; iter < 5; ++iter) {
    std::vector<Vec> gens;
    for (int g = 0; g < 3; ++g) {
      Vec v = zero_vec(16, Q);
      for (auto& x : v) x = Scalar(rng.small_coeff(), Q);
      gens.push_back(v);
    }
    const Subspace c1 = sub_bimodule_closure(gens, b);
    CHECK(c1.contains(Subspace::span(gens, 16, Q)));
    // idempotent
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < c1.dim(); ++i) basis.push_back(c1.basis_vector(i));
    CHECK(sub_bimodule_closure(basis, b) == c1);
    // order independent
    std::reverse(gens.begin(), gens.end());
    CHECK(sub_bimodule_closure(gens, b) == c1);
  }
}

TEST_CASE("quotient bimodule: trivial, full, and the x(x)x line") {
  const AlgebraPtr a = dual_numbers();
  const SubBimodule km = restrict_to_subbimodule(bifree_square(a), ker_mu(a));

  const QuotientBimodule trivial = quotient_bimodule(km.module, Subspace::zero(2, Q));
  CHECK(trivial.module.dim() == 2);
  CHECK(trivial.projection.map.matrix().is_identity());

  CHECK(quotient_bimodule(km.module, Subspace::full(2, Q)).module.dim() == 0);

  // x(x)x spans a subbimodule of ker mu
  Vec xx = zero_vec(4, Q);
  xx[3] = Scalar::one(Q);
  const Subspace line = Subspace::span({km.subspace.coords(xx)}, 2, Q);
  const QuotientBimodule q = quotient_bimodule(km.module, line);
  CHECK(q.module.dim() == 1);
  CHECK(check_bimodule(q.module).ok);
  CHECK(verify_module_map(q.projection));
  CHECK(kernel(q.projection.map) == line);

  // a line that is not action-invariant is rejected: span{x (x) 1} in R (x) R
  CHECK_THROWS_AS(
      quotient_bimodule(bifree_square(a), Subspace::span({unit_vec(4, 2, Q)}, 4, Q)),
      math_error);
}

TEST_CASE("module map solver: endomorphisms of the regular module") {
  for (const AlgebraPtr& a : {dual_numbers(), m2()}) {
    const Bimodule r = regular_bimodule(a);
    const Subspace right_maps = solve_module_maps(r, r, MapKind::right);
    CHECK(right_maps.dim() == a->dim());  // exactly the left multiplications
    for (std::size_t i = 0; i < a->dim(); ++i)
      CHECK(right_maps.contains(a->left_mult(i).vectorized()));
    const Subspace bi_maps = solve_module_maps(r, r, MapKind::bi);
    // bimodule endomorphisms of R = multiplications by central elements
    CHECK(bi_maps.dim() == center(*a).dim());
  }
}

TEST_CASE("module map solver: bifree endomorphisms contain the identity") {
  const AlgebraPtr a = dual_numbers();
  const Bimodule b = bifree_square(a);
  const Subspace maps = solve_module_maps(b, b, MapKind::bi);
  CHECK(maps.contains(Matrix::identity(4, Q).vectorized()));
}

TEST_CASE("module map solver: right maps from ker mu to R") {
  const AlgebraPtr a = dual_numbers();
  const SubBimodule km = restrict_to_subbimodule(bifree_square(a), ker_mu(a));
  const Subspace maps = solve_module_maps(km.module, regular_bimodule(a), MapKind::right);
  CHECK(maps.dim() == 2);  // phi(e1) = p determines phi(e1.x) = p x
}

TEST_CASE("splitting search: mu has one-sided sections everywhere") {
  for (const AlgebraPtr& a : {dual_numbers(), m2(), cyclic3()}) {
    const BimoduleMap mu = mu_bimodule_map(a);
    const auto left = find_splitting(mu, MapKind::left);
    REQUIRE(left);
    CHECK((mu.map * left->map).matrix().is_identity());
    CHECK(verify_module_map(*left));
    const auto right = find_splitting(mu, MapKind::right);
    REQUIRE(right);
    CHECK((mu.map * right->map).matrix().is_identity());
    CHECK(verify_module_map(*right));
  }
  // r |-> r (x) 1 is itself a valid left section
  const AlgebraPtr a = dual_numbers();
  const BimoduleMap mu = mu_bimodule_map(a);
  Matrix sec(4, 2, Q);
  sec.at(0, 0) = sec.at(2, 1) = Scalar::one(Q);  // 1 -> 1(x)1, x -> x(x)1
  const BimoduleMap candidate{mu.target, mu.source, LinearMap(sec), MapKind::left};
  CHECK((mu.map * candidate.map).matrix().is_identity());
  CHECK(verify_module_map(candidate));
}

TEST_CASE("splitting search: bimodule sections certify separability") {
  // nilpotents: no bimodule section
  for (std::size_t m : {2u, 3u}) {
    const AlgebraPtr a = std::make_shared<Algebra>(truncated_polynomial_algebra(m, Q));
    CHECK_FALSE(find_splitting(mu_bimodule_map(a), MapKind::bi));
  }
  // M_2 and Q[Z_3]: a separability idempotent exists
  for (const AlgebraPtr& a : {m2(), cyclic3()}) {
    const BimoduleMap mu = mu_bimodule_map(a);
    const auto bi = find_splitting(mu, MapKind::bi);
    REQUIRE(bi);
    CHECK(verify_module_map(*bi));
    const Vec e = bi->map(a->unit());  // the idempotent mu_0(1)
    CHECK(mu.map(e) == a->unit());
    const Bimodule b = bifree_square(a);
    for (std::size_t i = 0; i < a->dim(); ++i)
      CHECK(b.act_left(i, e) == b.act_right(i, e));  // r.e = e.r
  }
  CHECK_THROWS_AS(find_splitting(BimoduleMap{regular_bimodule(dual_numbers()),
                                             regular_bimodule(dual_numbers()),
                                             LinearMap::zero(2, 2, Q), MapKind::bi},
                                 MapKind::bi),
                  math_error);
}

TEST_CASE("flip braiding recovers the standard free bimodule") {
  for (const AlgebraPtr& a : {dual_numbers(), m2()}) {
    for (std::size_t k : {1u, 2u}) {
      const BraidedModule bm =
          left_structure_from_braiding(a, flip(a, k, FreeModuleBraiding::Direction::r_tensor_v_to_v_tensor_r));
      CHECK(bm.report.valid());
      CHECK(bm.module == standard_free_bimodule(a, k));
    }
  }
}

TEST_CASE("the lambda family of braidings on dual numbers is always valid") {
  const AlgebraPtr a = dual_numbers();
  for (long lambda : {0L, 1L, 2L, -1L, 5L}) {
    const BraidedModule bm = left_structure_from_braiding(a, lambda_braiding(lambda));
    CHECK(bm.report.valid());
    CHECK(check_bimodule(bm.module).ok);
  }
}

TEST_CASE("a braiding that moves 1 (x) v is flagged at the unit axiom") {
  const AlgebraPtr a = dual_numbers();
  Matrix m(2, 2, Q);
  m.at(0, 0) = Scalar(2, Q);  // beta(1 (x) v) = 2 v (x) 1
  m.at(1, 1) = Scalar::one(Q);
  const FreeModuleBraiding bad{FreeModuleBraiding::Direction::r_tensor_v_to_v_tensor_r, 1,
                               LinearMap(std::move(m))};
  const BraidedModule bm = left_structure_from_braiding(a, bad);
  CHECK_FALSE(bm.report.unit_ok);
  CHECK_FALSE(bm.report.valid());
}

TEST_CASE("braiding pairs: flip with flip, and a non-inverse pair") {
  const AlgebraPtr a = dual_numbers();
  const auto alpha = flip(a, 1, FreeModuleBraiding::Direction::v_tensor_r_to_r_tensor_v);
  const auto beta = flip(a, 1, FreeModuleBraiding::Direction::r_tensor_v_to_v_tensor_r);
  const BraidingPairReport good = check_braiding_pair(a, alpha, beta);
  CHECK(good.mutually_inverse);
  CHECK(good.braidings_valid);
  CHECK(good.iso_ok);

  const BraidingPairReport bad = check_braiding_pair(a, alpha, lambda_braiding(2));
  CHECK_FALSE(bad.mutually_inverse);
}

TEST_CASE("commutation invariant holds exactly on valid bimodules") {
  const AlgebraPtr a = qplane();
  const Bimodule b = bifree_square(a);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK((b.left_action(i) * b.right_action(j) - b.right_action(j) * b.left_action(i))
                .is_zero());
}

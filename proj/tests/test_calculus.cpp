#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncalc/calculus.hpp"

using namespace ncalc;

namespace {

const Field Q = Field::rationals();

AlgebraPtr dual_numbers() {
  return std::make_shared<Algebra>(truncated_polynomial_algebra(2, Q));
}
AlgebraPtr tp3() { return std::make_shared<Algebra>(truncated_polynomial_algebra(3, Q)); }
AlgebraPtr m2() { return std::make_shared<Algebra>(matrix_algebra(2, Q)); }
AlgebraPtr cyclic3() { return std::make_shared<Algebra>(cyclic_group_algebra(3, Q)); }
AlgebraPtr qplane() {
  return std::make_shared<Algebra>(quantum_plane_algebra(Scalar(-1, Q), 2, Q));
}

Vec xx_tensor() {  // x (x) x in the dual-number tensor square
  Vec v = zero_vec(4, Q);
  v[3] = Scalar::one(Q);
  return v;
}

Vec dmu_x_ambient() {  // x (x) 1 - 1 (x) x
  Vec v = zero_vec(4, Q);
  v[2] = Scalar::one(Q);
  v[1] = Scalar(-1, Q);
  return v;
}

}  // namespace

TEST_CASE("universal calculus of the dual numbers") {
  const UniversalCalculus u = universal_kernel_calculus(dual_numbers());
  CHECK(u.fodc.omega.dim() == 2);
  CHECK(is_zero(u.d_ambient.matrix().col(0)));           // d(1) = 0
  CHECK(u.d_ambient.matrix().col(1) == dmu_x_ambient()); // d(x) = x(x)1 - 1(x)x
  CHECK(u.inclusion(u.fodc.d.matrix().col(1)) == dmu_x_ambient());
  const FodcReport rep = validate_fodc(u.fodc);
  CHECK(rep.ok());
  // Leibniz at (x,x) explicitly: d(x^2) = 0 = d(x).x + x.d(x)
  const Vec dx = u.fodc.d.matrix().col(1);
  CHECK(is_zero(add(u.fodc.omega.act_right(1, dx), u.fodc.omega.act_left(1, dx))));
}

TEST_CASE("universal calculus dimensions across the corpus") {
  for (const auto& [a, expected] :
       std::vector<std::pair<AlgebraPtr, std::size_t>>{
           {dual_numbers(), 2}, {tp3(), 6}, {m2(), 12}, {cyclic3(), 6}, {qplane(), 12}}) {
    const UniversalCalculus u = universal_kernel_calculus(a);
    CHECK(u.fodc.omega.dim() == expected);
    CHECK(validate_fodc(u.fodc).ok());
  }
}

TEST_CASE("the differential is outer: 1 (x) 1 never lies in ker mu") {
  for (const AlgebraPtr& a : {dual_numbers(), tp3(), m2(), cyclic3(), qplane()}) {
    const UniversalCalculus u = universal_kernel_calculus(a);
    const std::size_t n = a->dim();
    Vec one_one = zero_vec(n * n, Q);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) one_one[i * n + j] = a->unit()[i] * a->unit()[j];
    CHECK_FALSE(u.kernel_subspace.contains(one_one));
  }
}

TEST_CASE("barred presentations: differentials and canonical braidings") {
  const AlgebraPtr a = dual_numbers();
  const BarredPresentations bp = barred_presentations(a);
  // (D (x) 1)(x) = xbar (x) 1, basis of Rbar (x) R is {xbar(x)1, xbar(x)x}
  CHECK(bp.right_free.d.matrix().col(1) == unit_vec(2, 0, Q));
  // (1 (x) D)(x) = 1 (x) xbar, basis of R (x) Rbar is {1(x)xbar, x(x)xbar}
  CHECK(bp.left_free.d.matrix().col(1) == unit_vec(2, 0, Q));

  const LinearMap& chi = bp.left_action_braiding.map;
  const LinearMap& gamma = bp.right_action_braiding.map;
  CHECK((chi * gamma).matrix().is_identity());
  CHECK((gamma * chi).matrix().is_identity());
  CHECK(bp.left_free_to_square * gamma == bp.right_free_to_square);
}

TEST_CASE("braiding identities hold for every corpus algebra") {
  for (const AlgebraPtr& a : {dual_numbers(), tp3(), m2(), cyclic3(), qplane()}) {
    const BarredPresentations bp = barred_presentations(a);
    const LinearMap& chi = bp.left_action_braiding.map;
    const LinearMap& gamma = bp.right_action_braiding.map;
    CHECK((chi * gamma).matrix().is_identity());
    CHECK((gamma * chi).matrix().is_identity());
    CHECK(bp.left_free_to_square * gamma == bp.right_free_to_square);
    CHECK(validate_fodc(bp.right_free).ok());
    CHECK(validate_fodc(bp.left_free).ok());
  }
}

TEST_CASE("the three presentations are isomorphic calculi") {
  for (const AlgebraPtr& a : {dual_numbers(), m2(), qplane()}) {
    const UniversalCalculus u = universal_kernel_calculus(a);
    const BarredPresentations bp = barred_presentations(a);
    auto to_kernel = [&](const LinearMap& m) {
      Matrix out(u.kernel_subspace.dim(), m.domain_dim(), Q);
      for (std::size_t c = 0; c < m.domain_dim(); ++c)
        out.set_col(c, u.kernel_subspace.coords(m.matrix().col(c)));
      return LinearMap(out);
    };
    const LinearMap iso_r = to_kernel(bp.right_free_to_square);
    const LinearMap iso_l = to_kernel(bp.left_free_to_square);
    for (const auto& [iso, fodc] :
         std::vector<std::pair<LinearMap, const Fodc*>>{{iso_r, &bp.right_free},
                                                        {iso_l, &bp.left_free}}) {
      CHECK(verify_module_map(BimoduleMap{fodc->omega, u.fodc.omega, iso, MapKind::bi}));
      CHECK(iso.is_injective());
      CHECK(iso.is_surjective());
      CHECK(iso * fodc->d == u.fodc.d);
    }
    // gamma connects the two barred presentations as calculi
    CHECK(verify_module_map(BimoduleMap{bp.right_free.omega, bp.left_free.omega,
                                        bp.right_action_braiding.map, MapKind::bi}));
    CHECK(bp.right_action_braiding.map * bp.right_free.d == bp.left_free.d);
  }
}

TEST_CASE("quotient by nothing reproduces the universal calculus") {
  const UniversalCalculus u = universal_kernel_calculus(dual_numbers());
  const QuotientFodc q = quotient_fodc(u, {});
  CHECK(q.fodc.omega.dim() == 2);
  CHECK(q.projection.map.matrix().is_identity());
  CHECK(q.fodc.d == u.fodc.d);
}

TEST_CASE("quotient by x(x)x is the one-dimensional calculus with x.dx = 0") {
  const UniversalCalculus u = universal_kernel_calculus(dual_numbers());
  const QuotientFodc q = quotient_fodc(u, {xx_tensor()});
  CHECK(q.fodc.omega.dim() == 1);
  CHECK(validate_fodc(q.fodc).ok());
  const Vec dx = q.fodc.d.matrix().col(1);
  CHECK_FALSE(is_zero(dx));
  CHECK(is_zero(q.fodc.omega.act_left(1, dx)));
  CHECK(is_zero(q.fodc.omega.act_right(1, dx)));
}

TEST_CASE("quotient by everything is the zero calculus") {
  const UniversalCalculus u = universal_kernel_calculus(dual_numbers());
  const QuotientFodc q = quotient_fodc(u, {xx_tensor(), dmu_x_ambient()});
  CHECK(q.fodc.omega.dim() == 0);
  CHECK(validate_fodc(q.fodc).ok());  // vacuously generated
}

TEST_CASE("generators outside ker mu are rejected") {
  const UniversalCalculus u = universal_kernel_calculus(dual_numbers());
  CHECK_THROWS_AS(quotient_fodc(u, {unit_vec(4, 0, Q)}), math_error);
}

TEST_CASE("universal projection: identity, quotient recovery, and x(x)x image") {
  const UniversalCalculus u = universal_kernel_calculus(dual_numbers());
  const BimoduleMap pi_id = universal_projection(u, u.fodc);
  CHECK(pi_id.map.matrix().is_identity());

  const QuotientFodc q = quotient_fodc(u, {xx_tensor()});
  const BimoduleMap pi = universal_projection(u, q.fodc);
  CHECK(pi.map == q.projection.map);
  CHECK(verify_module_map(pi));
  CHECK(pi.map * u.fodc.d == q.fodc.d);
  // pi(x (x) x) = -d(x).x = 0 in this quotient
  CHECK(is_zero(pi.map(u.kernel_subspace.coords(xx_tensor()))));
}

TEST_CASE("a broken differential is caught by validation") {
  const AlgebraPtr a = dual_numbers();
  // 1-dim bimodule with x acting as zero; d(1) = w breaks both d(1)=0 and Leibniz
  std::vector<Matrix> acts{Matrix::identity(1, Q), Matrix(1, 1, Q)};
  const Bimodule omega(a, 1, acts, acts);
  Matrix d(1, 2, Q);
  d.at(0, 0) = Scalar::one(Q);
  const Fodc f{omega, LinearMap(std::move(d))};
  const FodcReport rep = validate_fodc(f);
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.unit_killed);
  bool at_unit_pair = false;
  for (const auto& p : rep.leibniz_failures)
    if (p.first == 0 && p.second == 0) at_unit_pair = true;
  CHECK(at_unit_pair);
}

TEST_CASE("inner differential by 1 (x) 1 recovers the universal calculus") {
  const AlgebraPtr a = dual_numbers();
  const Bimodule b = bifree_square(a);
  const InnerDifferential inner = inner_differential(b, unit_vec(4, 0, Q));
  CHECK(inner.candidate.d.matrix().col(1) == dmu_x_ambient());
  CHECK(inner.report.leibniz_failures.empty());
  CHECK(inner.report.unit_killed);
  CHECK_FALSE(inner.report.generated);  // commutators span only ker mu
  CHECK(inner.generated.subspace == kernel(mu_map(*a)));
  CHECK(validate_fodc(inner.generated_fodc).ok());
}

TEST_CASE("inner differential by a central element vanishes") {
  const AlgebraPtr a = dual_numbers();
  const Bimodule r = regular_bimodule(a);
  const InnerDifferential inner = inner_differential(r, a->unit());
  CHECK(inner.candidate.d.matrix().is_zero());
  CHECK_FALSE(inner.report.generated);
  CHECK(inner.generated.module.dim() == 0);
}

TEST_CASE("tensor square product multiplies slotwise") {
  const AlgebraPtr a = dual_numbers();
  // (x (x) 1) * (1 (x) x) = x (x) x
  Vec x1 = zero_vec(4, Q);
  x1[2] = Scalar::one(Q);
  Vec one_x = zero_vec(4, Q);
  one_x[1] = Scalar::one(Q);
  CHECK(tensor_square_product(*a, x1, one_x) == xx_tensor());
  CHECK(is_zero(tensor_square_product(*a, x1, x1)));  // x^2 = 0 in the first slot
}

TEST_CASE("Kaehler calculus dimensions: 1, 2, 0") {
  const KaehlerCalculus k2 = kaehler_calculus(dual_numbers());
  CHECK(k2.fodc.omega.dim() == 1);
  CHECK(k2.actions_coincide);
  CHECK(validate_fodc(k2.fodc).ok());
  CHECK(k2.kernel_square == Subspace::span({xx_tensor()}, 4, Q));

  const KaehlerCalculus k3 = kaehler_calculus(tp3());
  CHECK(k3.fodc.omega.dim() == 2);
  CHECK(k3.kernel_square.dim() == 4);
  CHECK(k3.actions_coincide);
  CHECK(validate_fodc(k3.fodc).ok());

  const KaehlerCalculus kc = kaehler_calculus(cyclic3());
  CHECK(kc.fodc.omega.dim() == 0);

  CHECK_THROWS_AS(kaehler_calculus(m2()), math_error);
}

TEST_CASE("the Kaehler quotient of the dual numbers kills exactly x(x)x") {
  const UniversalCalculus u = universal_kernel_calculus(dual_numbers());
  const QuotientFodc q = quotient_fodc(u, {xx_tensor()});
  const KaehlerCalculus k = kaehler_calculus(dual_numbers());
  CHECK(q.relations_ambient == k.kernel_square);
  CHECK(k.projection.map == q.projection.map);
}

TEST_CASE("calculus morphisms: identity, universality, and an empty set") {
  const UniversalCalculus u = universal_kernel_calculus(dual_numbers());
  const FodcMorphisms self = fodc_morphisms(u.fodc, u.fodc);
  CHECK(self.exists);
  CHECK(morphisms_contain(self, LinearMap::identity(2, Q)));

  const QuotientFodc q = quotient_fodc(u, {xx_tensor()});
  const FodcMorphisms to_quotient = fodc_morphisms(u.fodc, q.fodc);
  CHECK(to_quotient.exists);
  CHECK(morphisms_contain(to_quotient, universal_projection(u, q.fodc).map));

  // no morphism back: it would force x.dx = 0 in ker mu
  const FodcMorphisms back = fodc_morphisms(q.fodc, u.fodc);
  CHECK_FALSE(back.exists);
}

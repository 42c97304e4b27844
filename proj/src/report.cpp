#include "ncalc/report.hpp"

#include <sstream>

namespace ncalc {

std::vector<std::vector<Vec>> random_kernel_generator_sets(const UniversalCalculus& univ,
                                                           std::size_t count, SplitMix64& rng) {
  const Subspace& ker = univ.kernel_subspace;
  const Field& f = ker.field();
  std::vector<std::vector<Vec>> sets;
  for (std::size_t s = 0; s < count; ++s) {
    const std::size_t gens = 1 + rng.next() % 2;
    std::vector<Vec> set;
    for (std::size_t g = 0; g < gens; ++g) {
      Vec v = zero_vec(ker.ambient_dim(), f);
      for (std::size_t b = 0; b < ker.dim(); ++b) {
        const long c = rng.small_coeff();
        if (c == 0) continue;
        const Vec basis = ker.basis_vector(b);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += basis[i] * Scalar(c, f);
      }
      set.push_back(std::move(v));
    }
    sets.push_back(std::move(set));
  }
  return sets;
}

namespace {

std::string dim_str(std::size_t d) { return std::to_string(d); }

CheckResult check_universal_dimension(const Algebra& a, const UniversalCalculus& univ) {
  const std::size_t n = a.dim();
  const bool pass = univ.fodc.omega.dim() == n * n - n;
  return {"universal calculus dimension",
          pass,
          "dim ker mu = " + dim_str(univ.fodc.omega.dim()) + ", expected n^2-n = " +
              dim_str(n * n - n)};
}

CheckResult check_universal_valid(const UniversalCalculus& univ) {
  const FodcReport rep = validate_fodc(univ.fodc);
  return {"universal calculus axioms", rep.ok(),
          rep.ok() ? "Leibniz, generation and d(1)=0 hold" : "axioms violated"};
}

CheckResult check_presentations(const Algebra&, const UniversalCalculus& univ,
                                const BarredPresentations& bp) {
  bool pass = true;
  std::ostringstream detail;
  const LinearMap& chi = bp.left_action_braiding.map;
  const LinearMap& gamma = bp.right_action_braiding.map;
  if (!(chi * gamma).matrix().is_identity() || !(gamma * chi).matrix().is_identity()) {
    pass = false;
    detail << "canonical braidings are not mutually inverse; ";
  }
  if (!(bp.left_free_to_square * gamma == bp.right_free_to_square)) {
    pass = false;
    detail << "T . gamma != I; ";
  }
  // both insertions restrict to calculus isomorphisms onto ker mu
  const Field& f = univ.fodc.omega.field();
  auto to_kernel = [&](const LinearMap& m) {
    Matrix out(univ.kernel_subspace.dim(), m.domain_dim(), f);
    for (std::size_t c = 0; c < m.domain_dim(); ++c)
      out.set_col(c, univ.kernel_subspace.coords(m.matrix().col(c)));
    return LinearMap(out);
  };
  const LinearMap iso_right = to_kernel(bp.right_free_to_square);
  const LinearMap iso_left = to_kernel(bp.left_free_to_square);
  BimoduleMap right_map{bp.right_free.omega, univ.fodc.omega, iso_right, MapKind::bi};
  BimoduleMap left_map{bp.left_free.omega, univ.fodc.omega, iso_left, MapKind::bi};
  for (const auto* m : {&right_map, &left_map}) {
    if (!verify_module_map(*m) || !m->map.is_injective() || !m->map.is_surjective()) pass = false;
  }
  if (!(iso_right * bp.right_free.d == univ.fodc.d)) pass = false;
  if (!(iso_left * bp.left_free.d == univ.fodc.d)) pass = false;
  if (!(gamma * bp.right_free.d == bp.left_free.d)) pass = false;
  if (pass) detail << "three presentations pairwise isomorphic; T.gamma = I";
  return {"universal presentations", pass, detail.str()};
}

CheckResult check_random_quotients(const UniversalCalculus& univ, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const auto sets = random_kernel_generator_sets(univ, 20, rng);
  std::size_t ok = 0;
  for (const auto& gens : sets) {
    QuotientFodc q = quotient_fodc(univ, gens);
    const FodcReport rep = validate_fodc(q.fodc);
    if (!rep.ok()) continue;
    BimoduleMap pi = universal_projection(univ, q.fodc);
    if (!pi.map.is_surjective()) continue;
    if (!(pi.map * univ.fodc.d == q.fodc.d)) continue;
    // the universal projection must agree with the quotient construction
    if (!(pi.map == q.projection.map)) continue;
    ++ok;
  }
  const bool pass = ok == sets.size();
  return {"random quotient calculi", pass,
          dim_str(ok) + "/" + dim_str(sets.size()) + " seeded quotients valid with exact pi"};
}

CheckResult check_cartan_pairs(const UniversalCalculus& univ, std::uint64_t seed) {
  std::size_t ok = 0, total = 0;
  auto validate_one = [&](const Fodc& f) {
    ++total;
    const CartanFromFodc cf = cartan_from_fodc(f, Side::right);
    const CartanReport rep = validate_cartan_pair(cf.pair);
    if (rep.ok()) ++ok;
  };
  validate_one(univ.fodc);
  SplitMix64 rng(seed);
  for (const auto& gens : random_kernel_generator_sets(univ, 20, rng))
    validate_one(quotient_fodc(univ, gens).fodc);
  const bool pass = ok == total;
  return {"vector fields of calculi", pass,
          dim_str(ok) + "/" + dim_str(total) + " dual pairs satisfy the action axioms"};
}

CheckResult check_universal_cartan(AlgebraPtr a) {
  const UniversalCartan uc = universal_cartan(a);
  const std::size_t n = a->dim();
  bool pass = uc.end0.dim() == n * (n - 1) && uc.kernel_dual.dim() == uc.end0.dim() &&
              uc.kernel_iso_ok && uc.barred_iso_ok;
  const CartanReport rep = validate_cartan_pair(uc.pair);
  pass = pass && rep.ok();
  return {"universal vector fields", pass,
          "dim End_0 = " + dim_str(uc.end0.dim()) + ", kernel-dual and barred-dual isomorphisms " +
              (pass ? "verified" : "FAILED")};
}

CheckResult check_splitting_decomposition(AlgebraPtr a) {
  const UniversalSplitting us = universal_splitting(a);
  bool pass = us.left_decomposition_identity && us.right_decomposition_identity &&
              us.image_project_left_is_end0 && us.image_project_right_is_end0 && us.left_exact &&
              us.right_exact;
  bool pl_left = false;
  for (const auto& e : us.table)
    if (e.map_name == "project off L_{B(1)}" && e.left_ok) pl_left = true;
  pass = pass && pl_left;
  return {"endomorphism decompositions", pass,
          std::string("B = (B - L_{B(1)}) + L_{B(1)} and mirror; exactness ") +
              (pass ? "verified" : "FAILED")};
}

CheckResult check_mu_sections(AlgebraPtr a) {
  const BimoduleMap mu = mu_bimodule_map(a);
  const auto left = find_splitting(mu, MapKind::left);
  const auto right = find_splitting(mu, MapKind::right);
  const auto bi = find_splitting(mu, MapKind::bi);
  bool pass = left.has_value() && right.has_value();
  if (left && !((mu.map * left->map).matrix().is_identity() && verify_module_map(*left)))
    pass = false;
  std::ostringstream detail;
  detail << "left/right sections found; bimodule section: " << (bi ? "exists" : "none");
  return {"multiplication splitting search", pass, detail.str()};
}

CheckResult check_kaehler(AlgebraPtr a) {
  if (!is_commutative(*a))
    return {"Kaehler calculus", true, "skipped (algebra not commutative)"};
  const KaehlerCalculus kc = kaehler_calculus(a);
  const FodcReport rep = validate_fodc(kc.fodc);
  bool pass = rep.ok() && kc.actions_coincide;
  const Subspace ders = derivations(*a);
  const CartanFromFodc cf = cartan_from_fodc(kc.fodc, Side::right);
  pass = pass && validate_cartan_pair(cf.pair).ok();
  const Subspace action_image = image(cf.pair.action);
  pass = pass && action_image == ders;
  return {"Kaehler calculus", pass,
          "dim = " + dim_str(kc.fodc.omega.dim()) + ", vector fields match derivations (dim " +
              dim_str(ders.dim()) + ")"};
}

CheckResult check_duality_functor(const UniversalCalculus& univ, std::uint64_t seed) {
  bool pass = true;
  SplitMix64 rng(seed + 1);
  const auto sets = random_kernel_generator_sets(univ, 2, rng);
  // nested quotients: G1 and G1 union G2
  std::vector<Vec> g1 = sets[0];
  std::vector<Vec> g2 = g1;
  g2.insert(g2.end(), sets[1].begin(), sets[1].end());
  const QuotientFodc q1 = quotient_fodc(univ, g1);
  const QuotientFodc q2 = quotient_fodc(univ, g2);
  const BimoduleMap pi1 = universal_projection(univ, q1.fodc);
  const BimoduleMap pi2 = universal_projection(univ, q2.fodc);
  const FodcMorphisms ms = fodc_morphisms(q1.fodc, q2.fodc);
  if (!ms.exists) return {"duality functor", false, "no mediating morphism found"};
  BimoduleMap l12{q1.fodc.omega, q2.fodc.omega, ms.particular, MapKind::bi};
  if (!(l12.map * pi1.map == pi2.map)) pass = false;

  const DualModule du = right_dual(univ.fodc.omega);
  const DualModule d1 = right_dual(q1.fodc.omega);
  const DualModule d2 = right_dual(q2.fodc.omega);
  const BimoduleMap t1 = transpose_map(pi1, d1, du);
  const BimoduleMap t12 = transpose_map(l12, d2, d1);
  const BimoduleMap t2 = transpose_map(pi2, d2, du);
  if (!t1.map.is_injective() || !t2.map.is_injective()) pass = false;  // transposed surjections
  if (!(t1.map * t12.map == t2.map)) pass = false;                      // contravariance
  if (!verify_module_map(t1) || !verify_module_map(t12) || !verify_module_map(t2)) pass = false;
  if (!check_pairing_adjunctions(du) || !check_pairing_adjunctions(left_dual(univ.fodc.omega)))
    pass = false;
  BimoduleMap idm{univ.fodc.omega, univ.fodc.omega,
                  LinearMap::identity(univ.fodc.omega.dim(), univ.fodc.omega.field()),
                  MapKind::bi};
  if (!(transpose_map(idm, du, du).map.matrix().is_identity())) pass = false;
  return {"duality functor", pass,
          pass ? "transposes injective, contravariant, adjunctions hold" : "FAILED"};
}

CheckResult check_braidings(AlgebraPtr a, const BarredPresentations& bp) {
  bool pass = true;
  // flip braiding on one generator is always a valid structure
  const std::size_t n = a->dim();
  const Field& f = a->field();
  Matrix flip(n, n, f);
  for (std::size_t i = 0; i < n; ++i) flip.at(i, i) = Scalar::one(f);
  FreeModuleBraiding flip_b{FreeModuleBraiding::Direction::r_tensor_v_to_v_tensor_r, 1,
                            LinearMap(flip)};
  if (!left_structure_from_braiding(a, flip_b).report.valid()) pass = false;
  const BraidingPairReport pair =
      check_braiding_pair(a, bp.right_action_braiding, bp.left_action_braiding);
  if (!pair.mutually_inverse || !pair.braidings_valid || !pair.iso_ok) pass = false;
  return {"braidings", pass,
          pass ? "flip valid; canonical pair mutually inverse with verified isomorphism"
               : "FAILED"};
}

}  // namespace

ReportSuite run_report_suite(AlgebraPtr a, std::uint64_t seed) {
  ReportSuite suite;
  const AlgebraReport arep = validate_algebra(*a);
  suite.checks.push_back({"algebra axioms", arep.ok,
                          arep.ok ? "associative with two-sided unit"
                                  : arep.violations.front().describe(*a)});
  if (!arep.ok) return suite;

  const UniversalCalculus univ = universal_kernel_calculus(a);
  const BarredPresentations bp = barred_presentations(a);
  suite.checks.push_back(check_universal_dimension(*a, univ));
  suite.checks.push_back(check_universal_valid(univ));
  suite.checks.push_back(check_presentations(*a, univ, bp));
  suite.checks.push_back(check_random_quotients(univ, seed));
  suite.checks.push_back(check_cartan_pairs(univ, seed));
  suite.checks.push_back(check_universal_cartan(a));
  suite.checks.push_back(check_splitting_decomposition(a));
  suite.checks.push_back(check_mu_sections(a));
  suite.checks.push_back(check_kaehler(a));
  suite.checks.push_back(check_duality_functor(univ, seed));
  suite.checks.push_back(check_braidings(a, bp));
  return suite;
}

}  // namespace ncalc

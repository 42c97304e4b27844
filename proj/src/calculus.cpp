#include "ncalc/calculus.hpp"

namespace ncalc {

FodcReport validate_fodc(const Fodc& f) {
  FodcReport rep;
  const Algebra& a = *f.omega.algebra();
  const std::size_t n = a.dim();
  rep.bimodule = check_bimodule(f.omega);
  // Leibniz on basis pairs: d(e_i e_j) = d(e_i).e_j + e_i.d(e_j)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec lhs = f.d(a.mul_basis(i, j));
      const Vec rhs = add(f.omega.right_action(j).apply(f.d.matrix().col(i)),
                          f.omega.left_action(i).apply(f.d.matrix().col(j)));
      if (lhs != rhs) rep.leibniz_failures.push_back({i, j});
    }
  rep.unit_killed = is_zero(f.d(a.unit()));
  std::vector<Vec> dgens;
  for (std::size_t i = 0; i < n; ++i) dgens.push_back(f.d.matrix().col(i));
  const Subspace span = sub_bimodule_closure(dgens, f.omega);
  rep.generated_dim = span.dim();
  rep.generated = span.dim() == f.omega.dim();
  return rep;
}

UniversalCalculus universal_kernel_calculus(AlgebraPtr a) {
  const std::size_t n = a->dim();
  const Field& f = a->field();
  Bimodule bifree = bifree_square(a);
  const LinearMap mu = mu_map(*a);
  Subspace ker = kernel(mu);
  SubBimodule sub = restrict_to_subbimodule(bifree, ker);

  Matrix d_amb(n * n, n, f);
  for (std::size_t i = 0; i < n; ++i) {
    Vec v = zero_vec(n * n, f);
    for (std::size_t j = 0; j < n; ++j) {
      v[i * n + j] += a->unit()[j];  // e_i (x) 1
      v[j * n + i] -= a->unit()[j];  // 1 (x) e_i
    }
    d_amb.set_col(i, v);
  }
  Matrix d_sub(ker.dim(), n, f);
  for (std::size_t i = 0; i < n; ++i) d_sub.set_col(i, ker.coords(d_amb.col(i)));

  return UniversalCalculus{Fodc{sub.module, LinearMap(std::move(d_sub))}, std::move(bifree),
                           std::move(ker), sub.inclusion, LinearMap(std::move(d_amb))};
}

BarCoordinates bar_coordinates(const Algebra& a) {
  const std::size_t n = a.dim();
  const Field& f = a.field();
  auto [unit_row, pivots] = rref(Matrix::from_rows({a.unit()}, n, f));
  if (pivots.empty()) throw math_error("unit of the algebra is zero");
  const std::size_t p = pivots[0];
  std::vector<std::size_t> complement;
  for (std::size_t i = 0; i < n; ++i)
    if (i != p) complement.push_back(i);

  // D(v) = coordinates of v modulo the line k*1, in the complement basis
  const Scalar up_inv = a.unit()[p].inverse();
  Matrix proj(n - 1, n, f);
  for (std::size_t r = 0; r < n - 1; ++r) {
    proj.at(r, complement[r]) = Scalar::one(f);
    proj.at(r, p) = -(a.unit()[complement[r]] * up_inv);
  }
  Matrix sec(n, n - 1, f);
  for (std::size_t r = 0; r < n - 1; ++r) sec.at(complement[r], r) = Scalar::one(f);
  return BarCoordinates{p, std::move(complement), LinearMap(std::move(proj)),
                        LinearMap(std::move(sec))};
}

BarredPresentations barred_presentations(AlgebraPtr a) {
  const std::size_t n = a->dim();
  const std::size_t k = n - 1;
  const Field& f = a->field();
  BarCoordinates bar = bar_coordinates(*a);
  const Vec& u = a->unit();

  // left-action braiding on R (x) Rbar: e_i (x) vbar_a |-> D(e_i s)(x)1 - D(e_i)(x)s
  // with s the canonical representative of vbar_a
  Matrix chi(k * n, n * k, f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t va = 0; va < k; ++va) {
      const std::size_t s = bar.complement[va];
      Vec out = zero_vec(k * n, f);
      const Vec d_prod = bar.projection(a->mul_basis(i, s));
      const Vec d_i = bar.projection(unit_vec(n, i, f));
      for (std::size_t b = 0; b < k; ++b) {
        for (std::size_t j = 0; j < n; ++j) out[b * n + j] += d_prod[b] * u[j];
        out[b * n + s] -= d_i[b];
      }
      chi.set_col(i * k + va, out);
    }

  // right-action braiding on Rbar (x) R: vbar_a (x) e_j |-> 1(x)D(r e_j) - r(x)D(e_j)
  Matrix gamma(n * k, k * n, f);
  for (std::size_t va = 0; va < k; ++va)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t r = bar.complement[va];
      Vec out = zero_vec(n * k, f);
      const Vec d_prod = bar.projection(a->mul_basis(r, j));
      const Vec d_j = bar.projection(unit_vec(n, j, f));
      for (std::size_t b = 0; b < k; ++b) {
        for (std::size_t i = 0; i < n; ++i) out[i * k + b] += u[i] * d_prod[b];
        out[r * k + b] -= d_j[b];
      }
      gamma.set_col(va * n + j, out);
    }

  FreeModuleBraiding chi_braiding{FreeModuleBraiding::Direction::r_tensor_v_to_v_tensor_r, k,
                                  LinearMap(std::move(chi))};
  FreeModuleBraiding gamma_braiding{FreeModuleBraiding::Direction::v_tensor_r_to_r_tensor_v, k,
                                    LinearMap(std::move(gamma))};

  BraidedModule right_free = left_structure_from_braiding(a, chi_braiding);
  BraidedModule left_free = right_structure_from_braiding(a, gamma_braiding);
  if (!right_free.report.valid() || !left_free.report.valid())
    throw math_error("canonical braidings failed to induce module structures");

  // differentials: r |-> D(r)(x)1 on Rbar(x)R, r |-> 1(x)D(r) on R(x)Rbar
  Matrix d_right(k * n, n, f), d_left(n * k, n, f);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec d_i = bar.projection(unit_vec(n, i, f));
    Vec vr = zero_vec(k * n, f), vl = zero_vec(n * k, f);
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t j = 0; j < n; ++j) {
        vr[b * n + j] += d_i[b] * u[j];
        vl[j * k + b] += u[j] * d_i[b];
      }
    d_right.set_col(i, vr);
    d_left.set_col(i, vl);
  }

  // rbar (x) s |-> r(x)s - 1(x)rs
  Matrix ins_right(n * n, k * n, f);
  for (std::size_t va = 0; va < k; ++va)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t r = bar.complement[va];
      Vec out = zero_vec(n * n, f);
      out[r * n + j] += Scalar::one(f);
      const Vec prod = a->mul_basis(r, j);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l) out[i * n + l] -= u[i] * prod[l];
      ins_right.set_col(va * n + j, out);
    }

  // r (x) tbar |-> rt(x)1 - r(x)t
  Matrix ins_left(n * n, n * k, f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t va = 0; va < k; ++va) {
      const std::size_t t = bar.complement[va];
      Vec out = zero_vec(n * n, f);
      const Vec prod = a->mul_basis(i, t);
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t j = 0; j < n; ++j) out[l * n + j] += prod[l] * u[j];
      out[i * n + t] -= Scalar::one(f);
      ins_left.set_col(i * k + va, out);
    }

  return BarredPresentations{std::move(bar),
                             Fodc{right_free.module, LinearMap(std::move(d_right))},
                             Fodc{left_free.module, LinearMap(std::move(d_left))},
                             std::move(chi_braiding),
                             std::move(gamma_braiding),
                             LinearMap(std::move(ins_right)),
                             LinearMap(std::move(ins_left))};
}

QuotientFodc quotient_fodc(const UniversalCalculus& univ, const std::vector<Vec>& gens) {
  std::vector<Vec> gens_in_omega;
  for (const auto& g : gens) {
    if (!univ.kernel_subspace.contains(g))
      throw math_error("quotient_fodc: generator is not in ker mu");
    gens_in_omega.push_back(univ.kernel_subspace.coords(g));
  }
  const Subspace relations = sub_bimodule_closure(gens_in_omega, univ.fodc.omega);
  QuotientBimodule q = quotient_bimodule(univ.fodc.omega, relations);
  LinearMap d = q.projection.map * univ.fodc.d;

  std::vector<Vec> ambient_rows;
  for (std::size_t i = 0; i < relations.dim(); ++i)
    ambient_rows.push_back(univ.inclusion(relations.basis_vector(i)));
  Subspace relations_ambient =
      Subspace::span(ambient_rows, univ.bifree.dim(), univ.fodc.omega.field());

  return QuotientFodc{Fodc{q.module, std::move(d)}, relations, std::move(relations_ambient),
                      q.projection};
}

QuotientFodc quotient_fodc(AlgebraPtr a, const std::vector<Vec>& gens) {
  return quotient_fodc(universal_kernel_calculus(std::move(a)), gens);
}

BimoduleMap universal_projection(const UniversalCalculus& univ, const Fodc& f) {
  const FodcReport check = validate_fodc(f);
  if (!check.ok()) throw math_error("universal_projection: input is not a valid calculus");
  const Algebra& a = *f.omega.algebra();
  const std::size_t n = a.dim();
  const Field& fld = f.omega.field();

  // pi(sum r_i (x) s_i) = sum d(r_i).s_i on ker mu; expanding d_mu(r).s =
  // r(x)s - 1(x)rs shows this is the unique map with d = pi . d_mu.
  Matrix pi(f.omega.dim(), univ.kernel_subspace.dim(), fld);
  for (std::size_t b = 0; b < univ.kernel_subspace.dim(); ++b) {
    const Vec amb = univ.kernel_subspace.basis_vector(b);
    Vec out = zero_vec(f.omega.dim(), fld);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (amb[i * n + j].is_zero()) continue;
        const Vec term = f.omega.act_right(j, f.d.matrix().col(i));
        for (std::size_t l = 0; l < f.omega.dim(); ++l) out[l] += amb[i * n + j] * term[l];
      }
    pi.set_col(b, out);
  }
  BimoduleMap result{univ.fodc.omega, f.omega, LinearMap(std::move(pi)), MapKind::bi};
  if (!verify_module_map(result) || !result.map.is_surjective() ||
      !(result.map * univ.fodc.d == f.d))
    throw math_error("universal_projection: construction failed verification");
  return result;
}

InnerDifferential inner_differential(const Bimodule& m, const Vec& omega_element) {
  if (omega_element.size() != m.dim())
    throw math_error("inner_differential: element dimension mismatch");
  const Algebra& a = *m.algebra();
  const std::size_t n = a.dim();
  Matrix d(m.dim(), n, m.field());
  for (std::size_t i = 0; i < n; ++i)
    d.set_col(i, sub(m.act_left(i, omega_element), m.act_right(i, omega_element)));
  Fodc candidate{m, LinearMap(std::move(d))};
  FodcReport report = validate_fodc(candidate);

  std::vector<Vec> dgens;
  for (std::size_t i = 0; i < n; ++i) dgens.push_back(candidate.d.matrix().col(i));
  SubBimodule generated = restrict_to_subbimodule(m, sub_bimodule_closure(dgens, m));
  Matrix d_sub(generated.module.dim(), n, m.field());
  for (std::size_t i = 0; i < n; ++i)
    d_sub.set_col(i, generated.subspace.coords(candidate.d.matrix().col(i)));
  Fodc honest{generated.module, LinearMap(std::move(d_sub))};
  return InnerDifferential{std::move(candidate), std::move(report), std::move(generated),
                           std::move(honest)};
}

Vec tensor_square_product(const Algebra& a, const Vec& u, const Vec& v) {
  const std::size_t n = a.dim();
  if (u.size() != n * n || v.size() != n * n)
    throw math_error("tensor_square_product: dimension mismatch");
  Vec out = zero_vec(n * n, a.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (u[i * n + j].is_zero()) continue;
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
          if (v[p * n + q].is_zero()) continue;
          const Scalar coeff = u[i * n + j] * v[p * n + q];
          const Vec left = a.mul_basis(i, p);   // first slots multiply
          const Vec right = a.mul_basis(j, q);  // second slots multiply
          for (std::size_t k = 0; k < n; ++k) {
            if (left[k].is_zero()) continue;
            for (std::size_t l = 0; l < n; ++l) out[k * n + l] += coeff * left[k] * right[l];
          }
        }
    }
  return out;
}

KaehlerCalculus kaehler_calculus(AlgebraPtr a) {
  if (!is_commutative(*a)) throw math_error("kaehler_calculus: algebra is not commutative");
  UniversalCalculus univ = universal_kernel_calculus(a);
  const Subspace& ker = univ.kernel_subspace;
  std::vector<Vec> products;
  for (std::size_t i = 0; i < ker.dim(); ++i)
    for (std::size_t j = 0; j < ker.dim(); ++j)
      products.push_back(tensor_square_product(*a, ker.basis_vector(i), ker.basis_vector(j)));
  Subspace square_ambient = Subspace::span(products, univ.bifree.dim(), a->field());

  std::vector<Vec> square_in_omega;
  for (std::size_t i = 0; i < square_ambient.dim(); ++i)
    square_in_omega.push_back(ker.coords(square_ambient.basis_vector(i)));
  Subspace square_sub = Subspace::span(square_in_omega, ker.dim(), a->field());

  QuotientBimodule q = quotient_bimodule(univ.fodc.omega, square_sub);
  LinearMap d = q.projection.map * univ.fodc.d;
  bool coincide = true;
  for (std::size_t i = 0; i < a->dim(); ++i)
    if (!(q.module.left_action(i) == q.module.right_action(i))) coincide = false;
  return KaehlerCalculus{Fodc{q.module, std::move(d)}, std::move(square_ambient), coincide,
                         q.projection};
}

FodcMorphisms fodc_morphisms(const Fodc& f1, const Fodc& f2) {
  if (!f1.omega.algebra()->structurally_equal(*f2.omega.algebra()))
    throw math_error("fodc_morphisms: different algebras");
  const Field& fld = f1.omega.field();
  const std::size_t d1 = f1.omega.dim(), d2 = f2.omega.dim();
  const std::size_t n = f1.omega.algebra()->dim();

  Matrix sys(0, d2 * d1, fld);
  for (std::size_t i = 0; i < n; ++i) {
    sys = Matrix::vstack(sys, Matrix::kron(Matrix::identity(d2, fld),
                                           f1.omega.left_action(i).transposed()) -
                                  Matrix::kron(f2.omega.left_action(i),
                                               Matrix::identity(d1, fld)));
    sys = Matrix::vstack(sys, Matrix::kron(Matrix::identity(d2, fld),
                                           f1.omega.right_action(i).transposed()) -
                                  Matrix::kron(f2.omega.right_action(i),
                                               Matrix::identity(d1, fld)));
  }
  Vec rhs = zero_vec(sys.rows(), fld);
  // L . d_1 = d_2
  Matrix comp = Matrix::kron(Matrix::identity(d2, fld), f1.d.matrix().transposed());
  const Vec d2_vec = f2.d.matrix().vectorized();
  Matrix full = Matrix::vstack(sys, comp);
  rhs.insert(rhs.end(), d2_vec.begin(), d2_vec.end());

  auto sol = solve_affine(LinearMap(std::move(full)), rhs);
  if (!sol) {
    return FodcMorphisms{false, LinearMap(Matrix(d2, d1, fld)),
                         Subspace::zero(d2 * d1, fld)};
  }
  return FodcMorphisms{true, LinearMap(Matrix::from_vec(sol->particular, d2, d1, fld)),
                       std::move(sol->homogeneous)};
}

bool morphisms_contain(const FodcMorphisms& ms, const LinearMap& candidate) {
  if (!ms.exists) return false;
  const Vec diff = sub(candidate.matrix().vectorized(), ms.particular.matrix().vectorized());
  return ms.homogeneous.contains(diff);
}

}  // namespace ncalc

#include "ncalc/duality.hpp"

namespace ncalc {

namespace {

// Restriction of an ambient operator to an invariant subspace, in that
// subspace's canonical coordinates.
Matrix restrict_operator(const Matrix& op, const Subspace& s) {
  Matrix out(s.dim(), s.dim(), op.field());
  for (std::size_t b = 0; b < s.dim(); ++b)
    out.set_col(b, s.coords(op.apply(s.basis_vector(b))));
  return out;
}

// A |-> A . e_i (column extraction) as an n x n^2 matrix on vec(A).
Matrix column_extractor(std::size_t n, std::size_t i, const Field& f) {
  Matrix row(1, n, f);
  row.at(0, i) = Scalar::one(f);
  return Matrix::kron(Matrix::identity(n, f), row);
}

// A |-> A(1) as an n x n^2 matrix.
Matrix unit_evaluator(const Algebra& a) {
  Matrix row(1, a.dim(), a.field());
  for (std::size_t j = 0; j < a.dim(); ++j) row.at(0, j) = a.unit()[j];
  return Matrix::kron(Matrix::identity(a.dim(), a.field()), row);
}

// Columns vec(L_k) (resp. vec(R_k)): the element-to-multiplication-operator maps.
Matrix left_mult_table(const Algebra& a) {
  const std::size_t n = a.dim();
  Matrix m(n * n, n, a.field());
  for (std::size_t k = 0; k < n; ++k) m.set_col(k, a.left_mult(k).vectorized());
  return m;
}

Matrix right_mult_table(const Algebra& a) {
  const std::size_t n = a.dim();
  Matrix m(n * n, n, a.field());
  for (std::size_t k = 0; k < n; ++k) m.set_col(k, a.right_mult(k).vectorized());
  return m;
}

Subspace end0_subspace(const Algebra& a) { return kernel(LinearMap(unit_evaluator(a))); }

// End_0 with (r.A (.) r')(s) = r A(r's) - r A(r') s, in End_0 coordinates.
Bimodule end0_twisted_right(AlgebraPtr a, const Subspace& e0) {
  const std::size_t n = a->dim();
  const Field& f = a->field();
  const Matrix vl = left_mult_table(*a);
  const Matrix id = Matrix::identity(n, f);
  std::vector<Matrix> left, right;
  for (std::size_t i = 0; i < n; ++i) {
    left.push_back(restrict_operator(Matrix::kron(a->left_mult(i), id), e0));
    const Matrix op =
        Matrix::kron(id, a->left_mult(i).transposed()) - vl * column_extractor(n, i, f);
    right.push_back(restrict_operator(op, e0));
  }
  return Bimodule(std::move(a), e0.dim(), std::move(left), std::move(right));
}

// Mirror structure (r (.) A . r')(s) = A(sr) r' - s A(r) r'.
Bimodule end0_twisted_left(AlgebraPtr a, const Subspace& e0) {
  const std::size_t n = a->dim();
  const Field& f = a->field();
  const Matrix vr = right_mult_table(*a);
  const Matrix id = Matrix::identity(n, f);
  std::vector<Matrix> left, right;
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix op =
        Matrix::kron(id, a->right_mult(i).transposed()) - vr * column_extractor(n, i, f);
    left.push_back(restrict_operator(op, e0));
    right.push_back(restrict_operator(Matrix::kron(a->right_mult(i), id), e0));
  }
  return Bimodule(std::move(a), e0.dim(), std::move(left), std::move(right));
}

Bimodule dual_structures(Side side, const Bimodule& base, const Subspace& maps_space) {
  const Algebra& a = *base.algebra();
  const std::size_t n = a.dim(), m = base.dim(), k = maps_space.dim();
  const Field& f = a.field();
  std::vector<Matrix> left, right;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix L(k, k, f), R(k, k, f);
    for (std::size_t b = 0; b < k; ++b) {
      const Matrix phi = Matrix::from_vec(maps_space.basis_vector(b), n, m, f);
      Matrix lphi, rphi;
      if (side == Side::right) {
        lphi = a.left_mult(i) * phi;        // (r.phi)(x) = r phi(x)
        rphi = phi * base.left_action(i);   // (phi.r)(x) = phi(r.x)
      } else {
        lphi = phi * base.right_action(i);  // (r.xi)(x) = xi(x.r)
        rphi = a.right_mult(i) * phi;       // (xi.r)(x) = xi(x) r
      }
      L.set_col(b, maps_space.coords(lphi.vectorized()));
      R.set_col(b, maps_space.coords(rphi.vectorized()));
    }
    left.push_back(std::move(L));
    right.push_back(std::move(R));
  }
  return Bimodule(base.algebra(), k, std::move(left), std::move(right));
}

}  // namespace

LinearMap DualModule::functional(std::size_t i) const {
  return LinearMap(Matrix::from_vec(maps_space.basis_vector(i), base.algebra()->dim(), base.dim(),
                                    base.field()));
}

LinearMap DualModule::functional_from_coords(const Vec& dual_coords) const {
  return LinearMap(Matrix::from_vec(maps_space.from_coords(dual_coords), base.algebra()->dim(),
                                    base.dim(), base.field()));
}

Vec DualModule::eval(const Vec& dual_coords, const Vec& base_coords) const {
  return functional_from_coords(dual_coords)(base_coords);
}

DualModule right_dual(const Bimodule& m) {
  Subspace maps = solve_module_maps(m, regular_bimodule(m.algebra()), MapKind::right);
  Bimodule dual = dual_structures(Side::right, m, maps);
  return DualModule{Side::right, m, std::move(dual), std::move(maps)};
}

DualModule left_dual(const Bimodule& m) {
  Subspace maps = solve_module_maps(m, regular_bimodule(m.algebra()), MapKind::left);
  Bimodule dual = dual_structures(Side::left, m, maps);
  return DualModule{Side::left, m, std::move(dual), std::move(maps)};
}

bool check_pairing_adjunctions(const DualModule& d) {
  const Algebra& a = *d.base.algebra();
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t b = 0; b < d.dim(); ++b) {
      const Vec phi = unit_vec(d.dim(), b, a.field());
      for (std::size_t j = 0; j < d.base.dim(); ++j) {
        const Vec mj = unit_vec(d.base.dim(), j, a.field());
        const Vec pairing = d.eval(phi, mj);
        if (d.side == Side::right) {
          // <<r.phi|m>> = r <<phi|m>>
          if (d.eval(d.module.act_left(i, phi), mj) != a.mul(unit_vec(n, i, a.field()), pairing))
            return false;
          // <<phi|m.r>> = <<phi|m>> r
          if (d.eval(phi, d.base.act_right(i, mj)) != a.mul(pairing, unit_vec(n, i, a.field())))
            return false;
          // <<phi.r|m>> = <<phi|r.m>>
          if (d.eval(d.module.act_right(i, phi), mj) != d.eval(phi, d.base.act_left(i, mj)))
            return false;
        } else {
          // <<m|xi.r>> = <<m|xi>> r
          if (d.eval(d.module.act_right(i, phi), mj) != a.mul(pairing, unit_vec(n, i, a.field())))
            return false;
          // <<r.m|xi>> = r <<m|xi>>
          if (d.eval(phi, d.base.act_left(i, mj)) != a.mul(unit_vec(n, i, a.field()), pairing))
            return false;
          // <<m|r.xi>> = <<m.r|xi>>
          if (d.eval(d.module.act_left(i, phi), mj) != d.eval(phi, d.base.act_right(i, mj)))
            return false;
        }
      }
    }
  return true;
}

BimoduleMap transpose_map(const BimoduleMap& psi, const DualModule& dual_of_target,
                          const DualModule& dual_of_source) {
  const Field& f = psi.map.field();
  Matrix t(dual_of_source.dim(), dual_of_target.dim(), f);
  for (std::size_t b = 0; b < dual_of_target.dim(); ++b) {
    const Matrix composed = dual_of_target.functional(b).matrix() * psi.map.matrix();
    t.set_col(b, dual_of_source.maps_space.coords(composed.vectorized()));
  }
  MapKind kind = psi.kind == MapKind::bi
                     ? MapKind::bi
                     : (psi.kind == MapKind::right ? MapKind::left : MapKind::right);
  return BimoduleMap{dual_of_target.module, dual_of_source.module, LinearMap(std::move(t)), kind};
}

BimoduleMap transpose_map(const BimoduleMap& psi, Side side) {
  DualModule dt = side == Side::right ? right_dual(psi.target) : left_dual(psi.target);
  DualModule ds = side == Side::right ? right_dual(psi.source) : left_dual(psi.source);
  return transpose_map(psi, dt, ds);
}

DoubleDual double_dual(const Bimodule& m, Side side) {
  DualModule first = side == Side::right ? right_dual(m) : left_dual(m);
  DualModule second = side == Side::right ? left_dual(first.module) : right_dual(first.module);
  const Field& f = m.field();
  const std::size_t n = m.algebra()->dim();
  Matrix canonical(second.dim(), m.dim(), f);
  for (std::size_t j = 0; j < m.dim(); ++j) {
    Matrix ev(n, first.dim(), f);  // phi |-> phi(m_j)
    for (std::size_t b = 0; b < first.dim(); ++b) ev.set_col(b, first.functional(b).matrix().col(j));
    canonical.set_col(j, second.maps_space.coords(ev.vectorized()));
  }
  LinearMap cmap(std::move(canonical));
  const bool inj = cmap.is_injective();
  const bool bij = inj && cmap.is_surjective();
  return DoubleDual{std::move(first), std::move(second), std::move(cmap), inj, bij};
}

bool is_torsionless(const Bimodule& m, Side side) { return double_dual(m, side).torsionless; }
bool is_reflexive(const Bimodule& m, Side side) { return double_dual(m, side).reflexive; }

Matrix cartan_endo(const CartanPair& cp, const Vec& x_coords) {
  const std::size_t n = cp.x.algebra()->dim();
  return Matrix::from_vec(cp.action(x_coords), n, n, cp.x.field());
}

CartanReport validate_cartan_pair(const CartanPair& cp) {
  CartanReport rep;
  const Algebra& a = *cp.x.algebra();
  const std::size_t n = a.dim();
  const Field& f = a.field();
  const std::size_t dx = cp.x.dim();

  for (std::size_t b = 0; b < dx; ++b) {
    const Vec xb = unit_vec(dx, b, f);
    const Matrix endo = cartan_endo(cp, xb);
    if (!is_zero(endo.apply(a.unit()))) rep.unit_killed = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (cp.side == Side::right) {
        // (r.X)^(s) = r X^(s)
        const Matrix lhs = cartan_endo(cp, cp.x.act_left(i, xb));
        if (!(lhs == a.left_mult(i) * endo)) rep.action_linearity_failures.push_back({i, b});
      } else {
        // (Y.r)^(s) = Y^(s) r
        const Matrix lhs = cartan_endo(cp, cp.x.act_right(i, xb));
        if (!(lhs == a.right_mult(i) * endo)) rep.action_linearity_failures.push_back({i, b});
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Vec lhs = endo.apply(a.mul_basis(i, j));
        Vec rhs;
        if (cp.side == Side::right) {
          // X^(rs) = X^(r)s + (X.r)^(s)
          rhs = add(a.mul(endo.col(i), unit_vec(n, j, f)),
                    cartan_endo(cp, cp.x.act_right(i, xb)).col(j));
        } else {
          // Y^(rs) = r Y^(s) + (s.Y)^(r)
          rhs = add(a.mul(unit_vec(n, i, f), endo.col(j)),
                    cartan_endo(cp, cp.x.act_left(j, xb)).col(i));
        }
        if (lhs != rhs) {
          rep.twisted_leibniz_failures.push_back({i, j});
        }
      }
  }
  rep.injective = cp.action.is_injective();

  bool symmetric = true;
  for (std::size_t i = 0; i < n; ++i)
    if (!(cp.x.left_action(i) == cp.x.right_action(i))) symmetric = false;
  if (symmetric && is_commutative(a)) {
    bool ok = true;
    for (std::size_t b = 0; b < dx && ok; ++b) {
      const Matrix endo = cartan_endo(cp, unit_vec(dx, b, f));
      for (std::size_t i = 0; i < n && ok; ++i)
        for (std::size_t j = 0; j < n && ok; ++j) {
          const Vec lhs = endo.apply(a.mul_basis(i, j));
          const Vec rhs = add(a.mul(endo.col(i), unit_vec(n, j, f)),
                              a.mul(unit_vec(n, i, f), endo.col(j)));
          if (lhs != rhs) ok = false;
        }
    }
    rep.derivations_ok = ok;
  }
  return rep;
}

CartanFromFodc cartan_from_fodc(const Fodc& f, Side side) {
  const FodcReport check = validate_fodc(f);
  if (!check.ok()) throw math_error("cartan_from_fodc: input is not a valid calculus");
  DualModule dual = side == Side::right ? right_dual(f.omega) : left_dual(f.omega);
  const std::size_t n = f.omega.algebra()->dim();
  Matrix action(n * n, dual.dim(), f.omega.field());
  for (std::size_t b = 0; b < dual.dim(); ++b)
    action.set_col(b, (dual.functional(b).matrix() * f.d.matrix()).vectorized());
  CartanPair pair{side, dual.module, LinearMap(std::move(action))};
  return CartanFromFodc{std::move(pair), std::move(dual)};
}

Subspace derivations(const Algebra& a) {
  const std::size_t n = a.dim();
  const Field& f = a.field();
  Matrix sys(0, n * n, f);
  const Matrix id = Matrix::identity(n, f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // delta(e_i e_j) - delta(e_i) e_j - e_i delta(e_j) = 0 on vec(delta)
      Matrix prod_row(1, n, f);
      prod_row.set_row(0, a.mul_basis(i, j));
      Matrix block = Matrix::kron(id, prod_row);
      block = block - a.right_mult(j) * column_extractor(n, i, f);
      block = block - a.left_mult(i) * column_extractor(n, j, f);
      sys = Matrix::vstack(sys, block);
    }
  return kernel(LinearMap(std::move(sys)));
}

EndStructures end_structures(AlgebraPtr a) {
  const std::size_t n = a->dim();
  const Field& f = a->field();
  const Matrix id = Matrix::identity(n, f);

  std::vector<Matrix> lt_left, lt_right, rt_left, rt_right;
  for (std::size_t i = 0; i < n; ++i) {
    lt_left.push_back(Matrix::kron(a->left_mult(i), id));                 // r.A = L_r A
    lt_right.push_back(Matrix::kron(id, a->left_mult(i).transposed()));   // A*r = A L_r
    rt_left.push_back(Matrix::kron(id, a->right_mult(i).transposed()));   // r*A = A R_r
    rt_right.push_back(Matrix::kron(a->right_mult(i), id));               // A.r = R_r A
  }
  Bimodule as_right_dual(a, n * n, lt_left, lt_right);
  Bimodule as_left_dual(a, n * n, rt_left, rt_right);

  LinearMap left_embed(left_mult_table(*a));
  LinearMap right_embed(right_mult_table(*a));

  // L_{r' r r''} = r'.L_r * r'' and the R mirror, on basis triples
  bool left_ok = left_embed.is_injective();
  bool right_ok = right_embed.is_injective();
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r) {
        const Vec triple = a->mul(a->mul_basis(p, q), unit_vec(n, r, f));
        const Vec vlq = a->left_mult(q).vectorized();
        if (left_embed(triple) != as_right_dual.act_left(p, as_right_dual.act_right(r, vlq)))
          left_ok = false;
        const Vec vrq = a->right_mult(q).vectorized();
        if (right_embed(triple) != as_left_dual.act_left(p, as_left_dual.act_right(r, vrq)))
          right_ok = false;
      }

  Subspace left_image = image(left_embed);
  Subspace right_image = image(right_embed);
  Subspace inter = intersect(left_image, right_image);
  const Subspace z = center(*a);
  std::vector<Vec> center_ops;
  for (std::size_t b = 0; b < z.dim(); ++b) center_ops.push_back(left_embed(z.basis_vector(b)));
  const bool inter_is_center = inter == Subspace::span(center_ops, n * n, f);

  bool commute = true;
  const std::vector<const std::vector<Matrix>*> ops{&lt_left, &lt_right, &rt_left, &rt_right};
  for (std::size_t x = 0; x < 4 && commute; ++x)
    for (std::size_t y = x + 1; y < 4 && commute; ++y)
      for (std::size_t i = 0; i < n && commute; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (!((*ops[x])[i] * (*ops[y])[j] == (*ops[y])[j] * (*ops[x])[i])) {
            commute = false;
            break;
          }
        }

  Subspace e0 = end0_subspace(*a);

  // A <-> (r (x) r' |-> A(r) r') identifies End(R) with the right dual of the
  // bifree bimodule.
  DualModule bifree_dual = right_dual(bifree_square(a));
  Matrix iso(bifree_dual.dim(), n * n, f);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      Matrix phi(n, n * n, f);
      for (std::size_t j = 0; j < n; ++j) phi.set_col(l * n + j, a->mul_basis(k, j));
      iso.set_col(k * n + l, bifree_dual.maps_space.coords(phi.vectorized()));
    }
  LinearMap iso_map(std::move(iso));
  BimoduleMap iso_bm{as_right_dual, bifree_dual.module, iso_map, MapKind::bi};
  const bool iso_ok =
      iso_map.is_injective() && iso_map.is_surjective() && verify_module_map(iso_bm);

  return EndStructures{std::move(as_right_dual), std::move(as_left_dual), std::move(left_embed),
                       std::move(right_embed), left_ok, right_ok, std::move(left_image),
                       std::move(right_image), std::move(inter), inter_is_center, commute,
                       std::move(e0), std::move(iso_map), iso_ok};
}

UniversalCartan universal_cartan(AlgebraPtr a) {
  const Field& f = a->field();
  Subspace e0 = end0_subspace(*a);
  Bimodule x = end0_twisted_right(a, e0);
  LinearMap action(e0.basis().transposed());
  CartanPair pair{Side::right, x, std::move(action)};

  UniversalCalculus univ = universal_kernel_calculus(a);
  DualModule kd = right_dual(univ.fodc.omega);
  Matrix from_kd(e0.dim(), kd.dim(), f);
  for (std::size_t b = 0; b < kd.dim(); ++b) {
    const Matrix endo = kd.functional(b).matrix() * univ.fodc.d.matrix();
    from_kd.set_col(b, e0.coords(endo.vectorized()));
  }
  LinearMap from_kernel(std::move(from_kd));
  BimoduleMap kernel_iso{kd.module, pair.x, from_kernel, MapKind::bi};
  const bool kernel_ok = from_kernel.is_injective() && from_kernel.is_surjective() &&
                         verify_module_map(kernel_iso);

  BarredPresentations bp = barred_presentations(a);
  DualModule bd = right_dual(bp.right_free.omega);
  Matrix from_bd(e0.dim(), bd.dim(), f);
  for (std::size_t b = 0; b < bd.dim(); ++b) {
    const Matrix endo = bd.functional(b).matrix() * bp.right_free.d.matrix();
    from_bd.set_col(b, e0.coords(endo.vectorized()));
  }
  LinearMap from_barred(std::move(from_bd));
  BimoduleMap barred_iso{bd.module, pair.x, from_barred, MapKind::bi};
  const bool barred_ok = from_barred.is_injective() && from_barred.is_surjective() &&
                         verify_module_map(barred_iso);

  return UniversalCartan{std::move(pair), std::move(e0), std::move(kd), std::move(from_kernel),
                         kernel_ok, std::move(bd), std::move(from_barred), barred_ok};
}

namespace {

IntertwineEntry intertwine_entry(const std::string& name, const std::string& structures,
                                 const LinearMap& t, const Bimodule& src, const Bimodule& tgt) {
  IntertwineEntry e{name, structures, true, true};
  for (std::size_t i = 0; i < src.algebra()->dim(); ++i) {
    if (!(t.matrix() * src.left_action(i) == tgt.left_action(i) * t.matrix())) e.left_ok = false;
    if (!(t.matrix() * src.right_action(i) == tgt.right_action(i) * t.matrix())) e.right_ok = false;
  }
  return e;
}

}  // namespace

UniversalSplitting universal_splitting(AlgebraPtr a) {
  const std::size_t n = a->dim();
  const Field& f = a->field();
  UniversalSplitting out;

  const Matrix u_eval = unit_evaluator(*a);
  const Matrix vl = left_mult_table(*a);
  const Matrix vr = right_mult_table(*a);
  const Matrix id_end = Matrix::identity(n * n, f);

  out.eval_at_unit = LinearMap(u_eval);
  out.embed_left_value = LinearMap(vl * u_eval);
  out.project_left = LinearMap(id_end - vl * u_eval);
  out.left_section = LinearMap(vl);
  out.embed_right_value = LinearMap(vr * u_eval);
  out.project_right = LinearMap(id_end - vr * u_eval);
  out.right_section = LinearMap(vr);
  out.end0 = end0_subspace(*a);

  out.left_decomposition_identity =
      (out.project_left.matrix() + out.embed_left_value.matrix()).is_identity();
  out.right_decomposition_identity =
      (out.project_right.matrix() + out.embed_right_value.matrix()).is_identity();
  out.image_project_left_is_end0 = image(out.project_left) == out.end0;
  out.image_project_right_is_end0 = image(out.project_right) == out.end0;

  const LinearMap inclusion(out.end0.basis().transposed());
  const bool incl_inj = inclusion.is_injective();
  const bool eval_surj = out.eval_at_unit.is_surjective();
  const bool ker_is_e0 = kernel(out.eval_at_unit) == out.end0;
  const bool left_section_splits = (u_eval * vl).is_identity();
  const bool right_section_splits = (u_eval * vr).is_identity();
  out.left_exact = incl_inj && eval_surj && ker_is_e0 && left_section_splits;
  out.right_exact = incl_inj && eval_surj && ker_is_e0 && right_section_splits;

  // empirical intertwining table, per structure pair
  EndStructures es = end_structures(a);
  Bimodule e0_right = end0_twisted_right(a, out.end0);
  Bimodule e0_left = end0_twisted_left(a, out.end0);
  Bimodule reg = regular_bimodule(a);

  // projections expressed into End_0 coordinates
  Matrix pl_coords(out.end0.dim(), n * n, f);
  Matrix pr_coords(out.end0.dim(), n * n, f);
  for (std::size_t c = 0; c < n * n; ++c) {
    pl_coords.set_col(c, out.end0.coords(out.project_left.matrix().col(c)));
    pr_coords.set_col(c, out.end0.coords(out.project_right.matrix().col(c)));
  }

  out.table.push_back(intertwine_entry("include End0 in End", "twisted-right vs compose-L",
                                       inclusion, e0_right, es.as_right_dual));
  out.table.push_back(intertwine_entry("evaluate at 1", "compose-L vs regular", out.eval_at_unit,
                                       es.as_right_dual, reg));
  out.table.push_back(intertwine_entry("project off L_{B(1)}", "compose-L vs twisted-right",
                                       LinearMap(pl_coords), es.as_right_dual, e0_right));
  out.table.push_back(intertwine_entry("section r -> L_r", "regular vs compose-L",
                                       out.left_section, reg, es.as_right_dual));
  out.table.push_back(intertwine_entry("include End0 in End", "twisted-left vs compose-R",
                                       inclusion, e0_left, es.as_left_dual));
  out.table.push_back(intertwine_entry("evaluate at 1", "compose-R vs regular", out.eval_at_unit,
                                       es.as_left_dual, reg));
  out.table.push_back(intertwine_entry("project off R_{B(1)}", "compose-R vs twisted-left",
                                       LinearMap(pr_coords), es.as_left_dual, e0_left));
  out.table.push_back(intertwine_entry("section r -> R_r", "regular vs compose-R",
                                       out.right_section, reg, es.as_left_dual));
  return out;
}

ReconstructedFodc reconstruct_fodc(const CartanPair& cp) {
  if (cp.side != Side::right) throw math_error("reconstruct_fodc: expects a right Cartan pair");
  const CartanReport check = validate_cartan_pair(cp);
  if (!check.ok()) throw math_error("reconstruct_fodc: invalid Cartan pair");

  const AlgebraPtr& a = cp.x.algebra();
  const std::size_t n = a->dim();
  const Field& f = a->field();
  DualModule x_dual = left_dual(cp.x);

  // d(e_j) = the functional x |-> x^(e_j)
  Matrix d(x_dual.dim(), n, f);
  for (std::size_t j = 0; j < n; ++j) {
    Matrix fj(n, cp.x.dim(), f);
    for (std::size_t b = 0; b < cp.x.dim(); ++b)
      fj.set_col(b, cartan_endo(cp, unit_vec(cp.x.dim(), b, f)).col(j));
    d.set_col(j, x_dual.maps_space.coords(fj.vectorized()));
  }
  Fodc candidate{x_dual.module, LinearMap(std::move(d))};
  FodcReport report = validate_fodc(candidate);

  std::vector<Vec> dgens;
  for (std::size_t i = 0; i < n; ++i) dgens.push_back(candidate.d.matrix().col(i));
  SubBimodule generated =
      restrict_to_subbimodule(candidate.omega, sub_bimodule_closure(dgens, candidate.omega));
  Matrix d_sub(generated.module.dim(), n, f);
  for (std::size_t i = 0; i < n; ++i)
    d_sub.set_col(i, generated.subspace.coords(candidate.d.matrix().col(i)));
  Fodc honest{generated.module, LinearMap(std::move(d_sub))};

  // the dualized action arrow: End_0 dual -> X dual by precomposition
  Subspace e0 = end0_subspace(*a);
  Bimodule end0_mod = end0_twisted_right(a, e0);
  DualModule end0_dual = left_dual(end0_mod);
  Matrix action_in_e0(e0.dim(), cp.x.dim(), f);
  for (std::size_t c = 0; c < cp.x.dim(); ++c)
    action_in_e0.set_col(c, e0.coords(cp.action.matrix().col(c)));
  Matrix arrow(x_dual.dim(), end0_dual.dim(), f);
  for (std::size_t b = 0; b < end0_dual.dim(); ++b) {
    const Matrix composed = end0_dual.functional(b).matrix() * action_in_e0;
    arrow.set_col(b, x_dual.maps_space.coords(composed.vectorized()));
  }
  const bool arrow_surjective = LinearMap(arrow).is_surjective();

  return ReconstructedFodc{std::move(candidate), std::move(x_dual),   std::move(report),
                           std::move(generated), std::move(honest),   arrow_surjective};
}

}  // namespace ncalc

#include "ncalc/bimodule.hpp"

#include <sstream>

namespace ncalc {

Bimodule::Bimodule(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> left_actions,
                   std::vector<Matrix> right_actions)
    : alg_(std::move(algebra)), dim_(dim), left_(std::move(left_actions)),
      right_(std::move(right_actions)) {
  const std::size_t n = alg_->dim();
  if (left_.size() != n || right_.size() != n)
    throw math_error("bimodule needs one action matrix per algebra basis element");
  for (const auto& m : left_)
    if (m.rows() != dim_ || m.cols() != dim_) throw math_error("left action shape mismatch");
  for (const auto& m : right_)
    if (m.rows() != dim_ || m.cols() != dim_) throw math_error("right action shape mismatch");
}

Matrix Bimodule::left_action(const Vec& r) const {
  Matrix m(dim_, dim_, field());
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i].is_zero()) continue;
    m = m + left_[i] * r[i];
  }
  return m;
}

Matrix Bimodule::right_action(const Vec& r) const {
  Matrix m(dim_, dim_, field());
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i].is_zero()) continue;
    m = m + right_[i] * r[i];
  }
  return m;
}

std::string BimoduleViolation::describe(const Algebra& a) const {
  const auto& lb = a.labels();
  std::ostringstream os;
  switch (kind) {
    case Kind::left_unit: os << "left action of 1 is not the identity"; break;
    case Kind::right_unit: os << "right action of 1 is not the identity"; break;
    case Kind::left_mult:
      os << "left action not multiplicative at (" << lb[i] << "," << lb[j] << ")";
      break;
    case Kind::right_anti_mult:
      os << "right action not anti-multiplicative at (" << lb[i] << "," << lb[j] << ")";
      break;
    case Kind::commutation:
      os << "left/right actions do not commute at (" << lb[i] << "," << lb[j] << ")";
      break;
  }
  return os.str();
}

BimoduleReport check_bimodule(const Bimodule& m) {
  BimoduleReport rep;
  const Algebra& a = *m.algebra();
  const std::size_t n = a.dim();
  using K = BimoduleViolation::Kind;
  if (!m.left_action(a.unit()).is_identity()) rep.violations.push_back({K::left_unit, 0, 0});
  if (!m.right_action(a.unit()).is_identity()) rep.violations.push_back({K::right_unit, 0, 0});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec prod = a.mul_basis(i, j);
      if (!(m.left_action(i) * m.left_action(j) == m.left_action(prod)))
        rep.violations.push_back({K::left_mult, i, j});
      if (!(m.right_action(j) * m.right_action(i) == m.right_action(prod)))
        rep.violations.push_back({K::right_anti_mult, i, j});
      if (!(m.left_action(i) * m.right_action(j) == m.right_action(j) * m.left_action(i)))
        rep.violations.push_back({K::commutation, i, j});
    }
  rep.ok = rep.violations.empty();
  return rep;
}

Bimodule regular_bimodule(AlgebraPtr a) {
  std::vector<Matrix> left, right;
  const std::size_t n = a->dim();
  for (std::size_t i = 0; i < n; ++i) {
    left.push_back(a->left_mult(i));
    right.push_back(a->right_mult(i));
  }
  return Bimodule(std::move(a), n, std::move(left), std::move(right));
}

Bimodule bifree_square(AlgebraPtr a) {
  const std::size_t n = a->dim();
  const Matrix id = Matrix::identity(n, a->field());
  std::vector<Matrix> left, right;
  for (std::size_t i = 0; i < n; ++i) {
    left.push_back(Matrix::kron(a->left_mult(i), id));
    right.push_back(Matrix::kron(id, a->right_mult(i)));
  }
  return Bimodule(std::move(a), n * n, std::move(left), std::move(right));
}

Bimodule standard_free_bimodule(AlgebraPtr a, std::size_t gen_dim) {
  const std::size_t n = a->dim();
  const Matrix id = Matrix::identity(gen_dim, a->field());
  std::vector<Matrix> left, right;
  for (std::size_t i = 0; i < n; ++i) {
    left.push_back(Matrix::kron(id, a->left_mult(i)));
    right.push_back(Matrix::kron(id, a->right_mult(i)));
  }
  return Bimodule(std::move(a), gen_dim * n, std::move(left), std::move(right));
}

bool verify_module_map(const BimoduleMap& f) {
  if (!f.source.algebra()->structurally_equal(*f.target.algebra())) return false;
  const std::size_t n = f.source.algebra()->dim();
  const LinearMap& T = f.map;
  if (T.domain_dim() != f.source.dim() || T.codomain_dim() != f.target.dim()) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (f.kind != MapKind::right) {
      if (!(T.matrix() * f.source.left_action(i) == f.target.left_action(i) * T.matrix()))
        return false;
    }
    if (f.kind != MapKind::left) {
      if (!(T.matrix() * f.source.right_action(i) == f.target.right_action(i) * T.matrix()))
        return false;
    }
  }
  return true;
}

BimoduleMap mu_bimodule_map(AlgebraPtr a) {
  LinearMap mu = mu_map(*a);
  return BimoduleMap{bifree_square(a), regular_bimodule(a), std::move(mu), MapKind::bi};
}

Subspace sub_bimodule_closure(const std::vector<Vec>& gens, const Bimodule& m) {
  const std::size_t n = m.algebra()->dim();
  Subspace s = Subspace::span(gens, m.dim(), m.field());
  for (;;) {
    std::vector<Vec> next;
    for (std::size_t b = 0; b < s.dim(); ++b) {
      const Vec v = s.basis_vector(b);
      next.push_back(v);
      for (std::size_t i = 0; i < n; ++i) {
        next.push_back(m.act_left(i, v));
        next.push_back(m.act_right(i, v));
      }
    }
    Subspace grown = Subspace::span(next, m.dim(), m.field());
    if (grown.dim() == s.dim()) return s;
    s = grown;
  }
}

SubBimodule restrict_to_subbimodule(const Bimodule& m, const Subspace& s) {
  const std::size_t n = m.algebra()->dim();
  const std::size_t k = s.dim();
  std::vector<Matrix> left, right;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix L(k, k, m.field()), R(k, k, m.field());
    for (std::size_t j = 0; j < k; ++j) {
      const Vec lv = m.act_left(i, s.basis_vector(j));
      const Vec rv = m.act_right(i, s.basis_vector(j));
      if (!s.contains(lv) || !s.contains(rv))
        throw math_error("restrict_to_subbimodule: subspace is not action-invariant");
      L.set_col(j, s.coords(lv));
      R.set_col(j, s.coords(rv));
    }
    left.push_back(std::move(L));
    right.push_back(std::move(R));
  }
  LinearMap inclusion(s.basis().transposed());
  return SubBimodule{Bimodule(m.algebra(), k, std::move(left), std::move(right)), s,
                     std::move(inclusion)};
}

QuotientBimodule quotient_bimodule(const Bimodule& m, const Subspace& n) {
  const std::size_t na = m.algebra()->dim();
  for (std::size_t b = 0; b < n.dim(); ++b) {
    const Vec v = n.basis_vector(b);
    for (std::size_t i = 0; i < na; ++i) {
      if (!n.contains(m.act_left(i, v)) || !n.contains(m.act_right(i, v)))
        throw math_error("quotient_bimodule: subspace is not a subbimodule");
    }
  }
  QuotientSpace q = quotient(m.dim(), n);
  std::vector<Matrix> left, right;
  for (std::size_t i = 0; i < na; ++i) {
    left.push_back((q.projection * LinearMap(m.left_action(i)) * q.section).matrix());
    right.push_back((q.projection * LinearMap(m.right_action(i)) * q.section).matrix());
  }
  Bimodule quot(m.algebra(), q.dim, std::move(left), std::move(right));
  BimoduleMap pi{m, quot, q.projection, MapKind::bi};
  return QuotientBimodule{std::move(quot), std::move(pi), std::move(q)};
}

namespace {

// Rows expressing T . act_src - act_tgt . T = 0 on vec(T), T: dim_n x dim_m.
Matrix intertwine_rows(const Matrix& act_src, const Matrix& act_tgt, const Field& f) {
  const std::size_t dm = act_src.rows(), dn = act_tgt.rows();
  return Matrix::kron(Matrix::identity(dn, f), act_src.transposed()) -
         Matrix::kron(act_tgt, Matrix::identity(dm, f));
}

Matrix stack_intertwining_system(const Bimodule& m, const Bimodule& n, MapKind kind) {
  const Field& f = m.field();
  const std::size_t na = m.algebra()->dim();
  Matrix sys(0, n.dim() * m.dim(), f);
  for (std::size_t i = 0; i < na; ++i) {
    if (kind != MapKind::right)
      sys = Matrix::vstack(sys, intertwine_rows(m.left_action(i), n.left_action(i), f));
    if (kind != MapKind::left)
      sys = Matrix::vstack(sys, intertwine_rows(m.right_action(i), n.right_action(i), f));
  }
  return sys;
}

}  // namespace

Subspace solve_module_maps(const Bimodule& m, const Bimodule& n, MapKind kind) {
  return kernel(LinearMap(stack_intertwining_system(m, n, kind)));
}

LinearMap module_map_from_coords(const Subspace& maps_space, const Vec& coords, std::size_t dim_m,
                                 std::size_t dim_n) {
  const Vec v = maps_space.from_coords(coords);
  return LinearMap(Matrix::from_vec(v, dim_n, dim_m, maps_space.field()));
}

std::optional<BimoduleMap> find_splitting(const BimoduleMap& f, MapKind kind) {
  if (!f.map.is_surjective()) throw math_error("find_splitting: map is not surjective");
  const Field& fld = f.map.field();
  const std::size_t dm = f.source.dim(), dn = f.target.dim();
  // unknown s : target -> source, vec(s) of size dm*dn
  Matrix sys = stack_intertwining_system(f.target, f.source, kind);
  // f.map * s = id on the target
  Matrix comp = Matrix::kron(f.map.matrix(), Matrix::identity(dn, fld));
  Matrix full = Matrix::vstack(sys, comp);
  Vec rhs = zero_vec(sys.rows(), fld);
  const Vec id_vec = Matrix::identity(dn, fld).vectorized();
  rhs.insert(rhs.end(), id_vec.begin(), id_vec.end());
  auto sol = solve_affine(LinearMap(std::move(full)), rhs);
  if (!sol) return std::nullopt;
  LinearMap section(Matrix::from_vec(sol->particular, dm, dn, fld));
  return BimoduleMap{f.target, f.source, std::move(section), kind};
}

BraidedModule left_structure_from_braiding(AlgebraPtr a, const FreeModuleBraiding& braiding) {
  if (braiding.direction != FreeModuleBraiding::Direction::r_tensor_v_to_v_tensor_r)
    throw math_error("left_structure_from_braiding: wrong braiding direction");
  const std::size_t n = a->dim(), k = braiding.gen_dim;
  const Field& f = a->field();
  if (braiding.map.domain_dim() != n * k || braiding.map.codomain_dim() != k * n)
    throw math_error("braiding shape mismatch");

  Bimodule free = standard_free_bimodule(a, k);
  // Lambda_i column (a,j): braid e_i (x) v_a, then right-multiply by e_j.
  std::vector<Matrix> left;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix L(k * n, k * n, f);
    for (std::size_t va = 0; va < k; ++va) {
      const Vec braided = braiding.map(unit_vec(n * k, i * k + va, f));
      for (std::size_t j = 0; j < n; ++j)
        L.set_col(va * n + j, free.act_right(j, braided));
    }
    left.push_back(std::move(L));
  }
  std::vector<Matrix> right;
  for (std::size_t i = 0; i < n; ++i) right.push_back(free.right_action(i));
  Bimodule candidate(a, k * n, std::move(left), std::move(right));

  BraidingReport rep;
  // unit: braiding(1 (x) v) = v (x) 1
  for (std::size_t va = 0; va < k; ++va) {
    Vec one_v = zero_vec(n * k, f);
    for (std::size_t i = 0; i < n; ++i) one_v[i * k + va] = a->unit()[i];
    Vec expect = zero_vec(k * n, f);
    for (std::size_t i = 0; i < n; ++i) expect[va * n + i] = a->unit()[i];
    if (!(braiding.map(one_v) == expect)) {
      rep.unit_ok = false;
      rep.failures.push_back({va, va});
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!(candidate.left_action(i) * candidate.left_action(j) ==
            candidate.left_action(a->mul_basis(i, j)))) {
        rep.multiplicative_ok = false;
        rep.failures.push_back({i, j});
      }
    }
  return BraidedModule{std::move(candidate), std::move(rep)};
}

BraidedModule right_structure_from_braiding(AlgebraPtr a, const FreeModuleBraiding& braiding) {
  if (braiding.direction != FreeModuleBraiding::Direction::v_tensor_r_to_r_tensor_v)
    throw math_error("right_structure_from_braiding: wrong braiding direction");
  const std::size_t n = a->dim(), k = braiding.gen_dim;
  const Field& f = a->field();
  if (braiding.map.domain_dim() != k * n || braiding.map.codomain_dim() != n * k)
    throw math_error("braiding shape mismatch");

  // free left module R (x) V: left action L_i (x) I
  const Matrix idk = Matrix::identity(k, f);
  std::vector<Matrix> left;
  for (std::size_t i = 0; i < n; ++i) left.push_back(Matrix::kron(a->left_mult(i), idk));
  // right action column (i,a): e_i . braid(v_a (x) e_j)
  std::vector<Matrix> right;
  for (std::size_t j = 0; j < n; ++j) {
    Matrix R(n * k, n * k, f);
    for (std::size_t va = 0; va < k; ++va) {
      const Vec braided = braiding.map(unit_vec(k * n, va * n + j, f));
      for (std::size_t i = 0; i < n; ++i)
        R.set_col(i * k + va, Matrix::kron(a->left_mult(i), idk).apply(braided));
    }
    right.push_back(std::move(R));
  }
  Bimodule candidate(a, n * k, std::move(left), std::move(right));

  BraidingReport rep;
  for (std::size_t va = 0; va < k; ++va) {
    Vec v_one = zero_vec(k * n, f);
    for (std::size_t i = 0; i < n; ++i) v_one[va * n + i] = a->unit()[i];
    Vec expect = zero_vec(n * k, f);
    for (std::size_t i = 0; i < n; ++i) expect[i * k + va] = a->unit()[i];
    if (!(braiding.map(v_one) == expect)) {
      rep.unit_ok = false;
      rep.failures.push_back({va, va});
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!(candidate.right_action(j) * candidate.right_action(i) ==
            candidate.right_action(a->mul_basis(i, j)))) {
        rep.multiplicative_ok = false;
        rep.failures.push_back({i, j});
      }
    }
  return BraidedModule{std::move(candidate), std::move(rep)};
}

BraidingPairReport check_braiding_pair(AlgebraPtr a, const FreeModuleBraiding& alpha,
                                       const FreeModuleBraiding& beta) {
  BraidingPairReport rep;
  if (alpha.direction != FreeModuleBraiding::Direction::v_tensor_r_to_r_tensor_v ||
      beta.direction != FreeModuleBraiding::Direction::r_tensor_v_to_v_tensor_r ||
      alpha.gen_dim != beta.gen_dim)
    throw math_error("check_braiding_pair: directions/dimensions do not match");

  rep.mutually_inverse = (alpha.map * beta.map).matrix().is_identity() &&
                         (beta.map * alpha.map).matrix().is_identity();
  BraidedModule left_braided = left_structure_from_braiding(a, beta);
  BraidedModule right_braided = right_structure_from_braiding(a, alpha);
  rep.braidings_valid = left_braided.report.valid() && right_braided.report.valid();
  if (!rep.mutually_inverse || !rep.braidings_valid) return rep;

  BimoduleMap iso{left_braided.module, right_braided.module, alpha.map, MapKind::bi};
  rep.iso_ok = verify_module_map(iso) && iso.map.is_injective() && iso.map.is_surjective();
  rep.iso = std::move(iso);
  return rep;
}

}  // namespace ncalc

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncalc/algebra.hpp"

namespace ncalc {

// A two-sided module over an algebra, by one left- and one right-action
// matrix per algebra basis element.
//
// Tensor index conventions used throughout:
//   R (x) R : e_i (x) e_j at i*n + j
//   V (x) R : v_a (x) e_i at a*n + i
//   R (x) V : e_i (x) v_a at i*k + a
class Bimodule {
public:
  Bimodule(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> left_actions,
           std::vector<Matrix> right_actions);

  const AlgebraPtr& algebra() const { return alg_; }
  std::size_t dim() const { return dim_; }
  const Field& field() const { return alg_->field(); }

  const Matrix& left_action(std::size_t i) const { return left_[i]; }
  const Matrix& right_action(std::size_t i) const { return right_[i]; }
  Matrix left_action(const Vec& r) const;   // linear extension
  Matrix right_action(const Vec& r) const;

  Vec act_left(std::size_t i, const Vec& m) const { return left_[i].apply(m); }
  Vec act_right(std::size_t i, const Vec& m) const { return right_[i].apply(m); }

  friend bool operator==(const Bimodule& a, const Bimodule& b) {
    return a.dim_ == b.dim_ && a.left_ == b.left_ && a.right_ == b.right_ &&
           a.alg_->structurally_equal(*b.alg_);
  }

private:
  AlgebraPtr alg_;
  std::size_t dim_;
  std::vector<Matrix> left_, right_;
};

struct BimoduleViolation {
  enum class Kind { left_unit, right_unit, left_mult, right_anti_mult, commutation };
  Kind kind;
  std::size_t i = 0, j = 0;
  std::string describe(const Algebra& a) const;
};

struct BimoduleReport {
  bool ok = true;
  std::vector<BimoduleViolation> violations;
};

BimoduleReport check_bimodule(const Bimodule& m);

// R as a bimodule over itself.
Bimodule regular_bimodule(AlgebraPtr a);
// R (x) R with r.(a (x) b).r' = ra (x) br'.
Bimodule bifree_square(AlgebraPtr a);
// V (x) R with r.(v (x) s).r' = v (x) rsr' (the flip-braiding structure).
Bimodule standard_free_bimodule(AlgebraPtr a, std::size_t gen_dim);

// mu as a bimodule map R (x) R -> R.
enum class MapKind { left, right, bi };

struct BimoduleMap {
  Bimodule source;
  Bimodule target;
  LinearMap map;
  MapKind kind;
};

// Checks the intertwining conditions of the stated kind on all basis elements.
bool verify_module_map(const BimoduleMap& f);

BimoduleMap mu_bimodule_map(AlgebraPtr a);

// Smallest subspace containing the generators and closed under both actions.
Subspace sub_bimodule_closure(const std::vector<Vec>& gens, const Bimodule& m);

// A subbimodule realized on the canonical coordinates of an invariant
// subspace. Throws if the subspace is not action-invariant.
struct SubBimodule {
  Bimodule module;
  Subspace subspace;
  LinearMap inclusion;  // subspace coords -> ambient coords
};
SubBimodule restrict_to_subbimodule(const Bimodule& m, const Subspace& s);

struct QuotientBimodule {
  Bimodule module;
  BimoduleMap projection;  // kind = bi, surjective, kernel = the subbimodule
  QuotientSpace coords;
};
QuotientBimodule quotient_bimodule(const Bimodule& m, const Subspace& n);

// All module maps M -> N of the given kind, as a subspace of the
// (dim N) x (dim M) matrix space (row-major vectorization).
Subspace solve_module_maps(const Bimodule& m, const Bimodule& n, MapKind kind);
// The i-th canonical basis solution as a linear map M -> N.
LinearMap module_map_from_coords(const Subspace& maps_space, const Vec& coords, std::size_t dim_m,
                                 std::size_t dim_n);

// A section s with f . s = id and the requested intertwining; nullopt is a
// certificate that the affine system has no solution.
std::optional<BimoduleMap> find_splitting(const BimoduleMap& f, MapKind kind);

// A braiding on a free module with generator space of dimension gen_dim.
struct FreeModuleBraiding {
  enum class Direction {
    r_tensor_v_to_v_tensor_r,  // gives a left structure on V (x) R
    v_tensor_r_to_r_tensor_v,  // gives a right structure on R (x) V
  };
  Direction direction;
  std::size_t gen_dim;
  LinearMap map;  // n*k x k*n (or k*n x n*k) per the index conventions above
};

struct BraidingReport {
  bool unit_ok = true;            // braiding fixes 1 (x) v = v (x) 1
  bool multiplicative_ok = true;  // induced action is an algebra action
  std::vector<std::pair<std::size_t, std::size_t>> failures;
  bool valid() const { return unit_ok && multiplicative_ok; }
};

struct BraidedModule {
  Bimodule module;
  BraidingReport report;
};

// Builds the candidate bimodule on V (x) R whose left action comes from the
// braiding R (x) V -> V (x) R, and checks it is a genuine action.
BraidedModule left_structure_from_braiding(AlgebraPtr a, const FreeModuleBraiding& braiding);
// Dual construction: right action on R (x) V from a braiding V (x) R -> R (x) V.
BraidedModule right_structure_from_braiding(AlgebraPtr a, const FreeModuleBraiding& braiding);

struct BraidingPairReport {
  bool mutually_inverse = false;
  bool braidings_valid = false;
  std::optional<BimoduleMap> iso;  // left-braided V(x)R -> right-braided R(x)V
  bool iso_ok = false;
};

// Tests alpha and beta for mutual inversion and, when they invert each other,
// produces and verifies the bimodule isomorphism realized by alpha.
BraidingPairReport check_braiding_pair(AlgebraPtr a, const FreeModuleBraiding& alpha,
                                       const FreeModuleBraiding& beta);

}  // namespace ncalc

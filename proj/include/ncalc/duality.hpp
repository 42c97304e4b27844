#pragma once

#include "ncalc/calculus.hpp"

namespace ncalc {

enum class Side { right, left };

// The right (resp. left) module dual of a bimodule: the solution space of
// right- (resp. left-) linear maps into R, carrying the two canonical
// structures <<r.phi|m>> = r.phi(m) and <<phi.r|m>> = phi(r.m) (mirrored for
// left duals).
struct DualModule {
  Side side;
  Bimodule base;
  Bimodule module;      // the dual with both structures
  Subspace maps_space;  // inside the n x dim(base) matrix space, vectorized

  std::size_t dim() const { return module.dim(); }
  // The i-th canonical basis functional as a linear map base -> R.
  LinearMap functional(std::size_t i) const;
  LinearMap functional_from_coords(const Vec& dual_coords) const;
  // <<phi | m>> in R coordinates.
  Vec eval(const Vec& dual_coords, const Vec& base_coords) const;
};

DualModule right_dual(const Bimodule& m);
DualModule left_dual(const Bimodule& m);

// The three pairing adjunction identities on all basis triples.
bool check_pairing_adjunctions(const DualModule& d);

// phi |-> phi . psi between duals; contravariant. kind: bi maps transpose to
// bi maps, one-sided maps to the opposite side.
BimoduleMap transpose_map(const BimoduleMap& psi, const DualModule& dual_of_target,
                          const DualModule& dual_of_source);
BimoduleMap transpose_map(const BimoduleMap& psi, Side side);

struct DoubleDual {
  DualModule first;
  DualModule second;
  LinearMap canonical;  // m |-> (phi |-> phi(m))
  bool torsionless;     // canonical injective
  bool reflexive;       // canonical bijective
};

DoubleDual double_dual(const Bimodule& m, Side side = Side::right);
bool is_torsionless(const Bimodule& m, Side side = Side::right);
bool is_reflexive(const Bimodule& m, Side side = Side::right);

// A bimodule X with an action into the unit-killing endomorphisms of R,
// stored column-per-basis-vector as row-major n x n endomorphism vectors.
struct CartanPair {
  Side side;
  Bimodule x;
  LinearMap action;  // n^2 x dim(x)
};

// The endomorphism attached to an element of X.
Matrix cartan_endo(const CartanPair& cp, const Vec& x_coords);

struct CartanReport {
  std::vector<std::pair<std::size_t, std::size_t>> action_linearity_failures;  // (basis r, X idx)
  std::vector<std::pair<std::size_t, std::size_t>> twisted_leibniz_failures;   // (r, s) pairs
  bool unit_killed = true;
  bool injective = true;  // reported separately from the algebraic axioms
  std::optional<bool> derivations_ok;  // commutative symmetric case only
  bool axioms_ok() const {
    return action_linearity_failures.empty() && twisted_leibniz_failures.empty() && unit_killed;
  }
  bool ok() const { return axioms_ok() && injective; }
};

CartanReport validate_cartan_pair(const CartanPair& cp);

struct CartanFromFodc {
  CartanPair pair;
  DualModule dual;
};

// The vector fields of a calculus: X = omega dual, X^(r) = <<X | dr>>.
CartanFromFodc cartan_from_fodc(const Fodc& f, Side side);

// All delta with delta(rs) = delta(r)s + r delta(s), inside End coordinates.
Subspace derivations(const Algebra& a);

// End(R) with its two duality structures and the multiplication embeddings.
struct EndStructures {
  Bimodule as_right_dual;  // (r.A*r')(s) = r A(r's)    -- right dual of R(x)R
  Bimodule as_left_dual;   // (r*A.r')(s) = A(sr) r'    -- left dual of R(x)R
  LinearMap left_embed;    // r -> L_r
  LinearMap right_embed;   // r -> R_r
  bool left_embed_ok;      // L_{r'rr''} = r'.L_r*r'' on basis triples, injective
  bool right_embed_ok;
  Subspace left_image, right_image, images_intersection;
  bool intersection_is_center;
  bool four_multiplications_commute;
  Subspace end0;  // {A : A(1) = 0}
  LinearMap bifree_dual_iso;  // End coords -> right_dual(R(x)R) coords
  bool bifree_dual_iso_ok;
};

EndStructures end_structures(AlgebraPtr a);

// End_0(R) with the twisted structure (r.A(.)r')(s) = rA(r's) - rA(r')s; its
// tautological action makes it the universal right Cartan pair.
struct UniversalCartan {
  CartanPair pair;            // x = End_0 with the twisted structure
  Subspace end0;              // inside End coordinates
  DualModule kernel_dual;     // right dual of the kernel calculus bimodule
  LinearMap from_kernel_dual; // phi |-> (r |-> phi(d_mu r)), into End_0 coords
  bool kernel_iso_ok;         // bijective bimodule map intertwining the actions
  DualModule barred_dual;     // right dual of the free right presentation
  LinearMap from_barred_dual;
  bool barred_iso_ok;
};

UniversalCartan universal_cartan(AlgebraPtr a);

struct IntertwineEntry {
  std::string map_name;
  std::string structures;  // which source/target structure pair was tested
  bool left_ok = false;
  bool right_ok = false;
};

// The decompositions B = (B - L_{B(1)}) + L_{B(1)} and the R_r mirror, the
// exactness of the dualized unit sequences, and the empirical intertwining
// table of every arrow involved.
struct UniversalSplitting {
  LinearMap eval_at_unit;  // B -> B(1)
  LinearMap project_left;  // B -> B - L_{B(1)}
  LinearMap embed_left_value;
  LinearMap left_section;  // r -> L_r
  LinearMap project_right;
  LinearMap embed_right_value;
  LinearMap right_section;  // r -> R_r
  bool left_decomposition_identity = false;
  bool right_decomposition_identity = false;
  bool left_exact = false;   // 0 -> End_0 -> End -> R -> 0 with section r -> L_r
  bool right_exact = false;
  bool image_project_left_is_end0 = false;
  bool image_project_right_is_end0 = false;
  Subspace end0;
  std::vector<IntertwineEntry> table;
};

UniversalSplitting universal_splitting(AlgebraPtr a);

struct ReconstructedFodc {
  Fodc candidate;       // differential into the opposite-side dual of X
  DualModule x_dual;
  FodcReport report;
  SubBimodule generated;
  Fodc generated_fodc;  // the honest calculus on the generated subbimodule
  bool dual_action_arrow_surjective;  // precomposition End_0 dual -> X dual
};

// Attempts to rebuild a calculus from a right Cartan pair.
ReconstructedFodc reconstruct_fodc(const CartanPair& cp);

}  // namespace ncalc

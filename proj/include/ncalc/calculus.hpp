#pragma once

#include "ncalc/bimodule.hpp"

namespace ncalc {

// A first-order differential calculus: a bimodule Omega with a differential
// d: R -> Omega obeying the Leibniz rule, Omega generated by the image of d.
struct Fodc {
  Bimodule omega;
  LinearMap d;  // dim(omega) x n
};

struct FodcReport {
  BimoduleReport bimodule;
  std::vector<std::pair<std::size_t, std::size_t>> leibniz_failures;
  bool unit_killed = true;
  bool generated = true;
  std::size_t generated_dim = 0;
  bool ok() const { return bimodule.ok && leibniz_failures.empty() && unit_killed && generated; }
};

FodcReport validate_fodc(const Fodc& f);

// ker mu inside R (x) R with the restricted actions and d r = r(x)1 - 1(x)r.
struct UniversalCalculus {
  Fodc fodc;
  Bimodule bifree;
  Subspace kernel_subspace;  // ker mu as a subspace of R (x) R
  LinearMap inclusion;       // omega coords -> R (x) R coords
  LinearMap d_ambient;       // r -> r(x)1 - 1(x)r in R (x) R coords
};

UniversalCalculus universal_kernel_calculus(AlgebraPtr a);

// Coordinates for R-bar = R / k1: the unit's pivot coordinate is dropped.
struct BarCoordinates {
  std::size_t unit_pivot;
  std::vector<std::size_t> complement;  // surviving basis indices, size n-1
  LinearMap projection;                 // D : n -> n-1
  LinearMap section;                    // D_0 : n-1 -> n, D . D_0 = id
};

BarCoordinates bar_coordinates(const Algebra& a);

// The two free presentations of the universal calculus and the canonical
// maps connecting them with ker mu.
struct BarredPresentations {
  BarCoordinates bar;
  Fodc right_free;  // on Rbar (x) R, free right module, braided left action
  Fodc left_free;   // on R (x) Rbar, free left module, braided right action
  FreeModuleBraiding left_action_braiding;   // R (x) Rbar -> Rbar (x) R
  FreeModuleBraiding right_action_braiding;  // Rbar (x) R -> R (x) Rbar
  LinearMap right_free_to_square;  // rbar (x) s |-> r(x)s - 1(x)rs, into R (x) R
  LinearMap left_free_to_square;   // r (x) tbar |-> rt(x)1 - r(x)t, into R (x) R
};

BarredPresentations barred_presentations(AlgebraPtr a);

// Quotient of the universal calculus by the subbimodule generated by the
// given elements of ker mu (ambient R (x) R coordinates).
struct QuotientFodc {
  Fodc fodc;
  Subspace relations;          // the generated subbimodule, omega coordinates
  Subspace relations_ambient;  // the same inside R (x) R
  BimoduleMap projection;      // universal omega -> quotient omega
};

QuotientFodc quotient_fodc(const UniversalCalculus& univ, const std::vector<Vec>& gens);
QuotientFodc quotient_fodc(AlgebraPtr a, const std::vector<Vec>& gens);

// The canonical surjection pi: ker mu -> omega with d = pi . d_mu, from the
// universality of the kernel calculus.
BimoduleMap universal_projection(const UniversalCalculus& univ, const Fodc& f);

// d_w(a) = a.w - w.a on a bimodule; reports whether the commutators generate.
struct InnerDifferential {
  Fodc candidate;   // on all of M (may fail generation)
  FodcReport report;
  SubBimodule generated;  // subbimodule generated by the image of d
  Fodc generated_fodc;    // the honest calculus on it
};

InnerDifferential inner_differential(const Bimodule& m, const Vec& omega_element);

// Product of two elements of the algebra R (x) R.
Vec tensor_square_product(const Algebra& a, const Vec& u, const Vec& v);

// ker mu / (ker mu)^2 for commutative algebras; throws otherwise.
struct KaehlerCalculus {
  Fodc fodc;
  Subspace kernel_square;  // (ker mu)^2 inside R (x) R
  bool actions_coincide;   // left and right actions agree on the quotient
  BimoduleMap projection;  // universal omega -> Kaehler omega
};

KaehlerCalculus kaehler_calculus(AlgebraPtr a);

// The affine space of calculus morphisms L: omega_1 -> omega_2 (bimodule maps
// with d_2 = L . d_1).
struct FodcMorphisms {
  bool exists = false;
  LinearMap particular;
  Subspace homogeneous;  // bimodule maps L with L . d_1 = 0, vectorized
};

FodcMorphisms fodc_morphisms(const Fodc& f1, const Fodc& f2);
bool morphisms_contain(const FodcMorphisms& ms, const LinearMap& candidate);

}  // namespace ncalc

#pragma once

#include "wcpx/weak_crossed.hpp"

namespace wcpx {

/// A coalgebra with a unital product that need not be associative.
struct PreHopfObject {
  std::size_t dim = 0;
  LinMap unit;    // K -> H
  LinMap mul;     // H⊗H -> H
  LinMap counit;  // H -> K
  LinMap comul;   // H -> H⊗H

  const FieldSpec& field() const { return mul.field(); }
  ObjectShape object() const { return ObjectShape{dim}; }
  AlgebraData algebra() const { return {dim, unit, mul}; }
  CoalgebraData coalgebra() const { return {dim, counit, comul}; }
  static PreHopfObject from(const BialgebraData& b);
};

/// Ω(A) = (H, ◁: H⊗A -> H, ▷: H⊗A -> A, τ: H⊗H -> A) over a bialgebra A.
struct ExtendingDatum {
  BialgebraData a;
  PreHopfObject h;
  LinMap phi_h;  // ◁
  LinMap phi_a;  // ▷
  LinMap tau;
  Braiding braid = symmetric_braiding();

  const FieldSpec& field() const { return a.field(); }
};

/// Bialgebra axioms of A, the coalgebra and unit axioms of H, the
/// coalgebra-morphism property of ◁, ▷ and τ, and the five normalizing
/// conditions.
Report check_extending_datum(const ExtendingDatum& d);

struct UnifiedMaps {
  LinMap psi;    // (▷⊗◁)∘δ_{H⊗A}
  LinMap sigma;  // (τ⊗μ_H)∘δ_{H⊗H}
};
UnifiedMaps induce_maps(const ExtendingDatum& d);

/// BE1 to BE7 in their ψ/σ form, multiplicativity of δ_H and ε_H, and the
/// right A-module property of (H, ◁).
Report check_be(const ExtendingDatum& d);

/// Identities among ψ, σ and the coproducts and counits. The six that
/// only need the coalgebra-morphism conditions are always evaluated;
/// the two that need δ_H or ε_H multiplicative, and the exchange
/// identities that need BE6 or BE7, are not_applicable otherwise.
Report lemma_identities(const ExtendingDatum& d);

/// Requires check_extending_datum to pass (PreconditionError). Asserts the
/// applicable lemma identities (InvariantViolation). Compatibility of ψ
/// with μ_A failing is a PreconditionError when BE2 or the module property
/// is absent and an InvariantViolation when both hold.
CrossedSystem induce(const ExtendingDatum& d);

/// ∇ for the induced ψ compared with the identity of A⊗H.
Report check_nabla_identity(const ExtendingDatum& d);

/// (a⊗h)•(c⊗g) = a(h₁▷c₁)τ((h₂◁c₂)⊗g₁) ⊗ (h₃◁c₃)g₂ by loops over structure
/// constants. Assumes the symmetric braiding.
LinMap elementwise_bullet(const ExtendingDatum& d);

/// Requires a valid datum with BE1 to BE7, δ_H and ε_H multiplicative and
/// (H, ◁) a right A-module. Builds the weak crossed product and its algebra
/// with unit η_A⊗η_H, asserting ∇ = id, the bullet formula and the
/// two-sided unit.
WeakCrossedProduct build_unified_product(const ExtendingDatum& d);

/// The four implications between BE4/BE5 and the twisted/cocycle
/// conditions, each gated on its hypotheses, plus the exchange identities.
/// Component statuses are recorded as facts.
Report theorem_equivalence_suite_unified(const ExtendingDatum& d);

/// ▷ = ε_H⊗A, ◁ = H⊗ε_A, τ = η_A∘(ε_H⊗ε_H).
ExtendingDatum trivial_datum(const BialgebraData& a, const PreHopfObject& h);

namespace examples::unified {

/// A = H = kC2 with the trivial datum.
ExtendingDatum trivial_kc2(const FieldSpec& field);
/// A = kC3 = {1, c, c²}, H = kC2 = {1, g}, g▷c = c², trivial ◁ and τ.
ExtendingDatum smash_s3(const FieldSpec& field);
/// As smash_s3 with g acting trivially.
ExtendingDatum tensor_c3_c2(const FieldSpec& field);
/// A = H = kC2 = {1, a} / {1, g}, trivial actions, τ(g⊗g) = a.
ExtendingDatum twisted_c4(const FieldSpec& field);
/// A = kC2, H = Sweedler's H4, trivial datum.
ExtendingDatum trivial_h4(const FieldSpec& field);
/// A = k, H = span{1, g} with g grouplike and g·g = g2_one·1 + g2_g·g;
/// trivial datum.
ExtendingDatum two_dim_h(const FieldSpec& field, long g2_one, long g2_g);

/// smash_s3 with τ(g⊗g) = c.
ExtendingDatum smash_s3_bad_tau(const FieldSpec& field);
/// A = k[C2×C2], H = kC2, g acting by an automorphism of order 3.
ExtendingDatum klein_order3(const FieldSpec& field);
/// smash_s3 with g▷c = c + c².
ExtendingDatum smash_s3_bad_action(const FieldSpec& field);
/// smash_s3 with g▷1 = 0.
ExtendingDatum smash_s3_bad_unit(const FieldSpec& field);
/// smash_s3 with the non-coassociative δ_H(g) = g⊗g + 1⊗1.
ExtendingDatum smash_s3_bad_comul(const FieldSpec& field);

}  // namespace examples::unified

}  // namespace wcpx

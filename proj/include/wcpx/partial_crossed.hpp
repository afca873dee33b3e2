#pragma once

#include "wcpx/weak_crossed.hpp"

namespace wcpx {

/// (φ: H⊗A -> A, ω: H⊗H -> A) for a Hopf algebra H acting partially on A.
struct TwistedPartialAction {
  HopfData h;
  AlgebraData a;
  LinMap phi;
  LinMap omega;
  Braiding braid = symmetric_braiding();

  const FieldSpec& field() const { return a.field(); }
};

/// ψ = (φ⊗H)∘(H⊗c_{H,A})∘(δ_H⊗A) and σ = (ω⊗μ_H)∘δ_{H⊗H}, not yet
/// checked against μ_A.
struct PartialMaps {
  LinMap psi;    // H⊗A -> A⊗H
  LinMap sigma;  // H⊗H -> A⊗H
};

PartialMaps induce_maps(const TwistedPartialAction& act);

/// The four identities ψ and σ satisfy for any φ, ω over a Hopf algebra:
/// compatibility of ψ and σ with δ_H, and recovery of φ and ω through ε_H.
Report lemma_identities(const TwistedPartialAction& act);

/// Builds the induced quadruple. Throws InvariantViolation when the
/// coproduct identities above fail (corrupt Hopf data) and
/// PreconditionError when ψ is not compatible with μ_A, which happens
/// exactly when the multiplicativity axiom fails.
CrossedSystem induce_psi_sigma(const TwistedPartialAction& act);

/// Unit action, multiplicativity, twisted condition and ω normalization,
/// each in its braided form and its ψ/σ form, plus agreement records.
Report check_partial_action(const TwistedPartialAction& act);

/// Unit conditions on ω and the partial cocycle condition in both forms.
Report check_units_and_cocycle(const TwistedPartialAction& act);

/// ∇ = ((μ_A∘(A⊗ω))⊗H)∘(A⊗η_H⊗δ_H), valid under the unit conditions.
LinMap nabla_alternative(const TwistedPartialAction& act);

/// (a⊗h)(b⊗l) = Σ a(h₁.b)ω(h₂⊗l₁) ⊗ h₃l₂ evaluated by loops over structure
/// constants, as a map (A⊗H)⊗(A⊗H) -> A⊗H. Assumes the symmetric braiding.
LinMap elementwise_product(const TwistedPartialAction& act);

/// Requires every axiom, unit condition and the cocycle condition
/// (PreconditionError names the first failure). Delegates to the weak
/// crossed product engine, then asserts the alternative ∇ formula, the
/// element-wise product and that η_A⊗η_H is a preunit. The result carries
/// the unit p∘(η_A⊗η_H) on A#H.
WeakCrossedProduct build_partial_crossed_product(const TwistedPartialAction& act);

/// Status agreement between the partial twisted condition and the twisted
/// condition of the induced pair, and likewise for the two cocycle
/// conditions. Component statuses are recorded as facts.
Report theorem_equivalence_suite(const TwistedPartialAction& act);

/// ω(h⊗l) = h.(l.1_A).
LinMap smash_cocycle(const HopfData& h, const AlgebraData& a, const LinMap& phi);

/// φ = ε_H⊗A and ω = η_A∘(ε_H⊗ε_H).
TwistedPartialAction trivial_partial_action(const HopfData& h, const AlgebraData& a);

namespace examples::partial {

/// A = k, H = kC2, g.1 = λ, ω(h⊗l) = (h.1)(l.1). A twisted partial action
/// exactly when λ is 0 or 1.
TwistedPartialAction lambda_action(const FieldSpec& field, const Scalar& lambda);
/// A = k×k, H = kC2, g.e1 = e1, g.e2 = 0, ω = smash_cocycle.
TwistedPartialAction partial_smash_kc2(const FieldSpec& field);
/// A = k×k, H = kC2, g swaps e1 and e2, trivial ω.
TwistedPartialAction global_swap_kc2(const FieldSpec& field);
/// A = k×k, H = Sweedler's H4 acting through its counit.
TwistedPartialAction trivial_h4(const FieldSpec& field);

/// partial_smash_kc2 with ω(g⊗g) = e2.
TwistedPartialAction partial_smash_bad_omega(const FieldSpec& field);
/// partial_smash_kc2 with g.e1 = e2, g.e2 = 0 and the original ω.
TwistedPartialAction partial_smash_bad_phi(const FieldSpec& field);

}  // namespace examples::partial

}  // namespace wcpx

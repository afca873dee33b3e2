#pragma once

#include <optional>

#include "wcpx/structures.hpp"

namespace wcpx {

/// Conditions on a raw pair (ψ: V⊗A -> A⊗V, σ: V⊗V -> A⊗V). These do
/// not require the compatibility condition and are what the equivalence
/// suites compare against.
CheckRecord compat_condition(const AlgebraData& a, std::size_t vdim, const LinMap& psi);
CheckRecord twisted_condition(const AlgebraData& a, std::size_t vdim, const LinMap& psi, const LinMap& sigma);
CheckRecord cocycle_condition(const AlgebraData& a, std::size_t vdim, const LinMap& psi, const LinMap& sigma);
/// ∇ = (μ_A⊗V)∘(A⊗ψ)∘(A⊗V⊗η_A), with no postcondition checks.
LinMap nabla_formula(const AlgebraData& a, std::size_t vdim, const LinMap& psi);
/// μ_{A⊗V} = (μ_A⊗V)∘(μ_A⊗σ)∘(A⊗ψ⊗V).
LinMap product_formula(const AlgebraData& a, std::size_t vdim, const LinMap& psi, const LinMap& sigma);

/// A quadruple (A, V, ψ, σ) whose ψ has been verified compatible with μ_A:
/// (μ_A⊗V)∘(A⊗ψ)∘(ψ⊗A) = ψ∘(V⊗μ_A).
class CrossedSystem {
 public:
  /// Throws PreconditionError (with the witness) if ψ is not compatible,
  /// DimensionError on shape mismatch.
  CrossedSystem(AlgebraData a, std::size_t vdim, LinMap psi, LinMap sigma);

  const AlgebraData& algebra() const { return a_; }
  std::size_t vdim() const { return vdim_; }
  const LinMap& psi() const { return psi_; }
  const LinMap& sigma() const { return sigma_; }
  const FieldSpec& field() const { return a_.field(); }
  /// A⊗V as a two-factor object.
  ObjectShape av() const { return ObjectShape{a_.dim, vdim_}; }
  const CheckRecord& compat_record() const { return compat_; }

 private:
  AlgebraData a_;
  std::size_t vdim_;
  LinMap psi_;
  LinMap sigma_;
  CheckRecord compat_;
};

Report check_compat(const CrossedSystem& sys);

/// Builds ∇ and asserts ∇∘∇ = ∇ and ∇∘(μ_A⊗V) = (μ_A⊗V)∘(A⊗∇); throws
/// InvariantViolation otherwise.
LinMap build_nabla(const CrossedSystem& sys);

/// Idempotency, left linearity and splitting records for ∇.
Report nabla_report(const CrossedSystem& sys);

Report check_twisted(const CrossedSystem& sys);
Report check_cocycle(const CrossedSystem& sys);
/// ∇∘σ = σ.
Report check_normalized(const CrossedSystem& sys);

/// Replaces σ by ∇∘σ. `changed` reports whether σ was altered.
CrossedSystem normalize_sigma(const CrossedSystem& sys, bool* changed = nullptr);

struct WeakCrossedProduct {
  CrossedSystem system;
  LinMap nabla;
  Splitting splitting;
  LinMap mu_tensor;  // (A⊗V)⊗(A⊗V) -> A⊗V
  LinMap mu_times;   // (A×V)⊗(A×V) -> A×V
  std::optional<LinMap> preunit;     // K -> A⊗V
  std::optional<LinMap> unit_times;  // K -> A×V
  Report report;

  std::size_t image_dim() const { return splitting.mid.total(); }
  /// Requires unit_times.
  AlgebraData image_algebra() const;
};

/// Requires the twisted, cocycle and normalization conditions (throws
/// PreconditionError naming the first that fails), then builds μ_{A⊗V}
/// and μ_{A×V} and asserts associativity, normalization with respect to
/// ∇ and left A-linearity.
WeakCrossedProduct build_products(const CrossedSystem& sys);

/// Preunit axiom, the three conditions characterising ν as the preunit
/// of a weak crossed product, and ∇^ν = ∇.
Report check_preunit(const WeakCrossedProduct& wcp, const LinMap& nu);

/// Requires check_preunit to pass. Sets the unit p∘ν on A×V, asserts the
/// algebra axioms there and that p∘β_ν is an algebra morphism.
WeakCrossedProduct build_algebra(WeakCrossedProduct wcp, const LinMap& nu);

/// η_A ⊗ η_V for V carrying a unit η_V.
LinMap tensor_unit(const AlgebraData& a, const LinMap& eta_v);

}  // namespace wcpx

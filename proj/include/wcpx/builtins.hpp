#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "wcpx/structures.hpp"

namespace wcpx::builtin {

/// Group algebra k[C_{n1} × ... × C_{nr}]. Basis: group elements in
/// row-major order of their exponent tuples, identity first; grouplike
/// coproduct, antipode x -> x^{-1}.
HopfData group_algebra(const FieldSpec& field, const std::vector<std::size_t>& orders);
inline HopfData group_algebra(const FieldSpec& field, std::size_t n) { return group_algebra(field, std::vector{n}); }

/// Dual k^{C_n}: basis of delta functions p_x, p_x p_y = δ_{xy} p_x,
/// δ(p_x) = Σ_{yz=x} p_y ⊗ p_z, ε(p_x) = δ_{x,1}, λ(p_x) = p_{x^{-1}}.
HopfData dual_group_algebra(const FieldSpec& field, std::size_t n);

/// Sweedler's four-dimensional Hopf algebra on {1, g, x, gx}: g² = 1,
/// x² = 0, xg = -gx, δ(g) = g⊗g, δ(x) = x⊗1 + g⊗x, λ(g) = g, λ(x) = -gx.
/// Throws FieldError in characteristic 2.
HopfData sweedler_h4(const FieldSpec& field);

/// k^n with orthogonal idempotents e_i e_j = δ_ij e_i and unit Σ e_i.
AlgebraData product_algebra(const FieldSpec& field, std::size_t n);

/// M_n(k) on matrix units E_ij (index i·n + j), E_ij E_kl = δ_jk E_il.
AlgebraData matrix_algebra(const FieldSpec& field, std::size_t n);

using Structure = std::variant<HopfData, AlgebraData>;

/// Catalog lookup by name: "group_algebra" (params: cyclic orders),
/// "dual_group_algebra" (n), "sweedler_h4" (none), "product_algebra" (n),
/// "matrix_algebra" (n). Throws std::invalid_argument for unknown names or
/// bad parameters.
Structure lookup(const std::string& name, const std::vector<std::size_t>& params, const FieldSpec& field);

}  // namespace wcpx::builtin

#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "wcpx/linmap.hpp"
#include "wcpx/report.hpp"

namespace wcpx {

/// (A, η, μ): unit K -> A and product A⊗A -> A.
struct AlgebraData {
  std::size_t dim = 0;
  LinMap unit;
  LinMap mul;

  const FieldSpec& field() const { return mul.field(); }
  ObjectShape object() const { return ObjectShape{dim}; }
  LinMap id() const { return identity(field(), object()); }
};

/// (C, ε, δ): counit C -> K and coproduct C -> C⊗C.
struct CoalgebraData {
  std::size_t dim = 0;
  LinMap counit;
  LinMap comul;

  const FieldSpec& field() const { return comul.field(); }
  ObjectShape object() const { return ObjectShape{dim}; }
  LinMap id() const { return identity(field(), object()); }
};

struct BialgebraData {
  AlgebraData algebra;
  CoalgebraData coalgebra;

  std::size_t dim() const { return algebra.dim; }
  const FieldSpec& field() const { return algebra.field(); }
};

struct HopfData {
  BialgebraData bialgebra;
  LinMap antipode;

  std::size_t dim() const { return bialgebra.dim(); }
  const FieldSpec& field() const { return bialgebra.field(); }
  const AlgebraData& algebra() const { return bialgebra.algebra; }
  const CoalgebraData& coalgebra() const { return bialgebra.coalgebra; }
};

/// Constructors from sparse structure constants (0-based indices).
struct MulEntry {
  std::size_t left, right, out;
  long num, den = 1;
};
struct ComulEntry {
  std::size_t in, left, right;
  long num, den = 1;
};

AlgebraData make_algebra(const FieldSpec& field, std::size_t dim, const std::vector<long>& unit,
                         const std::vector<MulEntry>& products);
CoalgebraData make_coalgebra(const FieldSpec& field, std::size_t dim, const std::vector<long>& counit,
                             const std::vector<ComulEntry>& coproducts);

/// Braided tensor-product algebra: μ_{A⊗B} = (μ_A⊗μ_B)∘(A⊗c_{B,A}⊗B).
AlgebraData tensor_algebra(const AlgebraData& a, const AlgebraData& b,
                           const Braiding& braid = symmetric_braiding());
/// δ_{C⊗D} = (C⊗c_{C,D}⊗D)∘(δ_C⊗δ_D) as a map C⊗D -> C⊗D⊗C⊗D.
LinMap tensor_comul(const CoalgebraData& c, const CoalgebraData& d,
                    const Braiding& braid = symmetric_braiding());

/// Shape checks shared by the validators; throws DimensionError.
void require_shapes(const AlgebraData& a);
void require_shapes(const CoalgebraData& c);

Report check_algebra(const AlgebraData& a, const std::string& subject = {});
Report check_coalgebra(const CoalgebraData& c, const std::string& subject = {});
/// Also runs check_algebra and check_coalgebra.
Report check_bialgebra(const BialgebraData& b, const std::string& subject = {},
                       const Braiding& braid = symmetric_braiding());
/// Antipode identities only.
Report check_hopf(const HopfData& h, const std::string& subject = {});
/// Algebra, coalgebra, bialgebra and antipode checks together.
Report check_hopf_full(const HopfData& h, const std::string& subject = {},
                       const Braiding& braid = symmetric_braiding());

}  // namespace wcpx

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "wcpx/partial_crossed.hpp"
#include "wcpx/unified_product.hpp"

namespace wcpx {

/// Any problem with an input file. Line and column are 1-based; column 0
/// means the whole line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/// `object`, `algebra`, `coalgebra`, `bialgebra` and `hopf` blocks. All
/// indices are 0-based here and 1-based in the file.
struct StructureBlock {
  enum class Kind { object, algebra, coalgebra, bialgebra, hopf };
  Kind kind = Kind::object;
  std::string name;
  std::size_t dim = 0;
  std::size_t line = 0;
  std::optional<std::vector<Scalar>> unit;
  std::optional<std::vector<Scalar>> counit;
  std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Scalar>> mul;
  std::map<std::size_t, std::map<std::pair<std::size_t, std::size_t>, Scalar>> comul;
  std::map<std::size_t, std::map<std::size_t, Scalar>> antipode;

  friend bool operator==(const StructureBlock& a, const StructureBlock& b);
};

struct MorphismBlock {
  std::string name;
  std::size_t line = 0;
  std::vector<std::string> source;  // object names; empty is K
  std::vector<std::string> target;
  std::map<std::size_t, std::map<std::size_t, Scalar>> entries;  // column -> row -> value

  friend bool operator==(const MorphismBlock& a, const MorphismBlock& b);
};

/// `partial_action`, `extending_datum` and `crossed_system` blocks: named
/// references to structures and morphisms, in file order.
struct BundleBlock {
  enum class Kind { partial_action, extending_datum, crossed_system };
  Kind kind = Kind::partial_action;
  std::string name;
  std::size_t line = 0;
  std::vector<std::pair<std::string, std::string>> fields;

  const std::string* field(std::string_view role) const;
  friend bool operator==(const BundleBlock& a, const BundleBlock& b);
};

using Block = std::variant<StructureBlock, MorphismBlock, BundleBlock>;

struct StructureFile {
  FieldSpec field = FieldSpec::rationals();
  bool field_declared = false;
  std::vector<Block> blocks;

  const StructureBlock* structure(std::string_view name) const;
  const MorphismBlock* morphism(std::string_view name) const;
  const BundleBlock* bundle(std::string_view name) const;
  std::vector<const BundleBlock*> bundles(BundleBlock::Kind kind) const;

  friend bool operator==(const StructureFile& a, const StructureFile& b) = default;
};

std::string_view to_string(StructureBlock::Kind k);
std::string_view to_string(BundleBlock::Kind k);

/// Parses and validates references, dimensions and scalars. The field is
/// `default_field` unless the file declares one. Throws ParseError.
StructureFile parse_structure_file(std::string_view text, const FieldSpec& default_field = FieldSpec::rationals());

/// Canonical text; parse_structure_file(emit_structure_file(f)) == f.
std::string emit_structure_file(const StructureFile& file);

/// Turning blocks into engine data. Names must refer to blocks of a
/// suitable kind (ParseError otherwise).
AlgebraData resolve_algebra(const StructureFile& f, std::string_view name);
CoalgebraData resolve_coalgebra(const StructureFile& f, std::string_view name);
BialgebraData resolve_bialgebra(const StructureFile& f, std::string_view name);
HopfData resolve_hopf(const StructureFile& f, std::string_view name);
PreHopfObject resolve_pre_hopf(const StructureFile& f, std::string_view name);
LinMap resolve_morphism(const StructureFile& f, std::string_view name);
TwistedPartialAction resolve_partial_action(const StructureFile& f, std::string_view name);
ExtendingDatum resolve_extending_datum(const StructureFile& f, std::string_view name);

struct CrossedSystemInput {
  AlgebraData algebra;
  std::size_t vdim;
  LinMap psi;
  LinMap sigma;
  std::optional<LinMap> preunit;
};
CrossedSystemInput resolve_crossed_system(const StructureFile& f, std::string_view name);

}  // namespace wcpx

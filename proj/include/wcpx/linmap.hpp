#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wcpx/scalar.hpp"

namespace wcpx {

class DimensionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A stated precondition of an operation does not hold for its input.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A property that must follow from already-verified hypotheses failed.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Ordered list of tensor-factor dimensions. The empty list is the unit
/// object K. Basis vectors of a tensor product are flattened row-major.
class ObjectShape {
 public:
  ObjectShape() = default;
  ObjectShape(std::initializer_list<std::size_t> factors);
  explicit ObjectShape(std::vector<std::size_t> factors);

  static ObjectShape unit() { return {}; }

  const std::vector<std::size_t>& factors() const { return factors_; }
  std::size_t total() const;
  std::size_t rank() const { return factors_.size(); }

  std::size_t flatten(const std::vector<std::size_t>& index) const;
  std::vector<std::size_t> unflatten(std::size_t flat) const;

  /// Equal up to unit factors (strict monoidal identification K⊗X = X).
  bool equivalent(const ObjectShape& other) const;
  std::string to_string() const;

  friend ObjectShape operator*(const ObjectShape& a, const ObjectShape& b);
  friend bool operator==(const ObjectShape&, const ObjectShape&) = default;

 private:
  std::vector<std::size_t> factors_;
};

/// A linear map between tensor-product spaces: dense target.total() x
/// source.total() matrix over one field.
class LinMap {
 public:
  LinMap(FieldSpec field, ObjectShape source, ObjectShape target);
  /// Builds from row lists; rows.size() must equal target.total().
  LinMap(FieldSpec field, ObjectShape source, ObjectShape target,
         const std::vector<std::vector<long>>& rows);

  const FieldSpec& field() const { return field_; }
  const ObjectShape& source() const { return source_; }
  const ObjectShape& target() const { return target_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Scalar& at(std::size_t row, std::size_t col) const { return entries_[row * cols_ + col]; }
  void set(std::size_t row, std::size_t col, Scalar value);
  void add(std::size_t row, std::size_t col, const Scalar& value);
  /// Copy with one structure constant replaced.
  LinMap with_entry(std::size_t row, std::size_t col, Scalar value) const;
  /// Same matrix, relabelled shapes with identical totals.
  LinMap reshaped(ObjectShape source, ObjectShape target) const;

  LinMap scaled(const Scalar& factor) const;
  LinMap operator+(const LinMap& other) const;
  LinMap operator-(const LinMap& other) const;

  /// Image of a basis vector: column `col` as a coefficient list.
  std::vector<Scalar> column(std::size_t col) const;
  bool is_zero() const;

 private:
  FieldSpec field_;
  ObjectShape source_;
  ObjectShape target_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

LinMap identity(const FieldSpec& field, const ObjectShape& shape);
LinMap identity(const FieldSpec& field, std::size_t n);
LinMap zero_map(const FieldSpec& field, const ObjectShape& source, const ObjectShape& target);

/// f ∘ g: g is applied first.
LinMap compose(const LinMap& f, const LinMap& g);

/// f_1 ∘ f_2 ∘ ... ∘ f_n.
template <typename... Rest>
LinMap compose(const LinMap& f, const LinMap& g, const Rest&... rest) {
  return compose(f, compose(g, rest...));
}

/// Kronecker product consistent with row-major flattening.
LinMap tensor(const LinMap& f, const LinMap& g);

template <typename... Rest>
LinMap tensor(const LinMap& f, const LinMap& g, const Rest&... rest) {
  return tensor(tensor(f, g), rest...);
}

/// Symmetric swap c_{M,N}: M⊗N -> N⊗M sending basis index i·|N| + j to j·|M| + i.
LinMap braiding(const FieldSpec& field, const ObjectShape& m, const ObjectShape& n);
LinMap braiding(const FieldSpec& field, std::size_t m, std::size_t n);

/// Pluggable braiding c_{M,N}. The shipped default is the symmetric swap.
using Braiding = std::function<LinMap(const FieldSpec&, const ObjectShape&, const ObjectShape&)>;
Braiding symmetric_braiding();

/// First entry where two maps differ, scanning input basis vectors
/// (columns) in order and then output coordinates (rows).
struct Difference {
  bool shape_mismatch = false;
  std::size_t row = 0;
  std::size_t col = 0;
  Scalar lhs;
  Scalar rhs;
};

struct Comparison {
  bool equal = true;
  std::optional<Difference> difference;
  explicit operator bool() const { return equal; }
};

/// Exact equality; shapes are compared up to unit factors.
Comparison equals(const LinMap& f, const LinMap& g);

struct Splitting {
  ObjectShape mid;
  LinMap injection;   // mid -> Y
  LinMap projection;  // Y -> mid
};

/// Rank via exact Gaussian elimination.
std::size_t rank(const LinMap& f);

/// Splits an idempotent e = injection ∘ projection with
/// projection ∘ injection = id. Injection columns are the reduced column
/// echelon basis of the image (leftmost pivots, leading entries 1).
/// Throws PreconditionError naming a basis vector where e∘e ≠ e.
Splitting split_idempotent(const LinMap& e);

std::string describe(const LinMap& f);

}  // namespace wcpx

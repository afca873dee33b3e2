#include "wcpx/linmap.hpp"

#include <sstream>
#include <utility>

namespace wcpx {

ObjectShape::ObjectShape(std::initializer_list<std::size_t> factors) : factors_(factors) {
  for (auto f : factors_)
    if (f == 0) throw DimensionError("tensor factor of dimension 0");
}

ObjectShape::ObjectShape(std::vector<std::size_t> factors) : factors_(std::move(factors)) {
  for (auto f : factors_)
    if (f == 0) throw DimensionError("tensor factor of dimension 0");
}

std::size_t ObjectShape::total() const {
  std::size_t n = 1;
  for (auto f : factors_) n *= f;
  return n;
}

std::size_t ObjectShape::flatten(const std::vector<std::size_t>& index) const {
  if (index.size() != factors_.size())
    throw DimensionError("multi-index of length " + std::to_string(index.size()) +
                         " for shape " + to_string());
  std::size_t flat = 0;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (index[k] >= factors_[k]) throw DimensionError("multi-index out of range for " + to_string());
    flat = flat * factors_[k] + index[k];
  }
  return flat;
}

std::vector<std::size_t> ObjectShape::unflatten(std::size_t flat) const {
  if (flat >= total()) throw DimensionError("flat index out of range for " + to_string());
  std::vector<std::size_t> index(factors_.size());
  for (std::size_t k = factors_.size(); k-- > 0;) {
    index[k] = flat % factors_[k];
    flat /= factors_[k];
  }
  return index;
}

bool ObjectShape::equivalent(const ObjectShape& other) const {
  auto strip = [](const std::vector<std::size_t>& v) {
    std::vector<std::size_t> out;
    for (auto f : v)
      if (f != 1) out.push_back(f);
    return out;
  };
  return strip(factors_) == strip(other.factors_);
}

std::string ObjectShape::to_string() const {
  if (factors_.empty()) return "K";
  std::ostringstream os;
  for (std::size_t k = 0; k < factors_.size(); ++k) os << (k ? "⊗" : "") << factors_[k];
  return os.str();
}

ObjectShape operator*(const ObjectShape& a, const ObjectShape& b) {
  std::vector<std::size_t> f = a.factors_;
  f.insert(f.end(), b.factors_.begin(), b.factors_.end());
  return ObjectShape(std::move(f));
}

LinMap::LinMap(FieldSpec field, ObjectShape source, ObjectShape target)
    : field_(field),
      source_(std::move(source)),
      target_(std::move(target)),
      rows_(target_.total()),
      cols_(source_.total()),
      entries_(rows_ * cols_, Scalar::zero(field)) {}

LinMap::LinMap(FieldSpec field, ObjectShape source, ObjectShape target,
               const std::vector<std::vector<long>>& rows)
    : LinMap(field, std::move(source), std::move(target)) {
  if (rows.size() != rows_) throw DimensionError("row count does not match target " + target_.to_string());
  for (std::size_t r = 0; r < rows_; ++r) {
    if (rows[r].size() != cols_)
      throw DimensionError("column count does not match source " + source_.to_string());
    for (std::size_t c = 0; c < cols_; ++c) set(r, c, Scalar(field_, rows[r][c]));
  }
}

void LinMap::set(std::size_t row, std::size_t col, Scalar value) {
  if (row >= rows_ || col >= cols_) throw DimensionError("entry index out of range");
  if (!(value.field() == field_)) throw FieldError("entry from " + value.field().name() + " in map over " + field_.name());
  entries_[row * cols_ + col] = std::move(value);
}

void LinMap::add(std::size_t row, std::size_t col, const Scalar& value) {
  entries_.at(row * cols_ + col) += value;
}

LinMap LinMap::with_entry(std::size_t row, std::size_t col, Scalar value) const {
  LinMap copy = *this;
  copy.set(row, col, std::move(value));
  return copy;
}

LinMap LinMap::reshaped(ObjectShape source, ObjectShape target) const {
  if (source.total() != cols_ || target.total() != rows_)
    throw DimensionError("cannot reshape " + source_.to_string() + " -> " + target_.to_string() +
                         " as " + source.to_string() + " -> " + target.to_string());
  LinMap copy = *this;
  copy.source_ = std::move(source);
  copy.target_ = std::move(target);
  return copy;
}

LinMap LinMap::scaled(const Scalar& factor) const {
  LinMap copy = *this;
  for (auto& e : copy.entries_) e *= factor;
  return copy;
}

LinMap LinMap::operator+(const LinMap& other) const {
  if (other.rows_ != rows_ || other.cols_ != cols_) throw DimensionError("sum of maps with different shapes");
  LinMap copy = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k) copy.entries_[k] += other.entries_[k];
  return copy;
}

LinMap LinMap::operator-(const LinMap& other) const { return *this + other.scaled(-Scalar::one(field_)); }

std::vector<Scalar> LinMap::column(std::size_t col) const {
  std::vector<Scalar> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(at(r, col));
  return out;
}

bool LinMap::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

LinMap identity(const FieldSpec& field, const ObjectShape& shape) {
  LinMap id(field, shape, shape);
  for (std::size_t k = 0; k < shape.total(); ++k) id.set(k, k, Scalar::one(field));
  return id;
}

LinMap identity(const FieldSpec& field, std::size_t n) { return identity(field, ObjectShape{n}); }

LinMap zero_map(const FieldSpec& field, const ObjectShape& source, const ObjectShape& target) {
  return LinMap(field, source, target);
}

LinMap compose(const LinMap& f, const LinMap& g) {
  if (g.target().total() != f.source().total())
    throw DimensionError("cannot compose " + f.source().to_string() + " -> " + f.target().to_string() +
                         " after " + g.source().to_string() + " -> " + g.target().to_string());
  if (!(f.field() == g.field())) throw FieldError("composing maps over different fields");
  LinMap out(f.field(), g.source(), f.target());
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t k = 0; k < f.cols(); ++k) {
      const Scalar& a = f.at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < g.cols(); ++j) {
        const Scalar& b = g.at(k, j);
        if (!b.is_zero()) out.add(i, j, a * b);
      }
    }
  }
  return out;
}

LinMap tensor(const LinMap& f, const LinMap& g) {
  if (!(f.field() == g.field())) throw FieldError("tensoring maps over different fields");
  LinMap out(f.field(), f.source() * g.source(), f.target() * g.target());
  for (std::size_t r1 = 0; r1 < f.rows(); ++r1) {
    for (std::size_t c1 = 0; c1 < f.cols(); ++c1) {
      const Scalar& a = f.at(r1, c1);
      if (a.is_zero()) continue;
      for (std::size_t r2 = 0; r2 < g.rows(); ++r2) {
        for (std::size_t c2 = 0; c2 < g.cols(); ++c2) {
          const Scalar& b = g.at(r2, c2);
          if (!b.is_zero()) out.set(r1 * g.rows() + r2, c1 * g.cols() + c2, a * b);
        }
      }
    }
  }
  return out;
}

LinMap braiding(const FieldSpec& field, const ObjectShape& m, const ObjectShape& n) {
  LinMap out(field, m * n, n * m);
  const std::size_t dm = m.total();
  const std::size_t dn = n.total();
  for (std::size_t i = 0; i < dm; ++i)
    for (std::size_t j = 0; j < dn; ++j) out.set(j * dm + i, i * dn + j, Scalar::one(field));
  return out;
}

LinMap braiding(const FieldSpec& field, std::size_t m, std::size_t n) {
  return braiding(field, ObjectShape{m}, ObjectShape{n});
}

Braiding symmetric_braiding() {
  return [](const FieldSpec& field, const ObjectShape& m, const ObjectShape& n) {
    return braiding(field, m, n);
  };
}

Comparison equals(const LinMap& f, const LinMap& g) {
  if (!f.source().equivalent(g.source()) || !f.target().equivalent(g.target()) ||
      !(f.field() == g.field())) {
    Comparison out;
    out.equal = false;
    out.difference.emplace();
    out.difference->shape_mismatch = true;
    return out;
  }
  for (std::size_t c = 0; c < f.cols(); ++c) {
    for (std::size_t r = 0; r < f.rows(); ++r) {
      if (!(f.at(r, c) == g.at(r, c))) {
        Comparison out;
        out.equal = false;
        out.difference = Difference{false, r, c, f.at(r, c), g.at(r, c)};
        return out;
      }
    }
  }
  return {};
}

namespace {

using Rows = std::vector<std::vector<Scalar>>;

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Rows& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t ncols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t sel = r;
    while (sel < m.size() && m[sel][c].is_zero()) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[r]);
    Scalar inv = m[r][c].inverse();
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Scalar factor = m[i][c];
      for (std::size_t j = c; j < ncols; ++j)
        if (!m[r][j].is_zero()) m[i][j] -= factor * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Rows transpose_rows(const LinMap& f) {
  Rows t(f.cols(), std::vector<Scalar>(f.rows(), Scalar::zero(f.field())));
  for (std::size_t r = 0; r < f.rows(); ++r)
    for (std::size_t c = 0; c < f.cols(); ++c) t[c][r] = f.at(r, c);
  return t;
}

}  // namespace

std::size_t rank(const LinMap& f) {
  Rows t = transpose_rows(f);
  return rref(t).size();
}

Splitting split_idempotent(const LinMap& e) {
  if (e.source().total() != e.target().total())
    throw PreconditionError("split_idempotent: map " + e.source().to_string() + " -> " +
                            e.target().to_string() + " is not an endomorphism");
  const FieldSpec& field = e.field();
  auto square = equals(compose(e, e), e);
  if (!square) {
    const auto& d = *square.difference;
    throw PreconditionError("split_idempotent: e∘e ≠ e on basis vector " + std::to_string(d.col) +
                            " (coordinate " + std::to_string(d.row) + ": " + d.lhs.to_string() +
                            " vs " + d.rhs.to_string() + ")");
  }
  // Rows of rref(e^T) are the reduced column echelon basis of the image.
  Rows t = transpose_rows(e);
  auto pivots = rref(t);
  const std::size_t r = pivots.size();
  const std::size_t n = e.rows();
  // Objects have positive dimension, so the zero idempotent has no splitting here.
  if (r == 0) throw PreconditionError("split_idempotent: zero idempotent has no nonzero image");
  const ObjectShape mid{r};
  LinMap injection(field, mid, e.target());
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t i = 0; i < n; ++i) injection.set(i, k, t[k][i]);
  LinMap projection(field, e.source(), mid);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t c = 0; c < e.cols(); ++c) projection.set(k, c, e.at(pivots[k], c));

  if (!equals(compose(injection, projection), e))
    throw InvariantViolation("split_idempotent: injection ∘ projection ≠ e");
  if (!equals(compose(projection, injection), identity(field, mid)))
    throw InvariantViolation("split_idempotent: projection ∘ injection ≠ id");
  return {mid, std::move(injection), std::move(projection)};
}

std::string describe(const LinMap& f) {
  std::ostringstream os;
  os << f.source().to_string() << " -> " << f.target().to_string() << " over " << f.field().name() << "\n";
  for (std::size_t r = 0; r < f.rows(); ++r) {
    os << "  [";
    for (std::size_t c = 0; c < f.cols(); ++c) os << (c ? " " : "") << f.at(r, c);
    os << "]\n";
  }
  return os.str();
}

}  // namespace wcpx

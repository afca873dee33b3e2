#pragma once

// Reference computations for the tests. Everything here works on explicit
// coefficient vectors and loops over structure constants; nothing goes
// through compose/tensor or the engine's own element-wise formulas.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <tuple>
#include <vector>

#include "wcpx/partial_crossed.hpp"
#include "wcpx/unified_product.hpp"

namespace oracle {

using wcpx::FieldSpec;
using wcpx::LinMap;
using wcpx::Scalar;
using Vec = std::vector<Scalar>;

inline Vec zeros(const FieldSpec& k, std::size_t n) { return Vec(n, Scalar::zero(k)); }

inline Vec unit_vec(const FieldSpec& k, std::size_t n, std::size_t i) {
  Vec v = zeros(k, n);
  v[i] = Scalar::one(k);
  return v;
}

inline void axpy(Vec& y, const Scalar& a, const Vec& x) {
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
}

/// Column `col` of a map.
inline Vec col(const LinMap& f, std::size_t c) {
  Vec v;
  v.reserve(f.rows());
  for (std::size_t r = 0; r < f.rows(); ++r) v.push_back(f.at(r, c));
  return v;
}

/// Bilinear map B: X⊗Y -> Z given by its matrix (column x*|Y| + y).
inline Vec bilinear(const LinMap& b, const Vec& x, const Vec& y) {
  const FieldSpec& k = b.field();
  Vec out = zeros(k, b.rows());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j].is_zero()) continue;
      axpy(out, x[i] * y[j], col(b, i * y.size() + j));
    }
  }
  return out;
}

inline Vec linear(const LinMap& f, const Vec& x) {
  Vec out = zeros(f.field(), f.rows());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) axpy(out, x[i], col(f, i));
  return out;
}

/// Sweedler components of δ(e_i): (coefficient, left, right).
inline std::vector<std::tuple<Scalar, std::size_t, std::size_t>> sweedler2(const LinMap& comul, std::size_t dim,
                                                                           std::size_t i) {
  std::vector<std::tuple<Scalar, std::size_t, std::size_t>> out;
  for (std::size_t l = 0; l < dim; ++l)
    for (std::size_t r = 0; r < dim; ++r)
      if (const Scalar& s = comul.at(l * dim + r, i); !s.is_zero()) out.emplace_back(s, l, r);
  return out;
}

/// Components of (δ⊗id)δ(e_i).
inline std::vector<std::tuple<Scalar, std::size_t, std::size_t, std::size_t>> sweedler3(const LinMap& comul,
                                                                                        std::size_t dim,
                                                                                        std::size_t i) {
  std::vector<std::tuple<Scalar, std::size_t, std::size_t, std::size_t>> out;
  for (const auto& [c, a, b] : sweedler2(comul, dim, i))
    for (const auto& [d, p, q] : sweedler2(comul, dim, a)) out.emplace_back(c * d, p, q, b);
  return out;
}

/// Outer product of x ∈ X and y ∈ Y as a vector of X⊗Y.
inline Vec outer(const Vec& x, const Vec& y) {
  Vec out;
  out.reserve(x.size() * y.size());
  for (const auto& a : x)
    for (const auto& b : y) out.push_back(a * b);
  return out;
}

/// Assembles a map from the images of its basis vectors.
inline LinMap from_columns(const FieldSpec& k, const wcpx::ObjectShape& src, const wcpx::ObjectShape& tgt,
                           const std::vector<Vec>& cols) {
  LinMap f(k, src, tgt);
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < cols[c].size(); ++r)
      if (!cols[c][r].is_zero()) f.set(r, c, cols[c][r]);
  return f;
}

/// ∇(a⊗h) = Σ a(h₁.1_A) ⊗ h₂ for a twisted partial action.
inline LinMap partial_nabla(const wcpx::TwistedPartialAction& act) {
  const FieldSpec& k = act.field();
  const std::size_t da = act.a.dim, dh = act.h.dim();
  const Vec one_a = col(act.a.unit, 0);
  std::vector<Vec> cols;
  for (std::size_t a = 0; a < da; ++a)
    for (std::size_t h = 0; h < dh; ++h) {
      Vec out = zeros(k, da * dh);
      for (const auto& [c, h1, h2] : sweedler2(act.h.coalgebra().comul, dh, h)) {
        const Vec left = bilinear(act.a.mul, unit_vec(k, da, a), bilinear(act.phi, unit_vec(k, dh, h1), one_a));
        axpy(out, c, outer(left, unit_vec(k, dh, h2)));
      }
      cols.push_back(std::move(out));
    }
  return from_columns(k, {da, dh}, {da, dh}, cols);
}

/// (a⊗h)(b⊗l) = Σ a(h₁.b)ω(h₂⊗l₁) ⊗ h₃l₂.
inline LinMap partial_product(const wcpx::TwistedPartialAction& act) {
  const FieldSpec& k = act.field();
  const std::size_t da = act.a.dim, dh = act.h.dim(), n = da * dh;
  const LinMap& mul_a = act.a.mul;
  const LinMap& mul_h = act.h.algebra().mul;
  const LinMap& comul = act.h.coalgebra().comul;
  std::vector<Vec> cols;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t a = x / dh, h = x % dh, b = y / dh, l = y % dh;
      Vec out = zeros(k, n);
      for (const auto& [c, h1, h2, h3] : sweedler3(comul, dh, h))
        for (const auto& [d, l1, l2] : sweedler2(comul, dh, l)) {
          const Vec hb = bilinear(act.phi, unit_vec(k, dh, h1), unit_vec(k, da, b));
          const Vec w = bilinear(act.omega, unit_vec(k, dh, h2), unit_vec(k, dh, l1));
          const Vec left = bilinear(mul_a, bilinear(mul_a, unit_vec(k, da, a), hb), w);
          const Vec right = bilinear(mul_h, unit_vec(k, dh, h3), unit_vec(k, dh, l2));
          axpy(out, c * d, outer(left, right));
        }
      cols.push_back(std::move(out));
    }
  return from_columns(k, {n, n}, {da, dh}, cols);
}

/// (a⊗h)•(c⊗g) = Σ a(h₁▷c₁)τ((h₂◁c₂)⊗g₁) ⊗ (h₃◁c₃)g₂.
inline LinMap unified_bullet(const wcpx::ExtendingDatum& d) {
  const FieldSpec& k = d.field();
  const std::size_t da = d.a.dim(), dh = d.h.dim, n = da * dh;
  const LinMap& mul_a = d.a.algebra.mul;
  std::vector<Vec> cols;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t a = x / dh, h = x % dh, c = y / dh, g = y % dh;
      Vec out = zeros(k, n);
      for (const auto& [s, h1, h2, h3] : sweedler3(d.h.comul, dh, h))
        for (const auto& [t, c1, c2, c3] : sweedler3(d.a.coalgebra.comul, da, c))
          for (const auto& [u, g1, g2] : sweedler2(d.h.comul, dh, g)) {
            const Vec hc1 = bilinear(d.phi_a, unit_vec(k, dh, h1), unit_vec(k, da, c1));
            const Vec hc2 = bilinear(d.phi_h, unit_vec(k, dh, h2), unit_vec(k, da, c2));
            const Vec hc3 = bilinear(d.phi_h, unit_vec(k, dh, h3), unit_vec(k, da, c3));
            const Vec tau = bilinear(d.tau, hc2, unit_vec(k, dh, g1));
            const Vec left = bilinear(mul_a, bilinear(mul_a, unit_vec(k, da, a), hc1), tau);
            const Vec right = bilinear(d.h.mul, hc3, unit_vec(k, dh, g2));
            axpy(out, s * t * u, outer(left, right));
          }
      cols.push_back(std::move(out));
    }
  return from_columns(k, {n, n}, {da, dh}, cols);
}

/// Rank by plain row reduction on a copy.
inline std::size_t rank(std::vector<Vec> rows) {
  std::size_t r = 0;
  const std::size_t ncols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Scalar inv = rows[r][c].inverse();
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Scalar f = rows[i][c];
      for (std::size_t j = 0; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

inline std::size_t rank(const LinMap& f) {
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < f.rows(); ++r) {
    Vec row;
    for (std::size_t c = 0; c < f.cols(); ++c) row.push_back(f.at(r, c));
    rows.push_back(std::move(row));
  }
  return rank(std::move(rows));
}

/// Dimension of {x : xy = yx for all y} for a product on an n-dim space.
inline std::size_t centre_dim(const LinMap& mul, std::size_t n) {
  std::vector<Vec> rows;
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t out = 0; out < n; ++out) {
      Vec row;
      for (std::size_t x = 0; x < n; ++x) row.push_back(mul.at(out, x * n + y) - mul.at(out, y * n + x));
      rows.push_back(std::move(row));
    }
  return n - rank(std::move(rows));
}

/// Structure constants of the group algebra of a finite group given by
/// its multiplication table on indices.
inline LinMap group_algebra_product(const FieldSpec& k, const std::vector<std::vector<std::size_t>>& table) {
  const std::size_t n = table.size();
  LinMap m(k, {n, n}, {n});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) m.set(table[x][y], x * n + y, Scalar::one(k));
  return m;
}

/// C2×C2 on the basis (a, h) ↦ 2a + h.
inline std::vector<std::vector<std::size_t>> klein_four_table() {
  std::vector<std::vector<std::size_t>> t(4, std::vector<std::size_t>(4));
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y) t[x][y] = x ^ y;
  return t;
}

/// S3 on the basis c^i g^j ↦ 2i + j, with c a 3-cycle and g a
/// transposition fixing 0, composed as permutations.
inline std::vector<std::vector<std::size_t>> s3_table() {
  using Perm = std::array<int, 3>;
  auto comp = [](const Perm& p, const Perm& q) { return Perm{p[q[0]], p[q[1]], p[q[2]]}; };
  const Perm id{0, 1, 2}, c{1, 2, 0}, g{0, 2, 1};
  std::vector<Perm> elems;
  for (int i = 0; i < 3; ++i) {
    Perm ci = id;
    for (int r = 0; r < i; ++r) ci = comp(c, ci);
    elems.push_back(ci);
    elems.push_back(comp(ci, g));
  }
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t x = 0; x < 6; ++x)
    for (std::size_t y = 0; y < 6; ++y) {
      const Perm p = comp(elems[x], elems[y]);
      t[x][y] = static_cast<std::size_t>(std::find(elems.begin(), elems.end(), p) - elems.begin());
    }
  return t;
}

/// Entrywise comparison without going through wcpx::equals.
inline bool same_entries(const LinMap& f, const LinMap& g) {
  if (f.rows() != g.rows() || f.cols() != g.cols()) return false;
  for (std::size_t r = 0; r < f.rows(); ++r)
    for (std::size_t c = 0; c < f.cols(); ++c)
      if (!(f.at(r, c) == g.at(r, c))) return false;
  return true;
}

/// (xy)z = x(yz) on all basis triples of an n-dim product.
inline bool associative(const LinMap& mul, std::size_t n) {
  const FieldSpec& k = mul.field();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Vec xy = bilinear(mul, unit_vec(k, n, x), unit_vec(k, n, y));
      for (std::size_t z = 0; z < n; ++z) {
        const Vec yz = bilinear(mul, unit_vec(k, n, y), unit_vec(k, n, z));
        if (bilinear(mul, xy, unit_vec(k, n, z)) != bilinear(mul, unit_vec(k, n, x), yz)) return false;
      }
    }
  return true;
}

/// u·x = x = x·u for every basis vector x.
inline bool unital(const LinMap& mul, const Vec& u, std::size_t n) {
  const FieldSpec& k = mul.field();
  for (std::size_t x = 0; x < n; ++x) {
    const Vec e = unit_vec(k, n, x);
    if (bilinear(mul, u, e) != e || bilinear(mul, e, u) != e) return false;
  }
  return true;
}

/// e∘μ = μ and μ∘(e⊗e) = μ.
inline bool normalized(const LinMap& mul, const LinMap& e, std::size_t n) {
  const FieldSpec& k = mul.field();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Vec xy = bilinear(mul, unit_vec(k, n, x), unit_vec(k, n, y));
      if (linear(e, xy) != xy) return false;
      if (bilinear(mul, col(e, x), col(e, y)) != xy) return false;
    }
  return true;
}

/// Product of two basis vectors of an n-dim product.
inline Vec times(const LinMap& mul, std::size_t n, std::size_t x, std::size_t y) {
  return bilinear(mul, unit_vec(mul.field(), n, x), unit_vec(mul.field(), n, y));
}

}  // namespace oracle

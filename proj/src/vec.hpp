#pragma once

// Coordinate-vector helpers for the element-wise formulas. Internal.

#include <tuple>
#include <vector>

#include "wcpx/linmap.hpp"

namespace wcpx::detail {

using Vec = std::vector<Scalar>;

inline Vec basis_vec(const FieldSpec& k, std::size_t n, std::size_t i) {
  Vec v(n, Scalar::zero(k));
  v[i] = Scalar::one(k);
  return v;
}

/// f(x) for f: X -> Y.
inline Vec eval(const LinMap& f, const Vec& x) {
  Vec out(f.rows(), Scalar::zero(f.field()));
  for (std::size_t c = 0; c < f.cols(); ++c) {
    if (x[c].is_zero()) continue;
    for (std::size_t r = 0; r < f.rows(); ++r)
      if (!f.at(r, c).is_zero()) out[r] = out[r] + f.at(r, c) * x[c];
  }
  return out;
}

/// f(x⊗y) for f: X⊗Y -> Z.
inline Vec eval2(const LinMap& f, const Vec& x, const Vec& y) {
  Vec xy(x.size() * y.size(), Scalar::zero(f.field()));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (!y[j].is_zero()) xy[i * y.size() + j] = x[i] * y[j];
  }
  return eval(f, xy);
}

/// Nonzero terms of δ(e_i) as (left, right, coefficient).
inline std::vector<std::tuple<std::size_t, std::size_t, Scalar>> coproduct_terms(const LinMap& comul,
                                                                                   std::size_t dim, std::size_t i) {
  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> out;
  for (std::size_t r = 0; r < comul.rows(); ++r)
    if (!comul.at(r, i).is_zero()) out.emplace_back(r / dim, r % dim, comul.at(r, i));
  return out;
}

/// Nonzero terms of (δ⊗C)∘δ(e_i) as (first, second, third, coefficient).
inline std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>> coproduct3_terms(
    const LinMap& comul, std::size_t dim, std::size_t i) {
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>> out;
  for (const auto& [x, z, c] : coproduct_terms(comul, dim, i))
    for (const auto& [a, b, d] : coproduct_terms(comul, dim, x)) out.emplace_back(a, b, z, c * d);
  return out;
}

}  // namespace wcpx::detail

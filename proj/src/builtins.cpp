#include "wcpx/builtins.hpp"

#include <stdexcept>

namespace wcpx::builtin {

namespace {

struct AbelianGroup {
  std::vector<std::size_t> orders;

  std::size_t size() const {
    std::size_t n = 1;
    for (auto o : orders) n *= o;
    return n;
  }
  std::vector<std::size_t> digits(std::size_t x) const {
    std::vector<std::size_t> d(orders.size());
    for (std::size_t k = orders.size(); k-- > 0;) {
      d[k] = x % orders[k];
      x /= orders[k];
    }
    return d;
  }
  std::size_t index(const std::vector<std::size_t>& d) const {
    std::size_t x = 0;
    for (std::size_t k = 0; k < orders.size(); ++k) x = x * orders[k] + d[k];
    return x;
  }
  std::size_t mul(std::size_t x, std::size_t y) const {
    auto a = digits(x), b = digits(y);
    for (std::size_t k = 0; k < orders.size(); ++k) a[k] = (a[k] + b[k]) % orders[k];
    return index(a);
  }
  std::size_t inv(std::size_t x) const {
    auto a = digits(x);
    for (std::size_t k = 0; k < orders.size(); ++k) a[k] = (orders[k] - a[k]) % orders[k];
    return index(a);
  }
};

}  // namespace

HopfData group_algebra(const FieldSpec& field, const std::vector<std::size_t>& orders) {
  if (orders.empty()) throw std::invalid_argument("group_algebra needs at least one cyclic factor");
  for (auto o : orders)
    if (o == 0) throw std::invalid_argument("group_algebra: cyclic order must be positive");
  const AbelianGroup g{orders};
  const std::size_t n = g.size();
  std::vector<long> unit(n, 0), counit(n, 1);
  unit[0] = 1;
  std::vector<MulEntry> products;
  std::vector<ComulEntry> coproducts;
  for (std::size_t x = 0; x < n; ++x) {
    coproducts.push_back({x, x, x, 1});
    for (std::size_t y = 0; y < n; ++y) products.push_back({x, y, g.mul(x, y), 1});
  }
  LinMap antipode(field, ObjectShape{n}, ObjectShape{n});
  for (std::size_t x = 0; x < n; ++x) antipode.set(g.inv(x), x, Scalar::one(field));
  return HopfData{{make_algebra(field, n, unit, products), make_coalgebra(field, n, counit, coproducts)},
                  std::move(antipode)};
}

HopfData dual_group_algebra(const FieldSpec& field, std::size_t n) {
  if (n == 0) throw std::invalid_argument("dual_group_algebra: order must be positive");
  const AbelianGroup g{{n}};
  std::vector<long> unit(n, 1), counit(n, 0);
  counit[0] = 1;
  std::vector<MulEntry> products;
  std::vector<ComulEntry> coproducts;
  for (std::size_t x = 0; x < n; ++x) {
    products.push_back({x, x, x, 1});
    for (std::size_t y = 0; y < n; ++y) coproducts.push_back({g.mul(x, y), x, y, 1});
  }
  LinMap antipode(field, ObjectShape{n}, ObjectShape{n});
  for (std::size_t x = 0; x < n; ++x) antipode.set(g.inv(x), x, Scalar::one(field));
  return HopfData{{make_algebra(field, n, unit, products), make_coalgebra(field, n, counit, coproducts)},
                  std::move(antipode)};
}

HopfData sweedler_h4(const FieldSpec& field) {
  if (field.characteristic() == 2) throw FieldError("sweedler_h4 requires characteristic different from 2");
  enum : std::size_t { one = 0, g = 1, x = 2, gx = 3 };
  std::vector<MulEntry> products = {
      {one, one, one, 1}, {one, g, g, 1},   {one, x, x, 1},    {one, gx, gx, 1},
      {g, one, g, 1},     {g, g, one, 1},   {g, x, gx, 1},     {g, gx, x, 1},
      {x, one, x, 1},     {x, g, gx, -1},   {gx, one, gx, 1},  {gx, g, x, -1},
  };
  // x·x = 0, x·gx = -g x x = 0, gx·x = 0, gx·gx = -g g x x = 0.
  std::vector<ComulEntry> coproducts = {
      {one, one, one, 1}, {g, g, g, 1}, {x, x, one, 1}, {x, g, x, 1}, {gx, gx, g, 1}, {gx, one, gx, 1},
  };
  LinMap antipode(field, ObjectShape{4}, ObjectShape{4});
  antipode.set(one, one, Scalar::one(field));
  antipode.set(g, g, Scalar::one(field));
  antipode.set(gx, x, -Scalar::one(field));
  antipode.set(x, gx, Scalar::one(field));
  return HopfData{{make_algebra(field, 4, {1, 0, 0, 0}, products),
                   make_coalgebra(field, 4, {1, 1, 0, 0}, coproducts)},
                  std::move(antipode)};
}

AlgebraData product_algebra(const FieldSpec& field, std::size_t n) {
  if (n == 0) throw std::invalid_argument("product_algebra: n must be positive");
  std::vector<MulEntry> products;
  for (std::size_t i = 0; i < n; ++i) products.push_back({i, i, i, 1});
  return make_algebra(field, n, std::vector<long>(n, 1), products);
}

AlgebraData matrix_algebra(const FieldSpec& field, std::size_t n) {
  if (n == 0) throw std::invalid_argument("matrix_algebra: n must be positive");
  std::vector<MulEntry> products;
  std::vector<long> unit(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    unit[i * n + i] = 1;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) products.push_back({i * n + j, j * n + l, i * n + l, 1});
  }
  return make_algebra(field, n * n, unit, products);
}

Structure lookup(const std::string& name, const std::vector<std::size_t>& params, const FieldSpec& field) {
  auto single = [&]() {
    if (params.size() != 1) throw std::invalid_argument(name + " takes exactly one parameter");
    return params[0];
  };
  if (name == "group_algebra") return group_algebra(field, params);
  if (name == "dual_group_algebra") return dual_group_algebra(field, single());
  if (name == "sweedler_h4") {
    if (!params.empty()) throw std::invalid_argument("sweedler_h4 takes no parameters");
    return sweedler_h4(field);
  }
  if (name == "product_algebra") return product_algebra(field, single());
  if (name == "matrix_algebra") return matrix_algebra(field, single());
  throw std::invalid_argument("unknown builtin '" + name + "'");
}

}  // namespace wcpx::builtin

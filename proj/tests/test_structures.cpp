#include <doctest.h>

#include "fixture_sets.hpp"
#include "oracles.hpp"
#include "wcpx/builtins.hpp"

using namespace wcpx;

namespace {

const FieldSpec Q = FieldSpec::rationals();

std::vector<std::vector<std::size_t>> cyclic_table(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

}  // namespace

TEST_CASE("shipped Hopf algebras satisfy every axiom") {
  for (const FieldSpec& k : fixtures::fields()) {
    CAPTURE(k.name());
    for (std::size_t n = 1; n <= 5; ++n) CHECK(check_hopf_full(builtin::group_algebra(k, n)).passed());
    CHECK(check_hopf_full(builtin::group_algebra(k, {2, 2})).passed());
    CHECK(check_hopf_full(builtin::group_algebra(k, {2, 3})).passed());
    CHECK(check_hopf_full(builtin::dual_group_algebra(k, 3)).passed());
    CHECK(check_hopf_full(builtin::dual_group_algebra(k, 4)).passed());
    CHECK(check_hopf_full(builtin::sweedler_h4(k)).passed());
    CHECK(check_algebra(builtin::matrix_algebra(k, 2)).passed());
    CHECK(check_algebra(builtin::product_algebra(k, 3)).passed());
  }
}

TEST_CASE("group algebra constants follow the group law") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const HopfData h = builtin::group_algebra(Q, n);
    CHECK(oracle::same_entries(h.algebra().mul, oracle::group_algebra_product(Q, cyclic_table(n))));
  }
  const HopfData v = builtin::group_algebra(Q, {2, 2});
  CHECK(oracle::same_entries(v.algebra().mul, oracle::group_algebra_product(Q, oracle::klein_four_table())));
}

TEST_CASE("braided tensor of two kC2 is the Klein four-group algebra") {
  const HopfData c2 = builtin::group_algebra(Q, 2);
  const AlgebraData t = tensor_algebra(c2.algebra(), c2.algebra());
  CHECK(oracle::same_entries(t.mul, oracle::group_algebra_product(Q, oracle::klein_four_table())));
}

TEST_CASE("Sweedler's algebra is noncommutative with the expected centre") {
  const HopfData h = builtin::sweedler_h4(Q);
  // xg = -gx forces every central element to be a scalar.
  CHECK(oracle::centre_dim(h.algebra().mul, 4) == 1);
  CHECK_THROWS_AS(builtin::sweedler_h4(FieldSpec::prime(2)), FieldError);
}

TEST_CASE("a wrong unit is reported with a witness") {
  AlgebraData a = builtin::group_algebra(Q, 2).algebra();
  a.unit = a.unit.with_entry(0, 0, Scalar(Q, 0)).with_entry(1, 0, Scalar(Q, 1));
  const Report r = check_algebra(a, "kC2");
  CHECK(r.status("algebra.unit", "kC2") == Status::fail);
  CHECK(r.passes("algebra.assoc"));
  const CheckRecord* rec = r.find("algebra.unit");
  REQUIRE(rec->witness);
  CHECK(rec->witness->input == std::vector<std::size_t>{0});
  CHECK(rec->witness->lhs.is_zero());
  CHECK(rec->witness->rhs.is_one());
}

TEST_CASE("a non-associative product fails associativity only") {
  AlgebraData a = builtin::product_algebra(Q, 2);
  // e2·e2 = e1 + e2 keeps the unit e1 + e2 but breaks associativity.
  a.mul = a.mul.with_entry(0, 3, Scalar(Q, 1));
  const Report r = check_algebra(a);
  CHECK(r.status("algebra.assoc") == Status::fail);
}

TEST_CASE("primitive coproduct on a group algebra is not a bialgebra") {
  HopfData h = builtin::group_algebra(Q, 2);
  BialgebraData b = h.bialgebra;
  // δ(g) = g⊗1 + 1⊗g, ε(g) = 0: a coalgebra, but not compatible with g² = 1.
  LinMap comul(Q, {2}, {2, 2});
  comul.set(0, 0, Scalar(Q, 1));
  comul.set(2, 1, Scalar(Q, 1));
  comul.set(1, 1, Scalar(Q, 1));
  b.coalgebra.comul = comul;
  b.coalgebra.counit = LinMap(Q, {2}, {}, {{1, 0}});
  const Report r = check_bialgebra(b);
  CHECK(r.passes("coalgebra.coassoc"));
  CHECK(r.passes("coalgebra.counit"));
  CHECK(r.status("bialgebra.comul_multiplicative") == Status::fail);
  CHECK(r.status("bialgebra.counit_multiplicative") == Status::fail);
}

TEST_CASE("a broken antipode fails the antipode identities") {
  HopfData h = builtin::sweedler_h4(Q);
  h.antipode = identity(Q, 4);
  const Report r = check_hopf(h);
  CHECK(r.status("hopf.antipode_left") == Status::fail);
  CHECK(r.status("hopf.antipode_right") == Status::fail);
}

TEST_CASE("make_algebra from sparse constants") {
  const AlgebraData a = make_algebra(Q, 2, {1, 0}, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, -1, 2}});
  CHECK(a.mul.at(0, 3) == Scalar(Q, -1) / Scalar(Q, 2));
  CHECK(check_algebra(a).passed());
  CHECK_THROWS_AS(make_algebra(Q, 2, {1, 0}, {{0, 2, 0, 1}}), DimensionError);
}

TEST_CASE("builtin lookup") {
  const auto s = builtin::lookup("group_algebra", {2, 3}, Q);
  CHECK(std::get<HopfData>(s).dim() == 6);
  CHECK(std::get<AlgebraData>(builtin::lookup("matrix_algebra", {3}, Q)).dim == 9);
  CHECK_THROWS_AS(builtin::lookup("no_such_thing", {}, Q), std::invalid_argument);
}

#include <doctest.h>

#include <random>

#include "gen.hpp"
#include "oracles.hpp"
#include "wcpx/linmap.hpp"

using namespace wcpx;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F5 = FieldSpec::prime(5);

LinMap naive_compose(const LinMap& f, const LinMap& g) {
  LinMap out(f.field(), g.source(), f.target());
  for (std::size_t r = 0; r < f.rows(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c) {
      Scalar s = Scalar::zero(f.field());
      for (std::size_t m = 0; m < f.cols(); ++m) s += f.at(r, m) * g.at(m, c);
      out.set(r, c, s);
    }
  return out;
}

/// I + s·E_ij.
LinMap elementary(const FieldSpec& k, std::size_t n, std::size_t i, std::size_t j, const Scalar& s) {
  LinMap e = identity(k, n);
  e.set(i, j, s);
  return e;
}

}  // namespace

TEST_CASE("field declarations") {
  CHECK(FieldSpec::parse("Q").is_rational());
  CHECK(FieldSpec::parse("F7").characteristic() == 7);
  CHECK(FieldSpec::prime(2147483647).characteristic() == 2147483647);
  CHECK_THROWS_AS(FieldSpec::prime(9), FieldError);
  CHECK_THROWS_AS(FieldSpec::prime(2147483659ULL), FieldError);
  CHECK_THROWS_AS(FieldSpec::parse("R"), FieldError);
  CHECK_THROWS_AS(FieldSpec::parse("F"), FieldError);
  CHECK(F5.name() == "F5");
}

TEST_CASE("scalar parsing and canonical text") {
  CHECK(Scalar::parse(Q, "-6/4").to_string() == "-3/2");
  CHECK(Scalar::parse(Q, "4/-2").to_string() == "-2");
  CHECK(Scalar::parse(F5, "1/2").to_string() == "3");
  CHECK(Scalar::parse(F5, "-1").to_string() == "4");
  CHECK_THROWS_AS(Scalar::parse(Q, "1/0"), FieldError);
  CHECK_THROWS_AS(Scalar::parse(F5, "1/5"), FieldError);
  CHECK_THROWS_AS(Scalar::parse(Q, "x"), FieldError);
  CHECK_THROWS_AS(Scalar::parse(Q, ""), FieldError);
}

TEST_CASE("mixing fields is an error") {
  CHECK_THROWS_AS(Scalar(Q, 1) + Scalar(F5, 1), FieldError);
  CHECK_THROWS_AS(Scalar::zero(F5).inverse(), FieldError);
  const LinMap a = identity(Q, 2), b = identity(F5, 2);
  CHECK_THROWS_AS(compose(a, b), FieldError);
}

TEST_CASE("rational arithmetic agrees with mpq_class") {
  std::mt19937 rng(gen::kSeed);
  for (int t = 0; t < 200; ++t) {
    const Scalar x = gen::scalar(rng, Q), y = gen::scalar(rng, Q, false);
    const mpq_class a = x.rational(), b = y.rational();
    CHECK((x + y).rational() == a + b);
    CHECK((x - y).rational() == a - b);
    CHECK((x * y).rational() == a * b);
    CHECK((x / y).rational() == a / b);
  }
}

TEST_CASE("prime-field arithmetic agrees with integer residues") {
  std::mt19937 rng(gen::kSeed + 1);
  const std::uint64_t p = 2147483629;  // prime below 2^31
  const FieldSpec k = FieldSpec::prime(p);
  std::uniform_int_distribution<std::uint64_t> d(0, p - 1);
  for (int t = 0; t < 200; ++t) {
    const std::uint64_t a = d(rng), b = d(rng);
    const Scalar x(k, static_cast<long>(a)), y(k, static_cast<long>(b));
    CHECK((x + y).residue() == (a + b) % p);
    CHECK((x * y).residue() == static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p));
    CHECK((x - y).residue() == (a + p - b) % p);
    if (b != 0) CHECK(((x / y) * y) == x);
  }
}

TEST_CASE("shapes flatten row-major") {
  const ObjectShape s{2, 3, 4};
  CHECK(s.total() == 24);
  CHECK(s.flatten({1, 2, 3}) == 23);
  CHECK(s.unflatten(13) == std::vector<std::size_t>{1, 0, 1});
  CHECK(ObjectShape{1, 3}.equivalent(ObjectShape{3}));
  CHECK_FALSE(ObjectShape{2, 3}.equivalent(ObjectShape{6}));
  CHECK_THROWS_AS(s.flatten({2, 0, 0}), DimensionError);
}

TEST_CASE("composition matches the triple loop") {
  std::mt19937 rng(gen::kSeed + 2);
  for (int t = 0; t < gen::kTrials; ++t) {
    const FieldSpec k = gen::field(rng);
    const std::size_t a = gen::size(rng, 1, 4), b = gen::size(rng, 1, 4), c = gen::size(rng, 1, 4);
    const LinMap f = gen::linmap(rng, k, {b}, {a}), g = gen::linmap(rng, k, {c}, {b});
    CHECK(oracle::same_entries(compose(f, g), naive_compose(f, g)));
  }
  CHECK_THROWS_AS(compose(identity(Q, 2), identity(Q, 3)), DimensionError);
}

TEST_CASE("tensor product entries and the interchange law") {
  std::mt19937 rng(gen::kSeed + 3);
  for (int t = 0; t < gen::kTrials; ++t) {
    const FieldSpec k = gen::field(rng);
    const std::size_t m = gen::size(rng, 1, 3), n = gen::size(rng, 1, 3), p = gen::size(rng, 1, 3),
                      q = gen::size(rng, 1, 3);
    const LinMap f = gen::linmap(rng, k, {m}, {n}), g = gen::linmap(rng, k, {p}, {q});
    const LinMap fg = tensor(f, g);
    bool ok = true;
    for (std::size_t r1 = 0; r1 < n; ++r1)
      for (std::size_t r2 = 0; r2 < q; ++r2)
        for (std::size_t c1 = 0; c1 < m; ++c1)
          for (std::size_t c2 = 0; c2 < p; ++c2)
            ok = ok && fg.at(r1 * q + r2, c1 * p + c2) == f.at(r1, c1) * g.at(r2, c2);
    CHECK(ok);
    const LinMap f2 = gen::linmap(rng, k, {n}, {m}), g2 = gen::linmap(rng, k, {q}, {p});
    CHECK(equals(compose(tensor(f2, g2), tensor(f, g)), tensor(compose(f2, f), compose(g2, g))));
  }
}

TEST_CASE("the swap is natural and squares to the identity") {
  std::mt19937 rng(gen::kSeed + 4);
  for (int t = 0; t < gen::kTrials; ++t) {
    const FieldSpec k = gen::field(rng);
    const std::size_t m = gen::size(rng, 1, 3), n = gen::size(rng, 1, 3), m2 = gen::size(rng, 1, 3),
                      n2 = gen::size(rng, 1, 3);
    const LinMap f = gen::linmap(rng, k, {m}, {m2}), g = gen::linmap(rng, k, {n}, {n2});
    CHECK(equals(compose(braiding(k, m2, n2), tensor(f, g)), compose(tensor(g, f), braiding(k, m, n))));
    CHECK(equals(compose(braiding(k, n, m), braiding(k, m, n)), identity(k, ObjectShape{m, n})));
  }
  const LinMap c = braiding(Q, 2, 3);
  CHECK(c.at(1 * 2 + 0, 0 * 3 + 1).is_one());  // e0⊗f1 -> f1⊗e0
}

TEST_CASE("equals reports the first differing entry") {
  LinMap f = identity(Q, 3);
  const LinMap g = f.with_entry(2, 1, Scalar(Q, 5));
  const Comparison cmp = equals(f, g);
  REQUIRE_FALSE(cmp.equal);
  CHECK(cmp.difference->col == 1);
  CHECK(cmp.difference->row == 2);
  CHECK(cmp.difference->lhs.is_zero());
  CHECK(cmp.difference->rhs == Scalar(Q, 5));
  CHECK(equals(f, identity(Q, 2)).difference->shape_mismatch);
}

TEST_CASE("rank agrees with independent row reduction") {
  std::mt19937 rng(gen::kSeed + 5);
  for (int t = 0; t < gen::kTrials * 2; ++t) {
    const FieldSpec k = gen::field(rng);
    const LinMap f = gen::linmap(rng, k, {gen::size(rng, 1, 6)}, {gen::size(rng, 1, 6)}, 0.4);
    CHECK(rank(f) == oracle::rank(f));
  }
  CHECK(rank(zero_map(Q, {3}, {4})) == 0);
}

TEST_CASE("splitting random idempotents") {
  std::mt19937 rng(gen::kSeed + 6);
  for (int t = 0; t < gen::kTrials; ++t) {
    const FieldSpec k = gen::field(rng);
    const std::size_t n = gen::size(rng, 1, 6);
    LinMap p = identity(k, n), pinv = identity(k, n);
    for (int s = 0; s < 8 && n > 1; ++s) {
      const std::size_t i = gen::size(rng, 0, n - 1), j = (i + gen::size(rng, 1, n - 1)) % n;
      const Scalar x = gen::scalar(rng, k);
      p = compose(p, elementary(k, n, i, j, x));
      pinv = compose(elementary(k, n, i, j, -x), pinv);
    }
    LinMap d = zero_map(k, {n}, {n});
    std::size_t r = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (std::bernoulli_distribution(0.5)(rng)) {
        d.set(i, i, Scalar::one(k));
        ++r;
      }
    const LinMap e = compose(p, d, pinv);
    if (r == 0) {
      CHECK_THROWS_AS(split_idempotent(e), PreconditionError);
      continue;
    }
    const Splitting s = split_idempotent(e);
    CHECK(s.mid.total() == r);
    CHECK(equals(compose(s.projection, s.injection), identity(k, s.mid)));
    CHECK(equals(compose(s.injection, s.projection), e));
  }
}

TEST_CASE("splitting rejects a non-idempotent") {
  LinMap f = identity(Q, 2).scaled(Scalar(Q, 2));
  CHECK_THROWS_AS(split_idempotent(f), PreconditionError);
}

TEST_CASE("the zero idempotent has no splitting object") {
  // Tensor factors are positive, so there is no zero-dimensional middle object.
  CHECK_THROWS_AS(split_idempotent(zero_map(F5, {3}, {3})), PreconditionError);
}

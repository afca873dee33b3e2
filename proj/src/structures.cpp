#include "wcpx/structures.hpp"

namespace wcpx {

AlgebraData make_algebra(const FieldSpec& field, std::size_t dim, const std::vector<long>& unit,
                         const std::vector<MulEntry>& products) {
  const ObjectShape a{dim};
  LinMap eta(field, ObjectShape::unit(), a);
  if (unit.size() != dim) throw DimensionError("unit has " + std::to_string(unit.size()) + " entries, expected " + std::to_string(dim));
  for (std::size_t k = 0; k < dim; ++k) eta.set(k, 0, Scalar(field, unit[k]));
  LinMap mu(field, a * a, a);
  for (const auto& e : products)
    mu.set(e.out, (a * a).flatten({e.left, e.right}), Scalar(field, e.num, e.den));
  return AlgebraData{dim, std::move(eta), std::move(mu)};
}

CoalgebraData make_coalgebra(const FieldSpec& field, std::size_t dim, const std::vector<long>& counit,
                             const std::vector<ComulEntry>& coproducts) {
  const ObjectShape c{dim};
  LinMap eps(field, c, ObjectShape::unit());
  if (counit.size() != dim) throw DimensionError("counit has " + std::to_string(counit.size()) + " entries, expected " + std::to_string(dim));
  for (std::size_t k = 0; k < dim; ++k) eps.set(0, k, Scalar(field, counit[k]));
  LinMap delta(field, c, c * c);
  for (const auto& e : coproducts)
    delta.set((c * c).flatten({e.left, e.right}), e.in, Scalar(field, e.num, e.den));
  return CoalgebraData{dim, std::move(eps), std::move(delta)};
}

void require_shapes(const AlgebraData& a) {
  const ObjectShape obj = a.object();
  if (a.unit.source().total() != 1 || a.unit.target().total() != a.dim)
    throw DimensionError("unit must be K -> " + obj.to_string() + ", got " + a.unit.source().to_string() +
                         " -> " + a.unit.target().to_string());
  if (a.mul.source().total() != a.dim * a.dim || a.mul.target().total() != a.dim)
    throw DimensionError("product must be " + (obj * obj).to_string() + " -> " + obj.to_string());
}

void require_shapes(const CoalgebraData& c) {
  const ObjectShape obj = c.object();
  if (c.counit.source().total() != c.dim || c.counit.target().total() != 1)
    throw DimensionError("counit must be " + obj.to_string() + " -> K");
  if (c.comul.source().total() != c.dim || c.comul.target().total() != c.dim * c.dim)
    throw DimensionError("coproduct must be " + obj.to_string() + " -> " + (obj * obj).to_string());
}

AlgebraData tensor_algebra(const AlgebraData& a, const AlgebraData& b, const Braiding& braid) {
  const FieldSpec& k = a.field();
  LinMap unit = tensor(a.unit, b.unit);
  LinMap mul = compose(tensor(a.mul, b.mul), tensor(a.id(), braid(k, b.object(), a.object()), b.id()));
  const std::size_t dim = a.dim * b.dim;
  return AlgebraData{dim, unit.reshaped(ObjectShape::unit(), ObjectShape{dim}),
                     mul.reshaped(ObjectShape{dim, dim}, ObjectShape{dim})};
}

LinMap tensor_comul(const CoalgebraData& c, const CoalgebraData& d, const Braiding& braid) {
  return compose(tensor(c.id(), braid(c.field(), c.object(), d.object()), d.id()), tensor(c.comul, d.comul));
}

Report check_algebra(const AlgebraData& a, const std::string& subject) {
  require_shapes(a);
  const LinMap id = a.id();
  Report r;
  r.add(check_all_equal("algebra.unit",
                        {{compose(a.mul, tensor(id, a.unit)), id}, {compose(a.mul, tensor(a.unit, id)), id}},
                        subject));
  r.add(check_equal("algebra.assoc", compose(a.mul, tensor(id, a.mul)), compose(a.mul, tensor(a.mul, id)),
                    subject));
  return r;
}

Report check_coalgebra(const CoalgebraData& c, const std::string& subject) {
  require_shapes(c);
  const LinMap id = c.id();
  Report r;
  r.add(check_all_equal("coalgebra.counit",
                        {{compose(tensor(c.counit, id), c.comul), id}, {compose(tensor(id, c.counit), c.comul), id}},
                        subject));
  r.add(check_equal("coalgebra.coassoc", compose(tensor(c.comul, id), c.comul),
                    compose(tensor(id, c.comul), c.comul), subject));
  return r;
}

Report check_bialgebra(const BialgebraData& b, const std::string& subject, const Braiding& braid) {
  const auto& alg = b.algebra;
  const auto& coalg = b.coalgebra;
  if (alg.dim != coalg.dim)
    throw DimensionError("bialgebra: algebra dimension " + std::to_string(alg.dim) +
                         " differs from coalgebra dimension " + std::to_string(coalg.dim));
  Report r = check_algebra(alg, subject);
  r.merge(check_coalgebra(coalg, subject));
  const FieldSpec& k = alg.field();
  const LinMap id = alg.id();
  const LinMap mul_hh = compose(tensor(alg.mul, alg.mul), tensor(id, braid(k, alg.object(), alg.object()), id));
  const LinMap one = identity(k, ObjectShape::unit());
  r.add(check_equal("bialgebra.comul_multiplicative", compose(coalg.comul, alg.mul),
                    compose(mul_hh, tensor(coalg.comul, coalg.comul)), subject));
  r.add(check_equal("bialgebra.counit_multiplicative", compose(coalg.counit, alg.mul),
                    tensor(coalg.counit, coalg.counit), subject));
  r.add(check_equal("bialgebra.comul_unit", compose(coalg.comul, alg.unit), tensor(alg.unit, alg.unit), subject));
  r.add(check_equal("bialgebra.counit_unit", compose(coalg.counit, alg.unit), one, subject));
  return r;
}

Report check_hopf(const HopfData& h, const std::string& subject) {
  const auto& alg = h.algebra();
  const auto& coalg = h.coalgebra();
  if (h.antipode.source().total() != h.dim() || h.antipode.target().total() != h.dim())
    throw DimensionError("antipode must be an endomorphism of " + alg.object().to_string());
  const LinMap id = alg.id();
  const LinMap unit_counit = compose(alg.unit, coalg.counit);
  Report r;
  r.add(check_equal("hopf.antipode_left", compose(alg.mul, tensor(h.antipode, id), coalg.comul), unit_counit,
                    subject));
  r.add(check_equal("hopf.antipode_right", compose(alg.mul, tensor(id, h.antipode), coalg.comul), unit_counit,
                    subject));
  return r;
}

Report check_hopf_full(const HopfData& h, const std::string& subject, const Braiding& braid) {
  Report r = check_bialgebra(h.bialgebra, subject, braid);
  r.merge(check_hopf(h, subject));
  return r;
}

}  // namespace wcpx

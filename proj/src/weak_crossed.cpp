#include "wcpx/weak_crossed.hpp"

#include <utility>

namespace wcpx {

namespace {

LinMap canonical(const LinMap& f, const ObjectShape& source, const ObjectShape& target, const char* name) {
  if (f.source().total() != source.total() || f.target().total() != target.total())
    throw DimensionError(std::string(name) + " must be " + source.to_string() + " -> " + target.to_string() +
                         ", got " + f.source().to_string() + " -> " + f.target().to_string());
  return f.reshaped(source, target);
}

/// The recurring pieces of the quadruple formulas.
struct Terms {
  const AlgebraData& a;
  std::size_t v;
  LinMap psi;
  LinMap sigma;
  LinMap id_a;
  LinMap id_v;
  LinMap mu_v;  // μ_A ⊗ V

  Terms(const AlgebraData& alg, std::size_t vdim, const LinMap& psi_in, const LinMap* sigma_in)
      : a(alg),
        v(vdim),
        psi(canonical(psi_in, {vdim, alg.dim}, {alg.dim, vdim}, "psi")),
        sigma(sigma_in ? canonical(*sigma_in, {vdim, vdim}, {alg.dim, vdim}, "sigma")
                       : LinMap(alg.field(), {vdim, vdim}, {alg.dim, vdim})),
        id_a(alg.id()),
        id_v(identity(alg.field(), ObjectShape{vdim})),
        mu_v(tensor(alg.mul, id_v)) {
    require_shapes(alg);
  }

  LinMap nabla() const { return compose(mu_v, tensor(id_a, psi), tensor(id_a, id_v, a.unit)); }

  LinMap product() const {
    return compose(mu_v, tensor(a.mul, sigma), tensor(id_a, psi, id_v));
  }
};

}  // namespace

CheckRecord compat_condition(const AlgebraData& a, std::size_t vdim, const LinMap& psi) {
  Terms t(a, vdim, psi, nullptr);
  return check_equal("wcp.compat", compose(t.mu_v, tensor(t.id_a, t.psi), tensor(t.psi, t.id_a)),
                     compose(t.psi, tensor(t.id_v, a.mul)));
}

CheckRecord twisted_condition(const AlgebraData& a, std::size_t vdim, const LinMap& psi, const LinMap& sigma) {
  Terms t(a, vdim, psi, &sigma);
  return check_equal("wcp.twisted", compose(t.mu_v, tensor(t.id_a, t.psi), tensor(t.sigma, t.id_a)),
                     compose(t.mu_v, tensor(t.id_a, t.sigma), tensor(t.psi, t.id_v), tensor(t.id_v, t.psi)));
}

CheckRecord cocycle_condition(const AlgebraData& a, std::size_t vdim, const LinMap& psi, const LinMap& sigma) {
  Terms t(a, vdim, psi, &sigma);
  return check_equal("wcp.cocycle", compose(t.mu_v, tensor(t.id_a, t.sigma), tensor(t.sigma, t.id_v)),
                     compose(t.mu_v, tensor(t.id_a, t.sigma), tensor(t.psi, t.id_v), tensor(t.id_v, t.sigma)));
}

LinMap nabla_formula(const AlgebraData& a, std::size_t vdim, const LinMap& psi) {
  return Terms(a, vdim, psi, nullptr).nabla().reshaped({a.dim, vdim}, {a.dim, vdim});
}

LinMap product_formula(const AlgebraData& a, std::size_t vdim, const LinMap& psi, const LinMap& sigma) {
  return Terms(a, vdim, psi, &sigma).product().reshaped({a.dim, vdim, a.dim, vdim}, {a.dim, vdim});
}

CrossedSystem::CrossedSystem(AlgebraData a, std::size_t vdim, LinMap psi, LinMap sigma)
    : a_(std::move(a)),
      vdim_(vdim),
      psi_(canonical(psi, {vdim, a_.dim}, {a_.dim, vdim}, "psi")),
      sigma_(canonical(sigma, {vdim, vdim}, {a_.dim, vdim}, "sigma")),
      compat_(compat_condition(a_, vdim_, psi_)) {
  if (compat_.status != Status::pass) {
    std::string where;
    if (compat_.witness && !compat_.witness->shape_mismatch) {
      const auto& w = *compat_.witness;
      where = " at input (";
      for (std::size_t k = 0; k < w.input.size(); ++k) where += (k ? "," : "") + std::to_string(w.input[k] + 1);
      where += "): " + w.lhs.to_string() + " vs " + w.rhs.to_string();
    }
    throw PreconditionError("psi is not compatible with the product of A" + where);
  }
}

Report check_compat(const CrossedSystem& sys) {
  Report r;
  r.add(sys.compat_record());
  return r;
}

Report nabla_report(const CrossedSystem& sys) {
  Terms t(sys.algebra(), sys.vdim(), sys.psi(), &sys.sigma());
  const LinMap nabla = t.nabla();
  Report r;
  r.add(check_equal("wcp.nabla_idempotent", compose(nabla, nabla), nabla));
  r.add(check_equal("wcp.nabla_left_linear", compose(nabla, t.mu_v), compose(t.mu_v, tensor(t.id_a, nabla))));
  return r;
}

LinMap build_nabla(const CrossedSystem& sys) {
  Report r = nabla_report(sys);
  if (!r.passed())
    throw InvariantViolation("nabla postcondition failed (" + r.first_failure() +
                             ") although psi is compatible with the product");
  return nabla_formula(sys.algebra(), sys.vdim(), sys.psi());
}

Report check_twisted(const CrossedSystem& sys) {
  Report r;
  r.add(twisted_condition(sys.algebra(), sys.vdim(), sys.psi(), sys.sigma()));
  return r;
}

Report check_cocycle(const CrossedSystem& sys) {
  Report r;
  r.add(cocycle_condition(sys.algebra(), sys.vdim(), sys.psi(), sys.sigma()));
  return r;
}

Report check_normalized(const CrossedSystem& sys) {
  const LinMap nabla = nabla_formula(sys.algebra(), sys.vdim(), sys.psi());
  Report r;
  r.add(check_equal("wcp.normalized_sigma", compose(nabla, sys.sigma()), sys.sigma()));
  return r;
}

CrossedSystem normalize_sigma(const CrossedSystem& sys, bool* changed) {
  const LinMap nabla = nabla_formula(sys.algebra(), sys.vdim(), sys.psi());
  LinMap sigma = compose(nabla, sys.sigma()).reshaped(sys.sigma().source(), sys.sigma().target());
  if (changed) *changed = !equals(sigma, sys.sigma());
  return CrossedSystem(sys.algebra(), sys.vdim(), sys.psi(), std::move(sigma));
}

AlgebraData WeakCrossedProduct::image_algebra() const {
  if (!unit_times) throw PreconditionError("A×V has no unit yet; run build_algebra with a preunit");
  const std::size_t d = image_dim();
  return AlgebraData{d, unit_times->reshaped(ObjectShape::unit(), ObjectShape{d}),
                     mu_times.reshaped(ObjectShape{d, d}, ObjectShape{d})};
}

WeakCrossedProduct build_products(const CrossedSystem& sys) {
  Report pre;
  pre.merge(check_compat(sys));
  pre.merge(check_twisted(sys));
  pre.merge(check_cocycle(sys));
  pre.merge(check_normalized(sys));
  if (!pre.passed())
    throw PreconditionError("weak crossed product precondition failed: " + pre.first_failure());

  const FieldSpec& k = sys.field();
  LinMap nabla = build_nabla(sys);
  Report report = pre;
  report.merge(nabla_report(sys));
  Splitting split = split_idempotent(nabla);
  const LinMap id_mid = identity(k, split.mid);
  report.add(check_equal("wcp.split_retraction", compose(split.projection, split.injection), id_mid));
  report.add(check_equal("wcp.split_factorization", compose(split.injection, split.projection), nabla));

  Terms t(sys.algebra(), sys.vdim(), sys.psi(), &sys.sigma());
  const ObjectShape av = sys.av();
  LinMap mu = t.product().reshaped(av * av, av);
  const LinMap id_av = identity(k, av);
  report.add(check_equal("wcp.product_assoc", compose(mu, tensor(mu, id_av)), compose(mu, tensor(id_av, mu))));
  report.add(check_all_equal("wcp.product_normalized",
                             {{compose(nabla, mu), mu}, {compose(mu, tensor(nabla, nabla)), mu}}));
  report.add(check_equal("wcp.product_left_linear", compose(mu, tensor(t.mu_v, id_av)),
                         compose(t.mu_v, tensor(t.id_a, mu))));

  const ObjectShape mid = split.mid;
  LinMap mu_times = compose(split.projection, mu, tensor(split.injection, split.injection)).reshaped(mid * mid, mid);
  const LinMap id_mid2 = identity(k, mid);
  report.add(check_equal("wcp.image_assoc", compose(mu_times, tensor(mu_times, id_mid2)),
                         compose(mu_times, tensor(id_mid2, mu_times))));
  if (!report.passed())
    throw InvariantViolation("weak crossed product assertion failed: " + report.first_failure());

  report.set_fact("nabla_rank", std::to_string(mid.total()));
  report.set_fact("tensor_dim", std::to_string(av.total()));
  return WeakCrossedProduct{sys,      std::move(nabla),    std::move(split), std::move(mu),
                            std::move(mu_times), std::nullopt, std::nullopt,   std::move(report)};
}

Report check_preunit(const WeakCrossedProduct& wcp, const LinMap& nu_in) {
  const auto& sys = wcp.system;
  const ObjectShape av = sys.av();
  const LinMap nu = canonical(nu_in, ObjectShape::unit(), av, "preunit");
  const FieldSpec& k = sys.field();
  const LinMap& m = wcp.mu_tensor;
  const LinMap id_av = identity(k, av);
  Terms t(sys.algebra(), sys.vdim(), sys.psi(), &sys.sigma());
  const LinMap& eta = sys.algebra().unit;

  Report r;
  const LinMap right = compose(m, tensor(id_av, nu));
  r.add(check_all_equal("wcp.preunit", {{right, compose(m, tensor(nu, id_av))},
                                        {right, compose(m, tensor(id_av, compose(m, tensor(nu, nu))))}}));
  const LinMap nabla_eta = compose(wcp.nabla, tensor(eta, t.id_v));
  r.add(check_equal("wcp.preunit_psi_sigma",
                    compose(t.mu_v, tensor(t.id_a, t.sigma), tensor(t.psi, t.id_v), tensor(t.id_v, nu)), nabla_eta));
  r.add(check_equal("wcp.preunit_sigma", compose(t.mu_v, tensor(t.id_a, t.sigma), tensor(nu, t.id_v)), nabla_eta));
  const LinMap beta = compose(t.mu_v, tensor(t.id_a, nu));
  r.add(check_equal("wcp.preunit_psi", compose(t.mu_v, tensor(t.id_a, t.psi), tensor(nu, t.id_a)), beta));
  r.add(check_equal("wcp.preunit_nabla", right, wcp.nabla));
  return r;
}

WeakCrossedProduct build_algebra(WeakCrossedProduct wcp, const LinMap& nu_in) {
  Report pre = check_preunit(wcp, nu_in);
  if (!pre.passed()) throw PreconditionError("preunit condition failed: " + pre.first_failure());
  const auto& sys = wcp.system;
  const ObjectShape av = sys.av();
  const LinMap nu = nu_in.reshaped(ObjectShape::unit(), av);
  const AlgebraData& a = sys.algebra();
  const FieldSpec& k = sys.field();
  const LinMap id_v = identity(k, ObjectShape{sys.vdim()});
  const LinMap mu_v = tensor(a.mul, id_v);

  wcp.report.merge(pre);
  wcp.preunit = nu;
  wcp.unit_times = compose(wcp.splitting.projection, nu);
  const AlgebraData image = wcp.image_algebra();
  wcp.report.merge(check_algebra(image, "A×V"));

  const LinMap beta = compose(mu_v, tensor(a.id(), nu));
  wcp.report.add(check_equal("wcp.beta_multiplicative", compose(wcp.mu_tensor, tensor(beta, beta)),
                             compose(beta, a.mul)));
  wcp.report.add(check_equal("wcp.beta_left_linear", compose(beta, a.mul), compose(mu_v, tensor(a.id(), beta))));
  const LinMap beta_bar = compose(wcp.splitting.projection, beta);
  wcp.report.add(check_all_equal("wcp.beta_bar_morphism",
                                 {{compose(image.mul, tensor(beta_bar, beta_bar)), compose(beta_bar, a.mul)},
                                  {compose(beta_bar, a.unit), image.unit}}));
  if (!wcp.report.passed())
    throw InvariantViolation("algebra assertion on A×V failed: " + wcp.report.first_failure());
  wcp.report.set_fact("image_dim", std::to_string(wcp.image_dim()));
  return wcp;
}

LinMap tensor_unit(const AlgebraData& a, const LinMap& eta_v) {
  LinMap nu = tensor(a.unit, eta_v);
  return nu.reshaped(ObjectShape::unit(), ObjectShape{a.dim, eta_v.target().total()});
}

}  // namespace wcpx

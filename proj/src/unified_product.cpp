#include "wcpx/unified_product.hpp"

#include "vec.hpp"
#include "wcpx/builtins.hpp"

namespace wcpx {

PreHopfObject PreHopfObject::from(const BialgebraData& b) {
  return {b.dim(), b.algebra.unit, b.algebra.mul, b.coalgebra.counit, b.coalgebra.comul};
}

namespace {

struct Ctx {
  FieldSpec k;
  ObjectShape H, A;
  LinMap id_h, id_a, eta_h, eta_a, mu_h, mu_a, delta_h, delta_a, eps_h, eps_a;
  LinMap c_ha, c_hh, c_ah, phi_h, phi_a, tau;

  explicit Ctx(const ExtendingDatum& d)
      : k(d.a.field()),
        H{d.h.dim},
        A{d.a.dim()},
        id_h(identity(k, H)),
        id_a(identity(k, A)),
        eta_h(d.h.unit),
        eta_a(d.a.algebra.unit),
        mu_h(d.h.mul),
        mu_a(d.a.algebra.mul),
        delta_h(d.h.comul),
        delta_a(d.a.coalgebra.comul),
        eps_h(d.h.counit),
        eps_a(d.a.coalgebra.counit),
        c_ha(d.braid(k, H, A)),
        c_hh(d.braid(k, H, H)),
        c_ah(d.braid(k, A, H)),
        phi_h(d.phi_h),
        phi_a(d.phi_a),
        tau(d.tau) {
    if (!(d.h.field() == k)) throw FieldError("H and A are over different fields");
    require_shapes(d.a.algebra);
    require_shapes(d.a.coalgebra);
    require_shapes(d.h.algebra());
    require_shapes(d.h.coalgebra());
    auto shape = [](LinMap& f, const ObjectShape& s, const ObjectShape& t, const char* name) {
      if (f.source().total() != s.total() || f.target().total() != t.total())
        throw DimensionError(std::string(name) + " must be " + s.to_string() + " -> " + t.to_string());
      f = f.reshaped(s, t);
    };
    const ObjectShape K = ObjectShape::unit();
    shape(eta_h, K, H, "eta_H");
    shape(eta_a, K, A, "eta_A");
    shape(mu_h, H * H, H, "mu_H");
    shape(mu_a, A * A, A, "mu_A");
    shape(delta_h, H, H * H, "delta_H");
    shape(delta_a, A, A * A, "delta_A");
    shape(eps_h, H, K, "epsilon_H");
    shape(eps_a, A, K, "epsilon_A");
    shape(phi_h, H * A, H, "right action");
    shape(phi_a, H * A, A, "left action");
    shape(tau, H * H, A, "tau");
  }

  LinMap delta_ha() const { return compose(tensor(id_h, c_ha, id_a), tensor(delta_h, delta_a)); }
  LinMap delta_hh() const { return compose(tensor(id_h, c_hh, id_h), tensor(delta_h, delta_h)); }
  LinMap psi() const { return compose(tensor(phi_a, phi_h), delta_ha()); }
  LinMap sigma() const { return compose(tensor(tau, mu_h), delta_hh()); }
};

}  // namespace

Report check_extending_datum(const ExtendingDatum& d) {
  Ctx c(d);
  Report r = check_bialgebra(d.a, "A", d.braid);
  r.add(check_all_equal("unified.h_coalgebra",
                        {{compose(tensor(c.eps_h, c.id_h), c.delta_h), c.id_h},
                         {compose(tensor(c.id_h, c.eps_h), c.delta_h), c.id_h},
                         {compose(tensor(c.delta_h, c.id_h), c.delta_h), compose(tensor(c.id_h, c.delta_h), c.delta_h)}}));
  r.add(check_equal("unified.h_comul_unit", compose(c.delta_h, c.eta_h), tensor(c.eta_h, c.eta_h)));
  r.add(check_all_equal("unified.h_unital",
                        {{compose(c.mu_h, tensor(c.eta_h, c.id_h)), c.id_h}, {compose(c.mu_h, tensor(c.id_h, c.eta_h)), c.id_h}}));
  const LinMap d_ha = c.delta_ha(), d_hh = c.delta_hh();
  r.add(check_all_equal("unified.right_action_coalgebra",
                        {{compose(tensor(c.phi_h, c.phi_h), d_ha), compose(c.delta_h, c.phi_h)},
                         {compose(c.eps_h, c.phi_h), tensor(c.eps_h, c.eps_a)}}));
  r.add(check_all_equal("unified.left_action_coalgebra",
                        {{compose(tensor(c.phi_a, c.phi_a), d_ha), compose(c.delta_a, c.phi_a)},
                         {compose(c.eps_a, c.phi_a), tensor(c.eps_h, c.eps_a)}}));
  r.add(check_all_equal("unified.tau_coalgebra", {{compose(tensor(c.tau, c.tau), d_hh), compose(c.delta_a, c.tau)},
                                                  {compose(c.eps_a, c.tau), tensor(c.eps_h, c.eps_h)}}));
  r.add(check_equal("unified.norm_left_action_on_unit", compose(c.phi_a, tensor(c.id_h, c.eta_a)),
                    compose(c.eta_a, c.eps_h)));
  r.add(check_equal("unified.norm_unit_left_action", compose(c.phi_a, tensor(c.eta_h, c.id_a)), c.id_a));
  r.add(check_equal("unified.norm_unit_right_action", compose(c.phi_h, tensor(c.eta_h, c.id_a)),
                    compose(c.eta_h, c.eps_a)));
  r.add(check_equal("unified.norm_right_action_by_unit", compose(c.phi_h, tensor(c.id_h, c.eta_a)), c.id_h));
  r.add(check_all_equal("unified.norm_tau", {{compose(c.tau, tensor(c.id_h, c.eta_h)), compose(c.eta_a, c.eps_h)},
                                             {compose(c.tau, tensor(c.eta_h, c.id_h)), compose(c.eta_a, c.eps_h)}}));
  return r;
}

UnifiedMaps induce_maps(const ExtendingDatum& d) {
  Ctx c(d);
  return {c.psi(), c.sigma()};
}

Report check_be(const ExtendingDatum& d) {
  Ctx c(d);
  const LinMap psi = c.psi(), sigma = c.sigma();
  Report r;
  r.add(check_equal("unified.be1", compose(c.mu_h, tensor(c.mu_h, c.id_h)),
                    compose(c.mu_h, tensor(c.phi_h, c.id_h), tensor(c.id_h, sigma))));
  r.add(check_equal("unified.be2", compose(c.phi_a, tensor(c.id_h, c.mu_a)),
                    compose(c.mu_a, tensor(c.id_a, c.phi_a), tensor(psi, c.id_a))));
  r.add(check_equal("unified.be3", compose(c.phi_h, tensor(c.mu_h, c.id_a)),
                    compose(c.mu_h, tensor(c.phi_h, c.id_h), tensor(c.id_h, psi))));
  r.add(check_equal("unified.be4", compose(c.mu_a, tensor(c.id_a, c.tau), tensor(psi, c.id_h), tensor(c.id_h, psi)),
                    compose(c.mu_a, tensor(c.id_a, c.phi_a), tensor(sigma, c.id_a))));
  r.add(check_equal("unified.be5", compose(c.mu_a, tensor(c.id_a, c.tau), tensor(psi, c.id_h), tensor(c.id_h, sigma)),
                    compose(c.mu_a, tensor(c.id_a, c.tau), tensor(sigma, c.id_h))));
  r.add(check_equal("unified.be6", compose(c.c_ah, psi), compose(tensor(c.phi_h, c.phi_a), c.delta_ha())));
  r.add(check_equal("unified.be7", compose(c.c_ah, sigma), compose(tensor(c.mu_h, c.tau), c.delta_hh())));
  const LinMap mu_hh = compose(tensor(c.mu_h, c.mu_h), tensor(c.id_h, c.c_hh, c.id_h));
  r.add(check_equal("unified.h_comul_multiplicative", compose(c.delta_h, c.mu_h),
                    compose(mu_hh, tensor(c.delta_h, c.delta_h))));
  r.add(check_equal("unified.h_counit_multiplicative", compose(c.eps_h, c.mu_h), tensor(c.eps_h, c.eps_h)));
  r.add(check_all_equal("unified.right_module",
                        {{compose(c.phi_h, tensor(c.id_h, c.eta_a)), c.id_h},
                         {compose(c.phi_h, tensor(c.phi_h, c.id_a)), compose(c.phi_h, tensor(c.id_h, c.mu_a))}}));
  return r;
}

namespace {

CheckRecord gated(CheckRecord record, bool hypothesis, const std::string& why) {
  if (hypothesis) return record;
  return make_record(record.id, Status::not_applicable, why);
}

}  // namespace

Report lemma_identities(const ExtendingDatum& d) {
  Ctx c(d);
  const LinMap psi = c.psi(), sigma = c.sigma(), d_ha = c.delta_ha(), d_hh = c.delta_hh();
  const Report be = check_be(d);
  Report r;
  r.add(check_equal("unified.psi_comul_h", compose(tensor(psi, c.phi_h), d_ha), compose(tensor(c.id_a, c.delta_h), psi)));
  r.add(check_equal("unified.psi_comul_a", compose(tensor(c.phi_a, psi), d_ha), compose(tensor(c.delta_a, c.id_h), psi)));
  r.add(check_equal("unified.sigma_comul_a", compose(tensor(c.delta_a, c.id_h), sigma),
                    compose(tensor(c.tau, sigma), d_hh)));
  r.add(check_equal("unified.psi_counit_h", c.phi_a, compose(tensor(c.id_a, c.eps_h), psi)));
  r.add(check_equal("unified.psi_counit_a", c.phi_h, compose(tensor(c.eps_a, c.id_h), psi)));
  r.add(check_equal("unified.sigma_counit_a", c.mu_h, compose(tensor(c.eps_a, c.id_h), sigma)));
  r.add(gated(check_equal("unified.sigma_comul_h", compose(tensor(sigma, c.mu_h), d_hh),
                          compose(tensor(c.id_a, c.delta_h), sigma)),
              be.passes("unified.h_comul_multiplicative"), "delta_H is not multiplicative"));
  r.add(gated(check_equal("unified.sigma_counit_h", c.tau, compose(tensor(c.id_a, c.eps_h), sigma)),
              be.passes("unified.h_counit_multiplicative"), "epsilon_H is not multiplicative"));

  const LinMap exchange = tensor(c.id_a, compose(c.c_hh, tensor(c.phi_h, c.id_h)));
  r.add(gated(check_equal("unified.psi_braid_exchange",
                          compose(exchange, tensor(c.c_ha, c.id_a, c.id_h),
                                  tensor(c.id_h, compose(tensor(c.delta_a, c.id_h), psi))),
                          compose(tensor(psi, c.phi_h), tensor(c.id_h, c.c_ha, c.phi_a), tensor(c.c_hh, c.c_ha, c.id_a),
                                  tensor(c.id_h, c.delta_h, c.delta_a))),
              be.passes("unified.be6"), "BE6 fails"));
  r.add(gated(check_equal("unified.sigma_braid_exchange",
                          compose(exchange, tensor(c.c_ha, c.id_a, c.id_h),
                                  tensor(c.id_h, compose(tensor(c.delta_a, c.id_h), sigma))),
                          compose(tensor(sigma, c.phi_h), tensor(c.id_h, c.c_hh, c.tau), tensor(c.c_hh, c.c_hh, c.id_h),
                                  tensor(c.id_h, c.delta_h, c.delta_h))),
              be.passes("unified.be7"), "BE7 fails"));
  return r;
}

CrossedSystem induce(const ExtendingDatum& d) {
  const Report datum = check_extending_datum(d);
  if (!datum.passed()) throw PreconditionError("not an extending datum: " + datum.first_failure());
  const Report lemma = lemma_identities(d);
  if (!lemma.passed()) throw InvariantViolation("identity " + lemma.first_failure() + " fails for a valid datum");
  UnifiedMaps m = induce_maps(d);
  const CheckRecord compat = compat_condition(d.a.algebra, d.h.dim, m.psi);
  if (compat.status != Status::pass) {
    const Report be = check_be(d);
    if (be.passes("unified.be2") && be.passes("unified.right_module"))
      throw InvariantViolation("psi is not compatible with mu_A although BE2 and the module property hold");
  }
  return CrossedSystem(d.a.algebra, d.h.dim, std::move(m.psi), std::move(m.sigma));
}

Report check_nabla_identity(const ExtendingDatum& d) {
  Ctx c(d);
  const LinMap nabla = nabla_formula(d.a.algebra, d.h.dim, c.psi());
  Report r;
  r.add(check_equal("unified.nabla_identity", nabla, identity(c.k, c.A * c.H)));
  return r;
}

LinMap elementwise_bullet(const ExtendingDatum& d) {
  using namespace detail;
  Ctx c(d);
  const std::size_t na = c.A.total(), nh = c.H.total();
  const ObjectShape ah = c.A * c.H;
  LinMap out(c.k, ah * ah, ah);
  for (std::size_t h = 0; h < nh; ++h) {
    const auto h3 = coproduct3_terms(c.delta_h, nh, h);
    for (std::size_t x = 0; x < na; ++x) {
      const auto x3 = coproduct3_terms(c.delta_a, na, x);
      for (std::size_t g = 0; g < nh; ++g) {
        const auto g2 = coproduct_terms(c.delta_h, nh, g);
        for (std::size_t a = 0; a < na; ++a) {
          const std::size_t col = ((a * nh + h) * na + x) * nh + g;
          for (const auto& [h1, h2, h3i, ch] : h3)
            for (const auto& [x1, x2, x3i, cx] : x3) {
              const Vec acted = eval2(c.phi_a, basis_vec(c.k, nh, h1), basis_vec(c.k, na, x1));
              const Vec left = eval2(c.mu_a, basis_vec(c.k, na, a), acted);
              const Vec r2 = eval2(c.phi_h, basis_vec(c.k, nh, h2), basis_vec(c.k, na, x2));
              const Vec r3 = eval2(c.phi_h, basis_vec(c.k, nh, h3i), basis_vec(c.k, na, x3i));
              for (const auto& [g1, g2i, cg] : g2) {
                const Vec t = eval2(c.tau, r2, basis_vec(c.k, nh, g1));
                const Vec coeff_a = eval2(c.mu_a, left, t);
                const Vec coeff_h = eval2(c.mu_h, r3, basis_vec(c.k, nh, g2i));
                const Scalar s = ch * cx * cg;
                for (std::size_t i = 0; i < na; ++i) {
                  if (coeff_a[i].is_zero()) continue;
                  for (std::size_t j = 0; j < nh; ++j)
                    if (!coeff_h[j].is_zero()) out.add(i * nh + j, col, s * coeff_a[i] * coeff_h[j]);
                }
              }
            }
        }
      }
    }
  }
  return out;
}

WeakCrossedProduct build_unified_product(const ExtendingDatum& d) {
  Report pre = check_extending_datum(d);
  pre.merge(check_be(d));
  if (!pre.passed()) throw PreconditionError("unified product hypothesis failed: " + pre.first_failure());

  const CrossedSystem sys = induce(d);
  WeakCrossedProduct wcp = [&] {
    try {
      return build_products(sys);
    } catch (const PreconditionError& e) {
      throw InvariantViolation(std::string("BE1-BE7 hold but the induced pair is not a weak crossed system: ") +
                               e.what());
    }
  }();

  Ctx c(d);
  const ObjectShape ah = sys.av();
  const LinMap id_ah = identity(c.k, ah);
  const LinMap nu = tensor(c.eta_a, c.eta_h).reshaped(ObjectShape::unit(), ah);
  Report extra = pre;
  extra.merge(lemma_identities(d));
  extra.merge(check_nabla_identity(d));
  extra.add(check_equal("unified.product_elementwise", elementwise_bullet(d), wcp.mu_tensor));
  extra.add(check_all_equal("unified.two_sided_unit", {{compose(wcp.mu_tensor, tensor(nu, id_ah)), id_ah},
                                                       {compose(wcp.mu_tensor, tensor(id_ah, nu)), id_ah}}));
  if (!extra.passed()) throw InvariantViolation("unified product assertion failed: " + extra.first_failure());

  Report base = wcp.report;
  wcp.report = extra;
  wcp.report.merge(base);
  wcp = build_algebra(std::move(wcp), nu);
  wcp.report.set_fact("algebra_dim", std::to_string(wcp.image_dim()));
  return wcp;
}

Report theorem_equivalence_suite_unified(const ExtendingDatum& d) {
  const Report datum = check_extending_datum(d);
  const Report be = check_be(d);
  const Report lemma = lemma_identities(d);
  const UnifiedMaps m = induce_maps(d);
  const bool twisted = twisted_condition(d.a.algebra, d.h.dim, m.psi, m.sigma).status == Status::pass;
  const bool cocycle = cocycle_condition(d.a.algebra, d.h.dim, m.psi, m.sigma).status == Status::pass;
  const bool valid = datum.passed();
  const bool eps_mult = be.passes("unified.h_counit_multiplicative");
  const bool delta_mult = be.passes("unified.h_comul_multiplicative");
  const bool be4 = be.passes("unified.be4"), be5 = be.passes("unified.be5");

  Report r;
  auto implication = [&](const char* id, bool hypotheses, const std::string& missing, bool from, bool to) {
    if (!valid) {
      r.add(make_record(id, Status::not_applicable, "not an extending datum: " + datum.first_failure()));
    } else if (!hypotheses) {
      r.add(make_record(id, Status::not_applicable, missing));
    } else {
      r.add(make_record(id, (!from || to) ? Status::pass : Status::fail));
    }
  };
  implication("unified.twisted_implies_be4", eps_mult, "epsilon_H is not multiplicative", twisted, be4);
  implication("unified.be4_implies_twisted",
              be.passes("unified.be3") && be.passes("unified.be6") && delta_mult,
              "needs BE3, BE6 and delta_H multiplicative", be4, twisted);
  implication("unified.cocycle_implies_be5", eps_mult, "epsilon_H is not multiplicative", cocycle, be5);
  implication("unified.be5_implies_cocycle",
              be.passes("unified.be1") && be.passes("unified.be7") && delta_mult,
              "needs BE1, BE7 and delta_H multiplicative", be5, cocycle);
  for (const char* id : {"unified.psi_braid_exchange", "unified.sigma_braid_exchange"}) {
    const CheckRecord* rec = lemma.find(id);
    if (valid || rec->status == Status::not_applicable) r.add(*rec);
    else r.add(make_record(id, Status::not_applicable, "not an extending datum"));
  }
  auto word = [](bool b) { return std::string(b ? "pass" : "fail"); };
  r.set_fact("wcp.twisted", word(twisted));
  r.set_fact("wcp.cocycle", word(cocycle));
  r.set_fact("unified.be4", word(be4));
  r.set_fact("unified.be5", word(be5));
  r.set_fact("extending_datum", word(valid));
  return r;
}

ExtendingDatum trivial_datum(const BialgebraData& a, const PreHopfObject& h) {
  const FieldSpec& k = a.field();
  const ObjectShape H{h.dim}, A{a.dim()};
  LinMap phi_a = tensor(h.counit, identity(k, A)).reshaped(H * A, A);
  LinMap phi_h = tensor(identity(k, H), a.coalgebra.counit).reshaped(H * A, H);
  LinMap tau = compose(a.algebra.unit, tensor(h.counit, h.counit)).reshaped(H * H, A);
  return {a, h, std::move(phi_h), std::move(phi_a), std::move(tau)};
}

namespace examples::unified {

namespace {

// g▷ on a group algebra basis as a permutation with 1 acting trivially;
// images[x] is g▷e_x.
LinMap grouplike_action(const FieldSpec& k, std::size_t na, const std::vector<std::size_t>& images) {
  LinMap phi(k, ObjectShape{2, na}, ObjectShape{na});
  for (std::size_t x = 0; x < na; ++x) {
    phi.set(x, x, Scalar::one(k));
    phi.set(images[x], na + x, Scalar::one(k));
  }
  return phi;
}

ExtendingDatum group_datum(const FieldSpec& k, const std::vector<std::size_t>& a_orders,
                           const std::vector<std::size_t>& images) {
  HopfData a = builtin::group_algebra(k, a_orders);
  HopfData h = builtin::group_algebra(k, 2);
  ExtendingDatum d = trivial_datum(a.bialgebra, PreHopfObject::from(h.bialgebra));
  d.phi_a = grouplike_action(k, a.dim(), images);
  return d;
}

}  // namespace

ExtendingDatum trivial_kc2(const FieldSpec& field) {
  const HopfData c2 = builtin::group_algebra(field, 2);
  return trivial_datum(c2.bialgebra, PreHopfObject::from(c2.bialgebra));
}

ExtendingDatum smash_s3(const FieldSpec& field) { return group_datum(field, {3}, {0, 2, 1}); }

ExtendingDatum tensor_c3_c2(const FieldSpec& field) { return group_datum(field, {3}, {0, 1, 2}); }

ExtendingDatum twisted_c4(const FieldSpec& field) {
  ExtendingDatum d = trivial_kc2(field);
  // τ(g⊗g): column 3, value a (index 1) instead of 1.
  d.tau = d.tau.with_entry(0, 3, Scalar::zero(field)).with_entry(1, 3, Scalar::one(field));
  return d;
}

ExtendingDatum trivial_h4(const FieldSpec& field) {
  const HopfData c2 = builtin::group_algebra(field, 2);
  const HopfData h4 = builtin::sweedler_h4(field);
  return trivial_datum(c2.bialgebra, PreHopfObject::from(h4.bialgebra));
}

ExtendingDatum two_dim_h(const FieldSpec& field, long g2_one, long g2_g) {
  const HopfData c2 = builtin::group_algebra(field, 2);
  PreHopfObject h = PreHopfObject::from(c2.bialgebra);
  h.mul = h.mul.with_entry(0, 3, Scalar(field, g2_one)).with_entry(1, 3, Scalar(field, g2_g));
  const HopfData k1 = builtin::group_algebra(field, 1);
  return trivial_datum(k1.bialgebra, h);
}

ExtendingDatum smash_s3_bad_tau(const FieldSpec& field) {
  ExtendingDatum d = smash_s3(field);
  d.tau = d.tau.with_entry(0, 3, Scalar::zero(field)).with_entry(1, 3, Scalar::one(field));
  return d;
}

ExtendingDatum klein_order3(const FieldSpec& field) {
  // Exponent tuples (0,0), (0,1), (1,0), (1,1); (1,0) -> (0,1) -> (1,1) -> (1,0).
  return group_datum(field, {2, 2}, {0, 3, 1, 2});
}

ExtendingDatum smash_s3_bad_action(const FieldSpec& field) {
  ExtendingDatum d = smash_s3(field);
  // g▷c (column 3 + 1 = 4) becomes c + c².
  d.phi_a = d.phi_a.with_entry(1, 4, Scalar::one(field));
  return d;
}

ExtendingDatum smash_s3_bad_unit(const FieldSpec& field) {
  ExtendingDatum d = smash_s3(field);
  d.phi_a = d.phi_a.with_entry(0, 3, Scalar::zero(field));
  return d;
}

ExtendingDatum smash_s3_bad_comul(const FieldSpec& field) {
  ExtendingDatum d = smash_s3(field);
  // δ(g) = g⊗g + 1⊗1.
  d.h.comul = d.h.comul.with_entry(0, 1, Scalar::one(field));
  return d;
}

}  // namespace examples::unified

}  // namespace wcpx

#include "wcpx/report.hpp"

#include <stdexcept>

namespace wcpx {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::not_applicable: return "not_applicable";
  }
  return "unknown";
}

// Every check id emitted anywhere must appear here exactly once.
const std::map<std::string, std::string, std::less<>>& anchor_table() {
  static const std::map<std::string, std::string, std::less<>> table = {
      // structures
      {"algebra.unit", "algebra: two-sided unit law"},
      {"algebra.assoc", "algebra: associativity"},
      {"coalgebra.counit", "coalgebra: two-sided counit law"},
      {"coalgebra.coassoc", "coalgebra: coassociativity"},
      {"bialgebra.comul_multiplicative", "bialgebra: coproduct is multiplicative for the braided tensor algebra"},
      {"bialgebra.counit_multiplicative", "bialgebra: counit is multiplicative"},
      {"bialgebra.comul_unit", "bialgebra: coproduct preserves the unit"},
      {"bialgebra.counit_unit", "bialgebra: counit preserves the unit"},
      {"hopf.antipode_left", "Hopf algebra: mu (lambda ⊗ H) delta = eta epsilon"},
      {"hopf.antipode_right", "Hopf algebra: mu (H ⊗ lambda) delta = eta epsilon"},
      // weak crossed products
      {"wcp.compat", "weak crossed product: psi is compatible with the product of A"},
      {"wcp.nabla_idempotent", "weak crossed product: nabla is idempotent"},
      {"wcp.nabla_left_linear", "weak crossed product: nabla is a left A-module morphism"},
      {"wcp.split_retraction", "idempotent splitting: p ∘ i = id"},
      {"wcp.split_factorization", "idempotent splitting: i ∘ p = nabla"},
      {"wcp.twisted", "weak crossed product: twisted condition"},
      {"wcp.cocycle", "weak crossed product: cocycle condition"},
      {"wcp.normalized_sigma", "weak crossed product: nabla ∘ sigma = sigma"},
      {"wcp.product_assoc", "weak crossed product: product on A⊗V is associative"},
      {"wcp.product_normalized", "weak crossed product: product is normalized with respect to nabla"},
      {"wcp.product_left_linear", "weak crossed product: product is left A-linear"},
      {"wcp.image_assoc", "weak crossed product: induced product on A×V is associative"},
      {"wcp.preunit", "preunit: nu is a preunit for the product"},
      {"wcp.preunit_psi_sigma", "preunit: sigma-psi condition on nu equals nabla (eta ⊗ V)"},
      {"wcp.preunit_sigma", "preunit: sigma condition on nu equals nabla (eta ⊗ V)"},
      {"wcp.preunit_psi", "preunit: psi condition on nu equals beta_nu"},
      {"wcp.preunit_nabla", "preunit: induced idempotent equals nabla"},
      {"wcp.beta_multiplicative", "preunit: beta_nu is multiplicative"},
      {"wcp.beta_left_linear", "preunit: beta_nu is left A-linear"},
      {"wcp.beta_bar_morphism", "preunit: p ∘ beta_nu is an algebra morphism into A×V"},
      // partial crossed products
      {"partial.unit_action", "twisted partial action: unit acts as identity"},
      {"partial.multiplicative", "twisted partial action: multiplicativity (braided form)"},
      {"partial.multiplicative_psi", "twisted partial action: multiplicativity (psi form)"},
      {"partial.multiplicative_forms_agree", "twisted partial action: both multiplicativity forms agree"},
      {"partial.twisted", "twisted partial action: twisted condition (braided form)"},
      {"partial.twisted_psi", "twisted partial action: twisted condition (psi/sigma form)"},
      {"partial.twisted_forms_agree", "twisted partial action: both twisted forms agree"},
      {"partial.normalized_cocycle", "twisted partial action: omega normalization (braided form)"},
      {"partial.normalized_cocycle_psi", "twisted partial action: omega normalization (sigma form)"},
      {"partial.normalized_cocycle_forms_agree", "twisted partial action: both omega normalization forms agree"},
      {"partial.cocycle_units", "twisted partial action: unit conditions on omega"},
      {"partial.cocycle", "twisted partial action: partial cocycle condition (braided form)"},
      {"partial.cocycle_psi", "twisted partial action: partial cocycle condition (psi/sigma form)"},
      {"partial.cocycle_forms_agree", "twisted partial action: both partial cocycle forms agree"},
      {"partial.psi_comul", "induced psi commutes with the coproduct of H"},
      {"partial.sigma_comul", "induced sigma commutes with the coproduct of H"},
      {"partial.psi_counit", "counit of H recovers the action from psi"},
      {"partial.sigma_counit", "counit of H recovers omega from sigma"},
      {"partial.nabla_alternative", "partial crossed product: nabla via omega and the coproduct"},
      {"partial.product_elementwise", "partial crossed product: element-wise product formula"},
      {"partial.iff_twisted", "partial twisted condition holds iff the twisted condition holds"},
      {"partial.iff_cocycle", "partial cocycle condition holds iff the cocycle condition holds"},
      // unified products
      {"unified.h_coalgebra", "extending datum: H is a coalgebra"},
      {"unified.h_comul_unit", "extending datum: delta_H ∘ eta_H = eta_H ⊗ eta_H"},
      {"unified.h_unital", "extending datum: mu_H is unital"},
      {"unified.right_action_coalgebra", "extending datum: right action on H is a coalgebra morphism"},
      {"unified.left_action_coalgebra", "extending datum: left action on A is a coalgebra morphism"},
      {"unified.tau_coalgebra", "extending datum: tau is a coalgebra morphism"},
      {"unified.norm_left_action_on_unit", "extending datum normalization: h ▷ 1_A = epsilon(h) 1_A"},
      {"unified.norm_unit_left_action", "extending datum normalization: 1_H ▷ a = a"},
      {"unified.norm_unit_right_action", "extending datum normalization: 1_H ◁ a = epsilon(a) 1_H"},
      {"unified.norm_right_action_by_unit", "extending datum normalization: h ◁ 1_A = h"},
      {"unified.norm_tau", "extending datum normalization: tau with a unit argument"},
      {"unified.be1", "unified product: twisted associativity of mu_H (BE1)"},
      {"unified.be2", "unified product: multiplicativity of the left action (BE2)"},
      {"unified.be3", "unified product: compatibility of the right action with mu_H (BE3)"},
      {"unified.be4", "unified product: unified twisted condition (BE4)"},
      {"unified.be5", "unified product: unified cocycle condition (BE5)"},
      {"unified.be6", "unified product: braided symmetry of psi (BE6)"},
      {"unified.be7", "unified product: braided symmetry of sigma (BE7)"},
      {"unified.h_comul_multiplicative", "extending datum: delta_H is multiplicative"},
      {"unified.h_counit_multiplicative", "extending datum: epsilon_H is multiplicative"},
      {"unified.right_module", "extending datum: (H, ◁) is a right A-module"},
      {"unified.psi_comul_h", "induced psi and the coproduct of H"},
      {"unified.psi_comul_a", "induced psi and the coproduct of A"},
      {"unified.sigma_comul_a", "induced sigma and the coproduct of A"},
      {"unified.psi_counit_h", "counit of H recovers the left action from psi"},
      {"unified.psi_counit_a", "counit of A recovers the right action from psi"},
      {"unified.sigma_counit_a", "counit of A recovers mu_H from sigma"},
      {"unified.sigma_comul_h", "induced sigma and the coproduct of H (needs delta_H multiplicative)"},
      {"unified.sigma_counit_h", "counit of H recovers tau from sigma (needs epsilon_H multiplicative)"},
      {"unified.psi_braid_exchange", "psi exchange identity (needs BE6)"},
      {"unified.sigma_braid_exchange", "sigma exchange identity (needs BE7)"},
      {"unified.nabla_identity", "unified product: nabla is the identity"},
      {"unified.product_elementwise", "unified product: element-wise bullet formula"},
      {"unified.two_sided_unit", "unified product: eta_A ⊗ eta_H is a two-sided unit"},
      {"unified.twisted_implies_be4", "twisted condition implies BE4 (epsilon_H multiplicative)"},
      {"unified.be4_implies_twisted", "BE4 implies the twisted condition (BE3, BE6, delta_H multiplicative)"},
      {"unified.cocycle_implies_be5", "cocycle condition implies BE5 (epsilon_H multiplicative)"},
      {"unified.be5_implies_cocycle", "BE5 implies the cocycle condition (BE1, BE7, delta_H multiplicative)"},
  };
  return table;
}

const std::string& anchor_for(std::string_view id) {
  const auto& table = anchor_table();
  auto it = table.find(id);
  if (it == table.end()) throw std::out_of_range("no anchor for check id '" + std::string(id) + "'");
  return it->second;
}

void Report::add(CheckRecord record) {
  anchor_for(record.id);
  records_.push_back(std::move(record));
}

void Report::merge(const Report& other) {
  for (const auto& r : other.records_) records_.push_back(r);
  for (const auto& [k, v] : other.facts_) facts_[k] = v;
}

bool Report::passed() const { return count(Status::fail) == 0; }

std::size_t Report::count(Status s) const {
  std::size_t n = 0;
  for (const auto& r : records_)
    if (r.status == s) ++n;
  return n;
}

const CheckRecord* Report::find(std::string_view id, std::string_view subject) const {
  for (const auto& r : records_)
    if (r.id == id && (subject.empty() || r.subject == subject)) return &r;
  return nullptr;
}

Status Report::status(std::string_view id, std::string_view subject) const {
  const auto* r = find(id, subject);
  if (!r) throw std::out_of_range("report has no record '" + std::string(id) + "'");
  return r->status;
}

std::string Report::first_failure() const {
  for (const auto& r : records_)
    if (r.status == Status::fail) return r.id;
  return {};
}

namespace {

Witness witness_from(const LinMap& lhs, const Difference& d) {
  Witness w;
  w.shape_mismatch = d.shape_mismatch;
  if (!d.shape_mismatch) {
    w.input = lhs.source().unflatten(d.col);
    w.output = lhs.target().unflatten(d.row);
    w.lhs = d.lhs;
    w.rhs = d.rhs;
  }
  return w;
}

}  // namespace

CheckRecord check_equal(std::string id, const LinMap& lhs, const LinMap& rhs, std::string subject) {
  CheckRecord rec{std::move(id), std::move(subject), Status::pass, std::nullopt, {}};
  auto cmp = equals(lhs, rhs);
  if (!cmp) {
    rec.status = Status::fail;
    rec.witness = witness_from(lhs, *cmp.difference);
  }
  return rec;
}

CheckRecord check_all_equal(std::string id, const std::vector<std::pair<LinMap, LinMap>>& sides,
                            std::string subject) {
  for (std::size_t k = 0; k < sides.size(); ++k) {
    auto rec = check_equal(id, sides[k].first, sides[k].second, subject);
    if (rec.status == Status::fail) {
      if (sides.size() > 1) rec.detail = "equality " + std::to_string(k + 1) + " of " + std::to_string(sides.size());
      return rec;
    }
  }
  return CheckRecord{std::move(id), std::move(subject), Status::pass, std::nullopt, {}};
}

CheckRecord make_record(std::string id, Status status, std::string detail, std::string subject) {
  return CheckRecord{std::move(id), std::move(subject), status, std::nullopt, std::move(detail)};
}

}  // namespace wcpx

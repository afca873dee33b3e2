#include "wcpx/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "wcpx/report_json.hpp"

namespace wcpx {

const std::vector<std::string_view>& command_names() {
  static const std::vector<std::string_view> names{"check-structure", "wcp-check",     "wcp-build",
                                                   "partial-check",   "partial-build", "unified-check",
                                                   "unified-build",   "equivalence-suite"};
  return names;
}

namespace {

using SKind = StructureBlock::Kind;
using BKind = BundleBlock::Kind;

std::string index_text(const std::vector<std::size_t>& idx) {
  std::string s = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i] + 1);
  return s + ")";
}

void print_record(std::ostream& out, const CheckRecord& r) {
  static const char* tags[] = {"PASS", "FAIL", "n/a "};
  out << "  " << tags[static_cast<int>(r.status)] << "  " << r.id;
  if (!r.subject.empty()) out << " [" << r.subject << "]";
  if (r.witness) {
    if (r.witness->shape_mismatch)
      out << "  shape mismatch";
    else
      out << "  at input " << index_text(r.witness->input) << " output " << index_text(r.witness->output)
          << ": lhs=" << r.witness->lhs << " rhs=" << r.witness->rhs;
  }
  if (!r.detail.empty()) out << "  (" << r.detail << ")";
  out << "\n";
}

/// Appends `part` to `into` under block `name`.
void absorb(Report& into, const Report& part, const std::string& name) {
  for (CheckRecord r : part.records()) {
    r.subject = r.subject.empty() ? name : name + "/" + r.subject;
    into.add(std::move(r));
  }
  for (const auto& [k, v] : part.facts()) into.set_fact(name + "." + k, v);
}

void print_block(std::ostream& out, std::string_view kind, const std::string& name, const Report& r) {
  out << kind << " " << name << "\n";
  for (const auto& rec : r.records()) print_record(out, rec);
  for (const auto& [k, v] : r.facts()) out << "  fact  " << k << " = " << v << "\n";
}

Report structure_checks(const StructureFile& f, const StructureBlock& s) {
  switch (s.kind) {
    case SKind::algebra: return check_algebra(resolve_algebra(f, s.name));
    case SKind::coalgebra: return check_coalgebra(resolve_coalgebra(f, s.name));
    case SKind::bialgebra: return check_bialgebra(resolve_bialgebra(f, s.name));
    case SKind::hopf: return check_hopf_full(resolve_hopf(f, s.name));
    case SKind::object: break;
  }
  return {};
}

Report wcp_checks(const CrossedSystemInput& in) {
  Report r;
  r.add(compat_condition(in.algebra, in.vdim, in.psi));
  r.add(twisted_condition(in.algebra, in.vdim, in.psi, in.sigma));
  r.add(cocycle_condition(in.algebra, in.vdim, in.psi, in.sigma));
  if (r.passes("wcp.compat")) {
    const CrossedSystem sys(in.algebra, in.vdim, in.psi, in.sigma);
    r.merge(nabla_report(sys));
    r.merge(check_normalized(sys));
  }
  return r;
}

Report wcp_build(const CrossedSystemInput& in) {
  Report pre = wcp_checks(in);
  if (!pre.passed()) return pre;
  const CrossedSystem sys(in.algebra, in.vdim, in.psi, in.sigma);
  WeakCrossedProduct wcp = build_products(sys);
  if (in.preunit) {
    Report nu = check_preunit(wcp, *in.preunit);
    if (!nu.passed()) {
      Report out = wcp.report;
      out.merge(nu);
      out.set_fact("nabla_rank", std::to_string(wcp.image_dim()));
      return out;
    }
    wcp = build_algebra(std::move(wcp), *in.preunit);
  }
  return wcp.report;
}

Report partial_checks(const TwistedPartialAction& act) {
  Report r = check_partial_action(act);
  r.merge(check_units_and_cocycle(act));
  r.merge(lemma_identities(act));
  return r;
}

Report partial_build(const TwistedPartialAction& act) {
  Report pre = check_partial_action(act);
  pre.merge(check_units_and_cocycle(act));
  if (!pre.passed()) return pre;
  return build_partial_crossed_product(act).report;
}

Report unified_checks(const ExtendingDatum& d) {
  Report r = check_extending_datum(d);
  r.merge(check_be(d));
  r.merge(lemma_identities(d));
  r.merge(check_nabla_identity(d));
  return r;
}

Report unified_build(const ExtendingDatum& d) {
  Report pre = check_extending_datum(d);
  pre.merge(check_be(d));
  if (!pre.passed()) return pre;
  return build_unified_product(d).report;
}

void print_dims(std::ostream& out, const Report& r, const char* product) {
  auto fact = [&](const char* k) -> const std::string* {
    auto it = r.facts().find(k);
    return it == r.facts().end() ? nullptr : &it->second;
  };
  if (const auto* v = fact("nabla_rank")) out << "  rank(∇)=" << *v << "\n";
  if (const auto* v = fact("algebra_dim")) out << "  dim(" << product << ")=" << *v << "\n";
  else if (const auto* w = fact("image_dim")) out << "  dim(" << product << ")=" << *w << "\n";
  if (r.find("unified.nabla_identity")) out << "  ∇=id: " << to_string(r.status("unified.nabla_identity")) << "\n";
}

}  // namespace

Report execute(std::string_view command, const StructureFile& file, std::ostream& out) {
  Report total;
  bool any = false;
  auto each_bundle = [&](BKind kind, auto&& body) {
    for (const BundleBlock* b : file.bundles(kind)) {
      any = true;
      body(*b);
    }
  };

  if (command == "check-structure") {
    for (const auto& blk : file.blocks) {
      const auto* s = std::get_if<StructureBlock>(&blk);
      if (!s || s->kind == SKind::object) continue;
      any = true;
      const Report r = structure_checks(file, *s);
      print_block(out, to_string(s->kind), s->name, r);
      absorb(total, r, s->name);
    }
  } else if (command == "wcp-check" || command == "wcp-build") {
    const bool build = command == "wcp-build";
    each_bundle(BKind::crossed_system, [&](const BundleBlock& b) {
      const CrossedSystemInput in = resolve_crossed_system(file, b.name);
      const Report r = build ? wcp_build(in) : wcp_checks(in);
      print_block(out, "crossed_system", b.name, r);
      if (build) print_dims(out, r, "A×V");
      absorb(total, r, b.name);
    });
  } else if (command == "partial-check" || command == "partial-build") {
    const bool build = command == "partial-build";
    each_bundle(BKind::partial_action, [&](const BundleBlock& b) {
      const TwistedPartialAction act = resolve_partial_action(file, b.name);
      const Report r = build ? partial_build(act) : partial_checks(act);
      print_block(out, "partial_action", b.name, r);
      if (build) print_dims(out, r, "A#H");
      absorb(total, r, b.name);
    });
  } else if (command == "unified-check" || command == "unified-build") {
    const bool build = command == "unified-build";
    each_bundle(BKind::extending_datum, [&](const BundleBlock& b) {
      const ExtendingDatum d = resolve_extending_datum(file, b.name);
      const Report r = build ? unified_build(d) : unified_checks(d);
      print_block(out, "extending_datum", b.name, r);
      if (build) print_dims(out, r, "A⋉H");
      absorb(total, r, b.name);
    });
  } else if (command == "equivalence-suite") {
    each_bundle(BKind::partial_action, [&](const BundleBlock& b) {
      const Report r = theorem_equivalence_suite(resolve_partial_action(file, b.name));
      print_block(out, "partial_action", b.name, r);
      absorb(total, r, b.name);
    });
    each_bundle(BKind::extending_datum, [&](const BundleBlock& b) {
      const Report r = theorem_equivalence_suite_unified(resolve_extending_datum(file, b.name));
      print_block(out, "extending_datum", b.name, r);
      absorb(total, r, b.name);
    });
  } else {
    throw InputError("unknown command '" + std::string(command) + "'");
  }
  if (!any) throw InputError("no block in the file applies to " + std::string(command));
  return total;
}

int run(std::string_view command, const std::vector<std::string>& paths, const RunOptions& options,
        std::ostream& out, std::ostream& err) {
  ReportMeta meta{std::string(command), {}};
  Report total;
  std::string current = "<command line>";
  try {
    FieldSpec field = FieldSpec::rationals();
    if (options.field) {
      field = FieldSpec::parse(*options.field);
    } else if (const char* env = std::getenv("WCPX_FIELD"); env && *env) {
      current = "WCPX_FIELD";
      field = FieldSpec::parse(env);
    }
    if (paths.empty()) throw InputError("no input files");
    for (const auto& path : paths) {
      current = path;
      std::ifstream in(path, std::ios::binary);
      if (!in) throw InputError("cannot read file");
      std::ostringstream buf;
      buf << in.rdbuf();
      const std::string bytes = buf.str();
      meta.input_digests.push_back(sha256_hex(bytes));
      const StructureFile file = parse_structure_file(bytes, field);
      out << "# " << path << " (" << file.field.name() << ")\n";
      Report r = execute(command, file, out);
      total.merge(r);
    }
  } catch (const ParseError& e) {
    err << current << ":" << e.line();
    if (e.column()) err << ":" << e.column();
    err << ": error: " << e.message() << "\n";
    return 2;
  } catch (const InputError& e) {
    err << current << ": error: " << e.what() << "\n";
    return 2;
  } catch (const FieldError& e) {
    err << current << ": error: " << e.what() << "\n";
    return 2;
  } catch (const DimensionError& e) {
    err << current << ": error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantViolation& e) {
    err << current << ": internal invariant violated: " << e.what() << "\n";
    return 1;
  } catch (const PreconditionError& e) {
    err << current << ": precondition failed: " << e.what() << "\n";
    return 1;
  }

  out << "summary: " << total.count(Status::pass) << " passed, " << total.count(Status::fail) << " failed, "
      << total.count(Status::not_applicable) << " not applicable\n";
  if (options.report_path) {
    std::ofstream rep(*options.report_path, std::ios::binary);
    if (!rep) {
      err << *options.report_path << ": error: cannot write report\n";
      return 2;
    }
    rep << emit_report(total, meta);
  }
  return total.passed() ? 0 : 1;
}

}  // namespace wcpx

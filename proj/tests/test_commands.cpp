#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "wcpx/commands.hpp"

using namespace wcpx;

namespace {

std::string fx(const std::string& name) { return (std::filesystem::path(WCPX_FIXTURE_DIR) / name).string(); }

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cmd(const std::string& command, const std::vector<std::string>& paths, RunOptions opt = {}) {
  std::ostringstream out, err;
  const int code = run(command, paths, opt, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p, std::ios::binary) << content;
  return p.string();
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

/// Sets an environment variable for the lifetime of the object.
struct EnvGuard {
  explicit EnvGuard(const char* value) {
    if (value) setenv("WCPX_FIELD", value, 1);
    else unsetenv("WCPX_FIELD");
  }
  ~EnvGuard() { unsetenv("WCPX_FIELD"); }
};

}  // namespace

TEST_CASE("partial-build on the partial smash fixture") {
  const Outcome o = run_cmd("partial-build", {fx("partial_smash.wx")});
  CHECK(o.code == 0);
  CHECK(contains(o.out, "rank(∇)=3"));
  CHECK(contains(o.out, "dim(A#H)=3"));
}

TEST_CASE("unified-build on the S3 smash fixture") {
  const Outcome o = run_cmd("unified-build", {fx("smash_s3.wx")});
  CHECK(o.code == 0);
  CHECK(contains(o.out, "∇=id: pass"));
  CHECK(contains(o.out, "dim(A⋉H)=6"));
}

TEST_CASE("a broken unit exits 1 and prints the witness") {
  const Outcome o = run_cmd("check-structure", {fx("broken_unit.wx")});
  CHECK(o.code == 1);
  CHECK(contains(o.out, "algebra kC2\n  FAIL  algebra.unit  at input (1) output (1): lhs=0 rhs=1"));
}

TEST_CASE("failed preconditions exit 1 without building") {
  const Outcome o = run_cmd("partial-build", {fx("partial_lambda_half.wx")});
  CHECK(o.code == 1);
  CHECK(contains(o.out, "FAIL  partial.multiplicative"));
  CHECK_FALSE(contains(o.out, "rank("));
  CHECK(run_cmd("unified-build", {fx("unified_bad_tau.wx")}).code == 1);
  CHECK(run_cmd("wcp-build", {fx("wcp_bad_compat.wx")}).code == 1);
}

TEST_CASE("input errors exit 2") {
  SUBCASE("parse error with location") {
    const std::string p = temp_file("wcpx_bad.wx", "algebra A dim 2\n  unit: 1 0\n  mul 2 2 : 3=1\n");
    const Outcome o = run_cmd("check-structure", {p});
    CHECK(o.code == 2);
    CHECK(contains(o.err, p + ":3:13: error:"));
  }
  SUBCASE("missing file") { CHECK(run_cmd("check-structure", {fx("does_not_exist.wx")}).code == 2); }
  SUBCASE("unknown command") { CHECK(run_cmd("frobnicate", {fx("kc2.wx")}).code == 2); }
  SUBCASE("nothing to do") { CHECK(run_cmd("partial-check", {fx("kc2.wx")}).code == 2); }
  SUBCASE("no files") { CHECK(run_cmd("check-structure", {}).code == 2); }
  SUBCASE("bad field flag") {
    RunOptions opt;
    opt.field = "F6";
    CHECK(run_cmd("check-structure", {fx("kc2.wx")}, opt).code == 2);
  }
}

TEST_CASE("WCPX_FIELD applies only to files without a field line") {
  {
    EnvGuard env("F5");
    const Outcome o = run_cmd("check-structure", {fx("kc2.wx")});
    CHECK(o.code == 0);
    CHECK(contains(o.out, "(F5)"));
    CHECK(contains(run_cmd("check-structure", {fx("structures.wx")}).out, "(Q)"));
    RunOptions opt;
    opt.field = "F7";
    CHECK(contains(run_cmd("check-structure", {fx("kc2.wx")}, opt).out, "(F7)"));
  }
  {
    EnvGuard env("nonsense");
    CHECK(run_cmd("check-structure", {fx("kc2.wx")}).code == 2);
  }
  {
    EnvGuard env(nullptr);
    CHECK(contains(run_cmd("check-structure", {fx("kc2.wx")}).out, "(Q)"));
  }
}

TEST_CASE("equivalence-suite passes on valid and mutated fixtures alike") {
  const Outcome o = run_cmd("equivalence-suite",
                            {fx("partial_smash.wx"), fx("partial_bad_omega.wx"), fx("partial_bad_phi.wx"),
                             fx("smash_s3.wx"), fx("unified_bad_tau.wx"), fx("klein_order3.wx"),
                             fx("unified_nilpotent_g.wx"), fx("unified_affine_g.wx")});
  CHECK(o.code == 0);
  CHECK(contains(o.out, "n/a   unified.twisted_implies_be4"));
}

TEST_CASE("every command on every fixture finishes with 0, 1 or a no-block 2") {
  for (const auto& entry : std::filesystem::directory_iterator(WCPX_FIXTURE_DIR)) {
    if (entry.path().extension() != ".wx") continue;
    for (auto command : command_names()) {
      CAPTURE(entry.path().filename().string());
      CAPTURE(std::string(command));
      const Outcome o = run_cmd(std::string(command), {entry.path().string()});
      if (o.code == 2) CHECK(contains(o.err, "no block in the file applies"));
      else CHECK(o.err.empty());
    }
  }
}

TEST_CASE("execute prefixes subjects and facts with the block name") {
  std::ostringstream sink;
  std::ifstream in(fx("partial_smash.wx"));
  std::stringstream text;
  text << in.rdbuf();
  const Report r = execute("partial-build", parse_structure_file(text.str()), sink);
  CHECK(r.find("partial.twisted", "smash"));
  CHECK(r.facts().at("smash.nabla_rank") == "3");
  CHECK_THROWS_AS(execute("nope", parse_structure_file(text.str()), sink), InputError);
}

// ringkt: command-line front end.
//
// Exit codes: 0 success, 1 internal invariant violation or failed check,
// 2 invalid input (field spec, modulus, matrix file, group name).

#include <bit>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11/CLI11.hpp>

#include "criteria.hpp"
#include "ringkt/indres.hpp"
#include "ringkt/report.hpp"

using namespace ringkt;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::MalformedSpec, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

long smallest_admissible(const Order& o) {
  for (long c = 2;; ++c)
    if (is_admissible(o, Integer(c))) return c;
}

std::string fields_dir() {
  if (const char* env = std::getenv("RINGKT_FIELDS_DIR")) return env;
  return RINGKT_FIELDS_DIR;
}

// Bare names like "gaussian" resolve against the bundled corpus.
std::string resolve_spec(const std::string& arg) {
  if (std::ifstream(arg).good()) return arg;
  for (const std::string& candidate : {fields_dir() + "/" + arg, fields_dir() + "/" + arg + ".toml"})
    if (std::ifstream(candidate).good()) return candidate;
  return arg;
}

int run(int argc, char** argv) {
  CLI::App app{"K-theory of ring C*-algebras of rings of integers"};
  app.require_subcommand(1);

  std::string spec;
  bool json = false;
  long c = 0;

  auto* analyze = app.add_subcommand("analyze", "field invariants, mu maximality and the maximal finite subgroups");
  analyze->add_option("spec", spec, "field spec (TOML or JSON)")->required();
  analyze->add_flag("--json", json, "machine-readable output");

  auto* eta = app.add_subcommand("eta", "eta_c on the finite block, as JSON");
  eta->add_option("spec", spec, "field spec")->required();
  eta->add_option("--c", c, "admissible modulus")->required();

  int depth = 2;
  std::string target = "ring-cstar";
  auto* kt = app.add_subcommand("ktheory", "full K-theory report");
  kt->add_option("spec", spec, "field spec")->required();
  kt->add_option("--c", c, "admissible modulus (default: smallest admissible)");
  kt->add_option("--truncate", depth, "depth of the Lambda(Gamma) truncations")->check(CLI::NonNegativeNumber);
  kt->add_option("--target", target, "ring-cstar or group-cstar")->check(CLI::IsMember({"ring-cstar", "group-cstar"}));
  kt->add_flag("--json", json, "machine-readable output");

  std::string matrix_path;
  std::string parameter;
  bool invert_all = false;
  auto* lim = app.add_subcommand("limit", "colimit of Z^r along a square integer matrix");
  lim->add_option("matrix", matrix_path, "JSON file: {\"rows\": [[...]], \"parameter\": c} or [[...]]")->required();
  lim->add_option("--parameter", parameter, "c for the triangular certificate (overrides the file)");
  lim->add_flag("--invert-all-primes", invert_all, "fall back to the rational stable rank without a certificate");
  lim->add_flag("--json", json, "machine-readable output");

  std::string group;
  auto* dc = app.add_subcommand("check-doublecoset", "double coset formula for all subgroup pairs of a catalog group");
  dc->add_option("--group", group, "C<n>, D<n>, S3, S4, A4, Q8 or V4")->required();

  std::vector<int> ids;
  std::string fields = fields_dir();
  auto* st = app.add_subcommand("selftest", "run the acceptance criteria");
  st->add_option("ids", ids, "criteria to run (default: all)");
  st->add_option("--fields", fields, "directory of the bundled field specs");

  CLI11_PARSE(app, argc, argv);

  if (*analyze) {
    OrderPtr o = load_field(load_field_file(resolve_spec(spec)));
    SemidirectGroup g(o);
    FieldReport f = field_report(g);
    std::cout << (json ? to_json(f) + "\n" : summary_text(f));
    return 0;
  }
  if (*eta) {
    OrderPtr o = load_field(load_field_file(resolve_spec(spec)));
    SemidirectGroup g(o);
    std::cout << to_json(eta_report(eta_matrix(g, c))) << "\n";
    return 0;
  }
  if (*kt) {
    OrderPtr o = load_field(load_field_file(resolve_spec(spec)));
    SemidirectGroup g(o);
    KTheoryReport k;
    if (target == "group-cstar") {
      k = group_algebra_k(g, depth);
    } else {
      k = full_k_theory(g, c ? c : smallest_admissible(*o), depth);
    }
    Report r = make_report(g, k);
    std::cout << (json ? to_json(r) + "\n" : summary_text(r));
    for (const auto& [name, ok] : r.checks)
      if (!ok) return 1;
    return 0;
  }
  if (*lim) {
    MatrixInput in = parse_matrix_input(read_file(matrix_path));
    if (!parameter.empty()) {
      Integer p;
      if (p.set_str(parameter, 10) != 0) throw Error(ErrorKind::MalformedSpec, "bad parameter " + parameter);
      in.parameter = p;
    }
    TelescopeSystem sys{in.a, std::nullopt};
    if (in.parameter) sys.certificate = TelescopeSystem::infer_certificate(in.a, *in.parameter);
    GradedGroup out = telescope_colimit(sys, invert_all);
    if (json) {
      std::cout << to_json(out) << "\n";
    } else {
      std::cout << "colimit = " << out.to_string() << (sys.certificate ? " (certified)" : " (rational stable rank)")
                << "\n";
    }
    return 0;
  }
  if (*dc) {
    RepresentationContext ctx(FiniteGroup::catalog(group));
    const auto subs = ctx.group().subgroups();
    int failures = 0;
    for (auto h : subs)
      for (auto k : subs) {
        DoubleCosetResult r = double_coset_check(ctx, h, k);
        std::cout << (r.ok ? "ok   " : "FAIL ") << "|H|=" << std::popcount(h) << " H=0x" << std::hex << h
                  << " |K|=" << std::dec << std::popcount(k) << " K=0x" << std::hex << k << std::dec
                  << " double cosets=" << r.double_cosets << " irreducibles=" << r.irreducibles_checked
                  << (r.ok ? "" : " " + r.detail) << "\n";
        if (!r.ok) ++failures;
      }
    std::cout << group << ": " << subs.size() * subs.size() << " pairs, " << failures << " failures\n";
    return failures == 0 ? 0 : 1;
  }
  if (*st) return acceptance::run_all(fields, ids, std::cout) == 0 ? 0 : 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::InvariantViolation ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

#include "leavitt/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "leavitt/classify.hpp"
#include "leavitt/error.hpp"
#include "leavitt/serialize.hpp"

namespace leavitt {

namespace {

void strip_seconds(json& j) {
  if (j.is_object()) {
    j.erase("seconds");
    for (auto& [key, value] : j.items()) strip_seconds(value);
  } else if (j.is_array()) {
    for (auto& value : j) strip_seconds(value);
  }
}

void emit(const RunConfig& config, json j, std::ostream& out) {
  if (!config.timing) strip_seconds(j);
  out << j.dump(2) << "\n";
}

// d >= n is replaced by its representative in 1..n-1.
int effective_d(int n, int d) { return d >= n ? reduce_large_d(n, d) : d; }

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

PlacementStrategy parse_strategy(const std::string& s) {
  if (s == "canonical") return PlacementStrategy::Canonical;
  if (s == "random") return PlacementStrategy::SeededRandom;
  throw Error(ErrorCode::InvalidArgument, "placement must be canonical or random");
}

GeneratorSet construct_from_config(const RunConfig& c, int d) {
  if (c.graded) return build_graded_generators(c.n, c.d);
  if (c.lex) return leavitt_lexicographic_generators(c.n, d);
  return construct_main(make_profile(c.n, d), parse_strategy(c.placement), c.seed);
}

int cmd_profile(const RunConfig& c, std::ostream& out) {
  const int d = effective_d(c.n, c.d);
  Profile p = make_profile(c.n, d);
  if (c.pretty) {
    Counts k = counts(p);
    out << "n = " << p.n << ", d = " << p.d;
    if (d != c.d) out << " (reduced from " << c.d << ")";
    out << "\nq = " << p.q << ", r = " << p.r << ", s = " << p.s << "\n"
        << "h-sequence: " << join(p.hseq) << "\n"
        << "u-sequence: " << join(p.useq) << "\n"
        << "S1hat = {" << join(p.s1hat) << "}, S2hat = {" << join(p.s2hat) << "}\n"
        << "d1 = " << p.d1 << ", d2 = " << p.d2 << ", e1 = " << p.e1 << ", e2 = " << p.e2 << ", f1 = " << p.f1
        << ", f2 = " << p.f2 << ", b = " << p.b << ", t = " << p.t << "\n"
        << "list size = " << k.list_size << ", boxes = " << k.box_count << ", class-1 boxes = " << k.s1_box_count
        << ", class-1 entries = " << k.s1_list_count << "\n"
        << "automorphism count = " << automorphism_count(p).get_str() << "\n";
    return 0;
  }
  json j = profile_to_json(p);
  if (d != c.d) j["requested_d"] = c.d;
  j["automorphism_count"] = automorphism_count(p).get_str();
  emit(c, j, out);
  return 0;
}

int cmd_construct(const RunConfig& c, std::ostream& out) {
  const int d = c.graded ? c.d : effective_d(c.n, c.d);
  GeneratorSet g = construct_from_config(c, d);
  if (c.pretty) {
    out << render_generator_set(g);
    return 0;
  }
  json j = generator_set_to_json(g);
  if (d != c.d) j["requested_d"] = c.d;
  emit(c, j, out);
  return 0;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  GeneratorSet g;
  std::vector<ClosureTarget> targets;
  int requested_d = c.d;
  if (!c.set_path.empty()) {
    Fixture f = load_fixture(c.set_path);
    g = std::move(f.set);
    targets = std::move(f.targets);
    requested_d = g.d;
  } else {
    g = construct_from_config(c, c.graded ? c.d : effective_d(c.n, c.d));
  }
  if (targets.empty()) targets = default_targets(g.n, g.d);
  ClosureOptions options;
  options.degree_bound = c.degree_bound;
  options.iteration_bound = c.iteration_bound;

  VerifyReport report;
  bool certificate_route = !c.closure && g.provenance == Provenance::MainConstruction && (g.placement || g.d == 1);
  if (certificate_route) {
    Profile p = make_profile(g.n, g.d);
    report = verify_constructed(p, g);
    if (!c.certificate_out.empty() && report.relations.ok) {
      std::ofstream file(c.certificate_out);
      if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write " + c.certificate_out);
      file << certificate_to_json(generation_certificate(p, g, false)).dump() << "\n";
    }
  } else {
    report.relations = check_relations(g);
    if (report.relations.ok) {
      report.closure = compression_closure(g, targets, options);
      report.depth = report.closure->depth;
      report.generation = report.closure->status == ClosureStatus::Verified ? GenerationStatus::VerifiedByClosure
                                                                            : GenerationStatus::NotFoundUpToBound;
    }
  }
  if (c.pretty) {
    out << "M_" << g.d << "(L_" << g.n << ") " << provenance_name(g.provenance) << "\n";
    out << "relations: " << (report.relations.ok ? "pass" : "FAIL") << "\n";
    if (report.relations.first_failure) {
      const auto& f = *report.relations.first_failure;
      out << (f.i == 0 ? std::string("sum relation") : "X_" + std::to_string(f.i) + " Y_" + std::to_string(f.j))
          << " residual:\n" << render_matrix(f.residual);
    }
    out << "generation: " << generation_status_name(report.generation);
    if (report.certificate) out << " (" << report.certificate->checked << " named nodes checked)";
    if (report.closure) out << " (" << report.closure->engine << " engine, depth " << report.closure->depth << ")";
    out << "\n";
    if (report.closure) {
      for (const auto& u : report.closure->unresolved) out << "unresolved: " << u << "\n";
    }
  } else {
    json j = verify_report_to_json(report);
    j["n"] = g.n;
    j["d"] = g.d;
    if (requested_d != g.d) j["requested_d"] = requested_d;
    j["provenance"] = provenance_name(g.provenance);
    emit(c, j, out);
  }
  return report.exit_code();
}

int cmd_classify(const RunConfig& c, std::ostream& out) {
  const int m = c.m.value_or(c.n);
  const int k = c.k.value_or(1);
  K0Class k0 = k0_data(c.n, c.d);
  ModuleType mt = module_type(c.n, c.d);
  IsoDecision iso = is_isomorphic(c.n, c.d, m, k);
  std::optional<bool> graded;
  std::optional<bool> degree_one;
  if (c.graded) {
    graded = graded_iso_exists(c.n, c.d);
    if (gcd(c.d, c.n - 1) == 1) degree_one = degree_one_generating_set_possible(c.n, c.d);
  }
  std::string verdict = iso.isomorphic ? "isomorphic" : "not isomorphic";
  if (c.pretty) {
    out << "K0(M_" << c.d << "(L_" << c.n << ")) = (Z/" << k0.modulus << "Z, [" << k0.unit_class << "])\n";
    out << "module type (" << mt.first << ", " << mt.second << ")\n";
    out << "M_" << c.d << "(L_" << c.n << ") vs M_" << k << "(L_" << m << "): " << verdict << " (" << iso.reason << ")\n";
    if (graded) out << "graded isomorphism to L_" << c.n << ": " << (*graded ? "exists" : "does not exist") << "\n";
    return 0;
  }
  json j = {{"n", c.n},
            {"d", c.d},
            {"k0", {{"modulus", k0.modulus}, {"unit_class", k0.unit_class}}},
            {"module_type", {mt.first, mt.second}},
            {"compare", {{"m", m}, {"k", k}, {"isomorphic", iso.isomorphic}, {"verdict", verdict}, {"reason", iso.reason}}}};
  if (graded) {
    j["graded_iso_exists"] = *graded;
    j["graded_reason"] = "prime-divisibility";
    j["degree_one_generating_set_possible"] = degree_one ? json(*degree_one) : json(nullptr);
  }
  emit(c, j, out);
  return 0;
}

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

int cmd_reproduce(const RunConfig& c, std::ostream& out) {
  std::vector<Check> checks;
  auto add = [&](std::string name, bool pass, std::string detail = "") {
    checks.push_back({std::move(name), pass, std::move(detail)});
  };

  {
    Profile p = make_profile(35, 13);
    bool ok = p.hseq == std::vector<int>{1, 6, 11, 3, 8, 13, 5, 10, 2, 7, 12, 4, 9} &&
              p.s1hat == std::vector<int>{1, 3, 6, 8, 11} && p.d1 == 5 && p.d2 == 8 && p.e1 == 2 && p.e2 == 4 &&
              p.f1 == 4 && p.f2 == 5 && p.b == 3 && p.t == 1;
    add("profile (35,13)", ok, "hseq " + join(p.hseq));
  }

  const std::string dir = c.fixture_dir.empty() ? default_fixture_dir() : c.fixture_dir;
  for (Fixture& f : load_fixtures(dir)) {
    RelationReport rel = check_relations(f.set);
    add("fixture " + f.name + " relations", rel.ok == f.expect_relations, rel.ok ? "pass" : "fail");
    if (!rel.ok) continue;
    ClosureOptions options;
    options.degree_bound = c.degree_bound;
    options.iteration_bound = c.iteration_bound;
    auto targets = f.targets.empty() ? default_targets(f.set.n, f.set.d) : f.targets;
    ClosureResult r = compression_closure(f.set, targets, options);
    add("fixture " + f.name + " closure", r.status == f.expect_closure,
        std::string(closure_status_name(r.status)) + " depth " + std::to_string(r.depth));
    if (f.set.d < f.set.n && gcd(f.set.d, f.set.n - 1) == 1) {
      Profile p = make_profile(f.set.n, f.set.d);
      if (auto placement = infer_placement(p, f.set)) {
        GeneratorSet g = build_generators(p, *placement);
        VerifyReport v = verify_constructed(p, g);
        add("fixture " + f.name + " certificate", v.exit_code() == 0, generation_status_name(v.generation));
      }
    }
  }

  int certified = 0;
  int total = 0;
  for (int n = 2; n <= c.grid_max; ++n) {
    for (int d = 1; d < n; ++d) {
      if (gcd(d, n - 1) != 1) continue;
      ++total;
      Profile p = make_profile(n, d);
      VerifyReport v = verify_constructed(p, construct_main(p));
      if (v.exit_code() == 0) ++certified;
      else add("grid (" + std::to_string(n) + "," + std::to_string(d) + ")", false, generation_status_name(v.generation));
    }
  }
  add("grid n <= " + std::to_string(c.grid_max) + " certified", certified == total,
      std::to_string(certified) + "/" + std::to_string(total));

  bool classifier_ok = true;
  for (int n = 2; n <= 12; ++n) {
    for (int d = 1; d <= 30; ++d) {
      classifier_ok = classifier_ok && is_isomorphic(n, d, n, 1).isomorphic == (gcd(d, n - 1) == 1);
    }
  }
  add("classifier matches gcd(d, n-1) = 1", classifier_ok);
  add("graded (6,3) exists, (5,3) and (9,5) do not",
      graded_iso_exists(6, 3) && !graded_iso_exists(5, 3) && !graded_iso_exists(9, 5));
  add("automorphism count (5,3) = 48", automorphism_count(make_profile(5, 3)) == 48);

  bool all = true;
  for (const auto& ch : checks) all = all && ch.pass;
  if (c.pretty) {
    std::size_t width = 0;
    for (const auto& ch : checks) width = std::max(width, ch.name.size());
    for (const auto& ch : checks) {
      out << (ch.pass ? "PASS  " : "FAIL  ") << ch.name << std::string(width - ch.name.size() + 2, ' ') << ch.detail << "\n";
    }
    out << (all ? "all checks passed" : "some checks FAILED") << "\n";
  } else {
    json rows = json::array();
    for (const auto& ch : checks) rows.push_back({{"name", ch.name}, {"pass", ch.pass}, {"detail", ch.detail}});
    emit(c, {{"checks", rows}, {"all_passed", all}}, out);
  }
  return all ? 0 : 1;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == "profile") return cmd_profile(config, out);
    if (config.command == "construct") return cmd_construct(config, out);
    if (config.command == "verify") return cmd_verify(config, out);
    if (config.command == "classify") return cmd_classify(config, out);
    if (config.command == "reproduce") return cmd_reproduce(config, out);
    err << "unknown command: " << config.command << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::CertificateMismatch ? kExitRelationFailure : kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Exact computations with Leavitt algebras L_n and matrix rings M_d(L_n)", "leavitt"};
  app.require_subcommand(1, 1);
  app.add_flag("--timing", config.timing, "Include wall-clock timings in JSON output");

  auto add_output = [&](CLI::App* sub) {
    auto* json_flag = sub->add_flag("--json", "JSON output (default)");
    auto* pretty = sub->add_flag("--pretty", config.pretty, "Human-readable output");
    json_flag->excludes(pretty);
  };
  auto add_nd = [&](CLI::App* sub) {
    sub->add_option("--n", config.n, "Leavitt algebra index n")->required()->check(CLI::Range(2, 65535));
    sub->add_option("--d", config.d, "Matrix size d")->required()->check(CLI::Range(1, 1000000));
  };

  auto* profile = app.add_subcommand("profile", "Arithmetic profile of (n, d)");
  add_nd(profile);
  add_output(profile);

  auto add_construction = [&](CLI::App* sub) {
    sub->add_option("--placement", config.placement, "Placement strategy")->check(CLI::IsMember({"canonical", "random"}));
    sub->add_option("--seed", config.seed, "Seed for the random placement");
    auto* graded = sub->add_flag("--graded", config.graded, "Graded lexicographic set (d divides n)");
    auto* lex = sub->add_flag("--lex", config.lex, "Lexicographic fill of x_1..x_n down the columns");
    graded->excludes(lex);
  };

  auto* construct = app.add_subcommand("construct", "Build a generating set of M_d(L_n)");
  add_nd(construct);
  add_construction(construct);
  add_output(construct);

  auto* verify = app.add_subcommand("verify", "Check relations and generation");
  auto* vn = verify->add_option("--n", config.n, "Leavitt algebra index n")->check(CLI::Range(2, 65535));
  auto* vd = verify->add_option("--d", config.d, "Matrix size d")->check(CLI::Range(1, 1000000));
  auto* set = verify->add_option("--set", config.set_path, "Generator set or fixture JSON file")->check(CLI::ExistingFile);
  set->excludes(vn)->excludes(vd);
  add_construction(verify);
  verify->add_flag("--closure", config.closure, "Use span closure instead of the certificate");
  verify->add_option("--degree-bound", config.degree_bound, "Longest monomial allowed during closure")->check(CLI::Range(1, 64));
  verify->add_option("--iteration-bound", config.iteration_bound, "Closure depth bound")->check(CLI::Range(1, 1000));
  verify->add_option("--certificate-out", config.certificate_out, "Write the certificate DAG as JSON");
  add_output(verify);

  auto* classify = app.add_subcommand("classify", "K0 data and isomorphism decisions");
  add_nd(classify);
  auto* mo = classify->add_option("--m", config.m, "Compare with M_k(L_m): m")->check(CLI::Range(2, 65535));
  auto* ko = classify->add_option("--k", config.k, "Compare with M_k(L_m): k")->check(CLI::Range(1, 1000000));
  mo->needs(ko);
  ko->needs(mo);
  classify->add_flag("--graded", config.graded, "Also decide the graded question");
  add_output(classify);

  auto* reproduce = app.add_subcommand("reproduce", "Run every worked example and print a pass/fail table");
  reproduce->add_option("--fixtures", config.fixture_dir, "Fixture directory")->check(CLI::ExistingDirectory);
  reproduce->add_option("--grid-max", config.grid_max, "Largest n of the certificate grid")->check(CLI::Range(2, 20));
  reproduce->add_option("--degree-bound", config.degree_bound, "Longest monomial allowed during closure")->check(CLI::Range(1, 64));
  reproduce->add_option("--iteration-bound", config.iteration_bound, "Closure depth bound")->check(CLI::Range(1, 1000));
  add_output(reproduce);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kExitUsage;
  }
  config.command = app.get_subcommands().front()->get_name();
  if (config.command == "verify" && config.set_path.empty() && (config.n == 0 || config.d == 0)) {
    err << "usage error: verify needs --n and --d, or --set\n";
    return kExitUsage;
  }

  std::optional<FieldScope> field;
  if (const char* env = std::getenv("LEAVITT_FIELD")) {
    try {
      field.emplace(Field::parse(env));
    } catch (const Error& e) {
      err << "usage error: LEAVITT_FIELD: " << e.what() << "\n";
      return kExitUsage;
    }
  }
  return run(config, out, err);
}

}  // namespace leavitt

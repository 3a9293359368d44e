#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "sublat/enumerate.hpp"
#include "sublat/fixtures.hpp"
#include "sublat/fmp.hpp"
#include "sublat/json_io.hpp"
#include "sublat/pairs.hpp"
#include "sublat/paper_suite.hpp"
#include "sublat/proof_corpus.hpp"
#include "sublat/representation.hpp"

namespace {

using sublat::Json;

int g_indent = 2;

void emit(const Json& j) { std::cout << j.dump(g_indent) << "\n"; }

sublat::ClassTag parse_class(const std::string& name) {
  auto tag = sublat::class_tag_from_string(name);
  if (!tag) throw sublat::ValidationError("unknown class tag '" + name + "'");
  return *tag;
}

sublat::FiniteAlgebra resolve_algebra(const std::string& fixture_name, const std::string& file) {
  if (!fixture_name.empty() && !file.empty())
    throw sublat::ValidationError("give either --fixture or --algebra, not both");
  if (!fixture_name.empty()) return sublat::fixture(fixture_name).algebra;
  if (!file.empty()) return sublat::load_algebra(sublat::read_json_file(file));
  throw sublat::ValidationError("an algebra is required (--fixture or --algebra)");
}

std::vector<int> parse_indices(const std::string& csv) {
  std::vector<int> out;
  std::string cur;
  for (char ch : csv + ",") {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  return out;
}

int cmd_check(const std::string& fixture_name, const std::string& file, const std::string& cls, bool expect_fail) {
  sublat::FiniteAlgebra a = resolve_algebra(fixture_name, file);
  sublat::ClassVerdict verdict = sublat::check_class(a, parse_class(cls));
  Json out = sublat::verdict_to_json(verdict);
  out["class"] = cls;
  emit(out);
  const bool ok = expect_fail ? !verdict.member : verdict.member;
  return ok ? 0 : 1;
}

int cmd_build_pair(const std::string& lattice_file, const std::string& d_csv, const std::string& mode) {
  Json j = sublat::read_json_file(lattice_file);
  sublat::FiniteLattice lattice =
      mode == "srs" ? [&] {
        sublat::LoadedAlgebra loaded = sublat::algebra_from_json(j);
        if (!loaded.algebra.meet) throw sublat::ValidationError("srs mode needs a meet table");
        sublat::FiniteLattice l = sublat::underlying_lattice(loaded.algebra);
        return l;
      }()
                    : sublat::load_lattice(j);

  std::vector<int> d;
  if (!d_csv.empty())
    d = parse_indices(d_csv);
  else if (auto loaded = sublat::algebra_from_json(j); loaded.designated)
    d = *loaded.designated;
  else if (mode == "2srl")
    d = {};
  else
    throw sublat::ValidationError("build-pair needs --d or a D field in the file");

  sublat::FiniteAlgebra built;
  if (mode == "srl")
    built = sublat::build_implication({lattice, d});
  else if (mode == "srs")
    built = sublat::build_srs_pair({lattice, d});
  else if (mode == "2srl")
    built = sublat::two_srl(lattice);
  else
    throw sublat::ValidationError("unknown mode '" + mode + "' (srl|srs|2srl)");
  emit(sublat::algebra_to_json(built, sublat::box_set(built)));
  return 0;
}

int cmd_represent(const std::string& fixture_name, const std::string& file, const std::string& kind_name,
                  bool verify) {
  sublat::FiniteAlgebra a = resolve_algebra(fixture_name, file);
  const sublat::FilterKind kind = kind_name == "lattice" ? sublat::FilterKind::lattice
                                                         : sublat::FilterKind::implicative;
  if (kind_name != "lattice" && kind_name != "implicative")
    throw sublat::ValidationError("unknown kind '" + kind_name + "' (implicative|lattice)");
  Json out;
  if (verify) {
    sublat::RepresentationReport report = sublat::verify_representation(a, kind);
    out["filters"] = report.filter_count;
    out["upsets"] = report.upset_count;
    out["designated"] = report.designated_count;
    out["pass"] = report.pass;
    out["failures"] = report.failures;
    emit(out);
    return report.pass ? 0 : 1;
  }
  sublat::UpsetAlgebra ua = sublat::build_upset_algebra(a, kind);
  out["filters"] = static_cast<int>(ua.filters.filters.size());
  out["upsets"] = ua.algebra.size;
  out["designated"] = static_cast<int>(ua.designated.size());
  emit(out);
  return 0;
}

int cmd_enumerate(int size, const std::string& cls, bool up_to_iso, bool count_only) {
  auto algebras = sublat::enumerate_class(size, parse_class(cls), up_to_iso);
  Json out;
  out["size"] = size;
  out["class"] = cls;
  out["up_to_iso"] = up_to_iso;
  out["count"] = static_cast<int>(algebras.size());
  if (!count_only) {
    Json list = Json::array();
    for (const auto& a : algebras) list.push_back(sublat::algebra_to_json(a));
    out["algebras"] = std::move(list);
  }
  emit(out);
  return 0;
}

int cmd_check_proof(const std::string& file) {
  sublat::Proof proof = sublat::proof_from_json(sublat::read_json_file(file));
  const sublat::CalculusSpec* calculus = sublat::find_calculus(proof.calculus);
  if (!calculus) throw sublat::ValidationError("unknown calculus '" + proof.calculus + "'");
  sublat::ProofVerdict verdict = sublat::check_proof(*calculus, proof);
  emit(sublat::proof_verdict_to_json(verdict));
  return verdict.valid ? 0 : 1;
}

int cmd_countermodel(const std::string& formula_text, const std::string& cls, int max_size, bool shrink) {
  sublat::Formula f = sublat::parse_formula(formula_text);
  const sublat::ClassTag tag = parse_class(cls);
  auto cm = sublat::find_countermodel(f, tag, max_size);
  Json out;
  if (!cm) {
    out["verdict"] = "no-countermodel-up-to(" + std::to_string(max_size) + ")";
    emit(out);
    return 1;
  }
  out["verdict"] = "refuted";
  out["countermodel"] = sublat::countermodel_to_json(*cm);
  if (shrink) {
    if (tag == sublat::ClassTag::sha) {
      sublat::ShrinkResult s = sublat::fmp_shrink_sha(*cm);
      out["shrunk"] = sublat::countermodel_to_json(s.cm);
    } else if (tag == sublat::ClassTag::srl) {
      sublat::ShrinkResult s = sublat::fmp_shrink_srl(*cm);
      out["shrunk"] = sublat::countermodel_to_json(s.cm);
    } else if (tag == sublat::ClassTag::srlbs) {
      sublat::ShrinkResult s = sublat::fmp_shrink_srlbs(*cm);
      out["shrunk"] = sublat::countermodel_to_json(s.cm);
    } else {
      out["shrunk"] = nullptr;
      out["note"] = "--shrink supports sha, srl and srlbs";
    }
  }
  emit(out);
  return 0;
}

int cmd_entails(const std::vector<std::string>& hyp_texts, const std::string& goal_text, const std::string& cls,
                int max_size) {
  std::vector<sublat::Formula> hyps;
  for (const std::string& h : hyp_texts) hyps.push_back(sublat::parse_formula(h));
  sublat::EntailsResult result = sublat::entails(hyps, sublat::parse_formula(goal_text), parse_class(cls), max_size);
  Json out;
  out["verdict"] = result.verdict();
  if (result.countermodel) out["countermodel"] = sublat::countermodel_to_json(*result.countermodel);
  emit(out);
  return result.refuted ? 1 : 0;
}

int cmd_prove(const std::vector<std::string>& hyp_texts, const std::string& goal_text, const std::string& calc_name,
              int depth) {
  const sublat::CalculusSpec* calculus = sublat::find_calculus(calc_name);
  if (!calculus) throw sublat::ValidationError("unknown calculus '" + calc_name + "'");
  std::vector<sublat::Formula> hyps;
  for (const std::string& h : hyp_texts) hyps.push_back(sublat::parse_formula(h));
  auto proof = sublat::bounded_search(*calculus, hyps, sublat::parse_formula(goal_text), depth);
  Json out;
  if (!proof) {
    out["found"] = false;
    out["note"] = "not found within depth " + std::to_string(depth) + " (search is incomplete)";
    emit(out);
    return 1;
  }
  out["found"] = true;
  out["proof"] = sublat::proof_to_json(*proof);
  emit(out);
  return 0;
}

int cmd_paper_suite(bool as_json) {
  auto results = sublat::run_paper_suite();
  bool all_pass = true;
  if (as_json) {
    Json rows = Json::array();
    for (const auto& r : results) {
      rows.push_back({{"criterion", r.criterion},
                      {"id", r.id},
                      {"pass", r.pass},
                      {"detail", r.detail},
                      {"ms", r.millis}});
      all_pass = all_pass && r.pass;
    }
    emit(rows);
  } else {
    for (const auto& r : results) {
      all_pass = all_pass && r.pass;
      std::printf("[%s] %d %-28s %8.1f ms  %s\n", r.pass ? "PASS" : "FAIL", r.criterion, r.id.c_str(), r.millis,
                  r.detail.c_str());
    }
  }
  return all_pass ? 0 : 1;
}

int cmd_fixtures(const std::string& action, const std::string& dir) {
  if (action == "list") {
    Json rows = Json::array();
    for (const auto& f : sublat::fixtures())
      rows.push_back({{"name", f.name},
                      {"description", f.description},
                      {"size", f.algebra.size},
                      {"member_of", f.member_of},
                      {"not_member_of", f.not_member_of}});
    emit(rows);
    return 0;
  }
  if (action == "export") {
    for (const auto& f : sublat::fixtures()) {
      std::optional<std::vector<int>> d;
      try {
        d = sublat::box_set(f.algebra);
      } catch (const sublat::Error&) {
        // collapse-style fixtures have no designated part
      }
      const std::string path = dir + "/" + f.name + ".json";
      std::ofstream out(path);
      if (!out) throw sublat::ValidationError("cannot write " + path);
      out << sublat::algebra_to_json(f.algebra, d).dump(2) << "\n";
      std::cout << path << "\n";
    }
    return 0;
  }
  throw sublat::ValidationError("unknown fixtures action '" + action + "' (list|export)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-model toolkit for subresiduated lattices and their implicative subreducts"};
  app.require_subcommand(1);
  bool json_compact = false;
  app.add_flag("--json", json_compact, "compact single-line JSON output");

  std::string fixture_name, algebra_file, cls = "srl";
  bool expect_fail = false;
  auto* check = app.add_subcommand("check", "run a class membership check");
  check->add_option("--fixture", fixture_name, "built-in fixture name");
  check->add_option("--algebra", algebra_file, "algebra JSON file");
  check->add_option("--class", cls, "class tag")->required();
  check->add_flag("--expect-fail", expect_fail, "exit 0 when the check fails");

  std::string lattice_file, d_csv, mode = "srl";
  auto* build = app.add_subcommand("build-pair", "build the implication from a (lattice, D) pair");
  build->add_option("--lattice", lattice_file, "lattice JSON file")->required();
  build->add_option("--d", d_csv, "designated subset as comma-separated indices");
  build->add_option("--mode", mode, "srl|srs|2srl");

  std::string rep_fixture, rep_file, kind = "implicative";
  bool verify = false;
  auto* represent = app.add_subcommand("represent", "build the filter/upset representation");
  represent->add_option("--fixture", rep_fixture, "built-in fixture name");
  represent->add_option("--algebra", rep_file, "algebra JSON file");
  represent->add_option("--kind", kind, "implicative|lattice");
  represent->add_flag("--verify", verify, "check the embedding commutes");

  int size = 2;
  std::string enum_cls = "sha";
  bool up_to_iso = false, count_only = false;
  auto* enumerate = app.add_subcommand("enumerate", "list all class members of a given size");
  enumerate->add_option("--size", size, "carrier size")->required();
  enumerate->add_option("--class", enum_cls, "class tag")->required();
  enumerate->add_flag("--up-to-iso", up_to_iso, "deduplicate up to isomorphism");
  enumerate->add_flag("--count", count_only, "print only the count");

  std::string proof_file;
  auto* check_proof = app.add_subcommand("check-proof", "check a proof script");
  check_proof->add_option("file", proof_file, "proof JSON file")->required();

  std::string formula_text, cm_cls = "srl";
  int max_size = 5;
  bool shrink = false;
  auto* countermodel = app.add_subcommand("countermodel", "search for a falsifying algebra + valuation");
  countermodel->add_option("--formula", formula_text, "formula")->required();
  countermodel->add_option("--class", cm_cls, "class tag");
  countermodel->add_option("--max-size", max_size, "largest carrier to try");
  countermodel->add_flag("--shrink", shrink, "also run the applicable shrink construction");

  std::vector<std::string> hyp_texts;
  std::string goal_text, ent_cls = "srl";
  int ent_max_size = 5;
  auto* entails_cmd = app.add_subcommand("entails", "semantic entailment up to a size bound");
  entails_cmd->add_option("--hyp", hyp_texts, "hypothesis formula (repeatable)");
  entails_cmd->add_option("--goal", goal_text, "goal formula")->required();
  entails_cmd->add_option("--class", ent_cls, "class tag");
  entails_cmd->add_option("--max-size", ent_max_size, "largest carrier to try");

  std::vector<std::string> prove_hyps;
  std::string prove_goal, prove_calc = "R4star";
  int depth = 4;
  auto* prove = app.add_subcommand("prove", "bounded proof search (incomplete by design)");
  prove->add_option("--hyp", prove_hyps, "hypothesis formula (repeatable)");
  prove->add_option("--goal", prove_goal, "goal formula")->required();
  prove->add_option("--calculus", prove_calc, "calculus name");
  prove->add_option("--depth", depth, "rule-application depth bound");

  bool suite_json = false;
  auto* suite = app.add_subcommand("paper-suite", "run every reproducible claim and print a pass/fail table");
  suite->add_flag("--json", suite_json, "emit the table as JSON");

  std::string fixtures_action = "list", fixtures_dir = ".";
  auto* fixtures_cmd = app.add_subcommand("fixtures", "list or export the built-in fixtures");
  fixtures_cmd->add_option("action", fixtures_action, "list|export");
  fixtures_cmd->add_option("--dir", fixtures_dir, "output directory for export");

  // global knobs shared by subcommands that sample randomly (reserved)
  int seed = 0;
  app.add_option("--seed", seed, "seed for randomized sampling (reserved)");

  CLI11_PARSE(app, argc, argv);
  if (json_compact) g_indent = -1;

  try {
    if (*check) return cmd_check(fixture_name, algebra_file, cls, expect_fail);
    if (*build) return cmd_build_pair(lattice_file, d_csv, mode);
    if (*represent) return cmd_represent(rep_fixture, rep_file, kind, verify);
    if (*enumerate) return cmd_enumerate(size, enum_cls, up_to_iso, count_only);
    if (*check_proof) return cmd_check_proof(proof_file);
    if (*countermodel) return cmd_countermodel(formula_text, cm_cls, max_size, shrink);
    if (*entails_cmd) return cmd_entails(hyp_texts, goal_text, ent_cls, ent_max_size);
    if (*prove) return cmd_prove(prove_hyps, prove_goal, prove_calc, depth);
    if (*suite) return cmd_paper_suite(suite_json);
    if (*fixtures_cmd) return cmd_fixtures(fixtures_action, fixtures_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

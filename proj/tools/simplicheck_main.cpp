// Command-line driver: check formulas on simplicial models, run the
// translations, batch-run the bounded theorem suite, and emit models.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "simplicheck/checker.hpp"
#include "simplicheck/error.hpp"
#include "simplicheck/fixtures.hpp"
#include "simplicheck/model_json.hpp"
#include "simplicheck/parser.hpp"
#include "simplicheck/rng.hpp"
#include "simplicheck/semantics2.hpp"
#include "simplicheck/semantics3.hpp"
#include "simplicheck/translate.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace simplicheck;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

std::uint64_t enumeration_cap() {
  if (const char* env = std::getenv("SIMPLICHECK_CAP")) {
    return std::strtoull(env, nullptr, 10);
  }
  return kDefaultEnumerationCap;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      if (!current.empty()) out.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) out.push_back(current);
  return out;
}

json classify_json(const Formula& f) {
  LanguageClass cls = classify(f);
  return {{"knowledge", cls.knowledge == KnowledgeKind::Individual
                            ? "individual"
                            : "distributed"},
          {"atoms", cls.atoms == AtomKind::Local ? "local" : "glocal"}};
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  out << text << "\n";
}

struct CheckArgs {
  std::string model_path;
  std::string formula;
  std::string facet_name;
  std::string face_ids;
  std::string semantics = "3-face";
  bool acknowledge_infelicitous = false;
};

int run_check(const CheckArgs& args) {
  SimplicialModel model = model_from_file(args.model_path);

  Face point = [&] {
    if (!args.facet_name.empty()) {
      auto facet = model.facet_by_name(args.facet_name);
      if (!facet) {
        throw Error(ErrorCode::FacetRequired,
                    "model has no facet named '" + args.facet_name + "'");
      }
      return *facet;
    }
    if (!args.face_ids.empty()) {
      auto ids = split_commas(args.face_ids);
      return model.face_from_ids(ids);
    }
    throw Error(ErrorCode::EvaluationPointNotInModel,
                "give an evaluation point with --facet or --face");
  }();

  TopPolicy policy = TopPolicy::Glocal;
  if (args.semantics == "3-face") policy = TopPolicy::ThreeValuedLocal;
  if (args.semantics == "2-facet" || args.semantics == "2-face-demo") {
    policy = TopPolicy::TwoValuedLocal;
  }
  Formula f = parse(args.formula, model.universe(), policy);

  std::string verdict;
  if (args.semantics == "3-face") {
    verdict = to_string(eval3(model, point, f, SemanticsMode::Face));
  } else if (args.semantics == "3-facet") {
    verdict = to_string(eval3(model, point, f, SemanticsMode::Facet));
  } else if (args.semantics == "2-facet") {
    verdict = eval2_facet(model, point, f) ? "true" : "false";
  } else if (args.semantics == "2-face-demo") {
    if (!args.acknowledge_infelicitous) {
      std::cerr << "the two-valued face semantics validates formulas like "
                   "<K a> T -> <K a> ~p_b and is not monotone; it is kept "
                   "only to demonstrate that defect.\n"
                   "pass --i-know-this-is-infelicitous to run it anyway.\n";
      return kExitUsage;
    }
    verdict = eval2_face(model, point, f) ? "true" : "false";
  } else {
    throw Error(ErrorCode::InvalidFamilySpec,
                "unknown semantics '" + args.semantics + "'");
  }

  json record = {{"model", args.model_path},
                 {"point", model.face_ids(point)},
                 {"formula", print(f)},
                 {"semantics", args.semantics},
                 {"verdict", verdict}};
  std::cout << verdict << "\n" << record.dump() << "\n";
  return kExitPass;
}

struct TranslateArgs {
  std::string formula;
  std::string which = "def";
  std::string agents = "a,b,c";
  std::vector<std::string> extra_atoms;
};

int run_translate(const TranslateArgs& args) {
  std::vector<std::string> agents = split_commas(args.agents);
  std::map<std::string, std::vector<std::string>> atoms;
  for (const auto& agent : agents) atoms[agent] = {"p_" + agent};
  for (const auto& spec : args.extra_atoms) {
    auto eq = spec.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::InvalidModelJson,
                  "--atom expects NAME=AGENT, got '" + spec + "'");
    }
    atoms[spec.substr(eq + 1)].push_back(spec.substr(0, eq));
  }
  Universe universe(agents, atoms);

  Formula input = parse(args.formula, universe, TopPolicy::Glocal);
  Formula def = translate_def(input, universe);
  Formula sharp = translate_sharp(input, universe);

  Formula top = local_top(universe);
  PrintOptions pretty{.top = &top, .fold_singleton_diamond = true};

  std::string selected;
  if (args.which == "def") {
    selected = print(def, pretty);
  } else if (args.which == "sharp") {
    selected = print(sharp, pretty);
  } else if (args.which == "validity") {
    selected = "(" + print(def, pretty) + ") -> " + print(sharp, pretty);
  } else {
    throw Error(ErrorCode::InvalidFamilySpec,
                "--which must be def, sharp or validity");
  }

  json record = {{"input", print(input)},
                 {"which", args.which},
                 {"def", print(def)},
                 {"sharp", print(sharp)},
                 {"validity", print(translate_validity(input, universe))},
                 {"classify", {{"input", classify_json(input)},
                               {"def", classify_json(def)},
                               {"sharp", classify_json(sharp)}}}};
  std::cout << selected << "\n" << record.dump() << "\n";
  return kExitPass;
}

struct TheoremArgs {
  bool use_default = false;
  int agents = 0;
  int atoms_per_agent = 1;
  int max_facets = 2;
  bool exhaustive = false;
  int random_count = 0;
  std::uint64_t seed = 0;
  bool seed_given = false;
  int formulas = 200;
  int depth = 3;
  std::uint64_t formula_seed = 42;
  std::string only;
  std::string out_dir = "reports";
  bool minimize = false;
};

ModelFamily family_from_args(const TheoremArgs& args) {
  if (args.use_default) return ModelFamily::default_family();
  if (args.agents == 0) {
    throw Error(ErrorCode::InvalidFamilySpec,
                "describe a family with --default or --agents N plus "
                "--exhaustive / --random COUNT --seed S");
  }
  FamilySpec spec{args.agents, args.atoms_per_agent, args.max_facets};
  std::optional<ModelFamily> family;
  if (args.exhaustive) {
    family = ModelFamily::exhaustive(spec, enumeration_cap());
  }
  if (args.random_count > 0) {
    if (!args.seed_given) {
      throw Error(ErrorCode::InvalidFamilySpec,
                  "--random requires an explicit --seed");
    }
    ModelFamily part = ModelFamily::random(spec, args.seed, args.random_count);
    if (family) {
      family->extend(part);
    } else {
      family = std::move(part);
    }
  }
  if (!family) {
    throw Error(ErrorCode::InvalidFamilySpec,
                "choose --exhaustive and/or --random COUNT --seed S");
  }
  return *family;
}

int run_theorems(const TheoremArgs& args) {
  ModelFamily family = family_from_args(args);
  FormulaBudget budget{args.formula_seed, args.formulas, args.depth};

  std::vector<CheckReport> reports;
  if (!args.only.empty()) {
    reports.push_back(run_theorem(args.only, family, budget));
  } else {
    reports = run_all(family, budget);
  }

  fs::create_directories(args.out_dir);
  bool all_pass = true;
  json summary = json::array();
  for (auto& report : reports) {
    if (args.minimize && report.counterexample) {
      report.counterexample = minimize_counterexample(*report.counterexample);
    }
    all_pass = all_pass && report.pass;
    json doc = report.to_json();
    summary.push_back(doc);
    write_file(fs::path(args.out_dir) / ("report-" + report.theorem + ".json"),
               doc.dump(2));
    if (report.counterexample) {
      write_file(fs::path(args.out_dir) /
                     ("cex-" + report.theorem + ".model.json"),
                 report.counterexample->model.dump(2));
    }
    std::cout << (report.pass ? "[PASS] " : "[FAIL] ") << report.theorem
              << "  (models=" << report.stats.models
              << " points=" << report.stats.points
              << " formulas=" << report.stats.formulas << " elapsed="
              << static_cast<long long>(report.stats.elapsed_ms) << "ms)";
    if (!report.note.empty()) std::cout << "  " << report.note;
    std::cout << "\n";
  }
  write_file(fs::path(args.out_dir) / "theorems.json", summary.dump(2));
  std::cout << (all_pass ? "all checks passed" : "counterexample found")
            << "; reports in " << args.out_dir << "\n";
  return all_pass ? kExitPass : kExitCounterexample;
}

int run_pure(const std::string& model_path) {
  SimplicialModel model = model_from_file(model_path);
  PurityReport report = purity_report(model);
  json witnesses = json::array();
  for (const auto& w : report.witnesses) {
    witnesses.push_back({{"facet", model.face_ids(w.facet)},
                         {"agent", w.missing_agent},
                         {"formula", print(w.formula)},
                         {"three_valued", std::string(to_string(w.three_valued))},
                         {"two_valued", w.two_valued}});
  }
  json record = {{"model", model_path},
                 {"pure", report.pure},
                 {"witnesses", witnesses}};
  std::cout << (report.pure ? "pure" : "impure") << "\n";
  for (const auto& w : report.witnesses) {
    std::cout << "  facet {";
    for (const auto& id : model.face_ids(w.facet)) std::cout << " " << id;
    std::cout << " } misses agent " << w.missing_agent << ": "
              << print(w.formula) << " is "
              << to_string(w.three_valued) << " three-valued but "
              << (w.two_valued ? "true" : "false") << " two-valued\n";
  }
  std::cout << record.dump() << "\n";
  return kExitPass;
}

struct EnumerateArgs {
  int agents = 2;
  int atoms_per_agent = 1;
  int max_facets = 2;
  int random_count = 0;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string out_dir;
};

int run_enumerate(const EnumerateArgs& args) {
  FamilySpec spec{args.agents, args.atoms_per_agent, args.max_facets};
  std::vector<SimplicialModel> models;
  if (args.random_count > 0) {
    if (!args.seed_given) {
      throw Error(ErrorCode::InvalidFamilySpec,
                  "--random requires an explicit --seed");
    }
    for (int i = 0; i < args.random_count; ++i) {
      models.push_back(random_model(
          mix64(args.seed, static_cast<std::uint64_t>(i)), spec));
    }
  } else {
    models = enumerate_models(spec, enumeration_cap());
  }
  if (!args.out_dir.empty()) {
    fs::create_directories(args.out_dir);
    std::size_t index = 0;
    for (const auto& m : models) {
      char name[32];
      std::snprintf(name, sizeof name, "model_%05zu.json", index++);
      write_file(fs::path(args.out_dir) / name, model_to_string(m));
    }
  }
  std::cout << models.size() << " models";
  if (!args.out_dir.empty()) std::cout << " written to " << args.out_dir;
  std::cout << "\n";
  return kExitPass;
}

int run_fixtures(const std::string& out_dir) {
  fs::create_directories(out_dir);
  for (const auto& [name, model] : fixtures()) {
    write_file(fs::path(out_dir) / (name + ".json"), model_to_string(model));
  }
  std::cout << "fixtures written to " << out_dir << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "simplicheck: epistemic logic on chromatic simplicial models — "
      "three- and two-valued semantics, translations, bounded theorem "
      "checks"};
  app.require_subcommand(1);

  CheckArgs check_args;
  auto* cmd_check = app.add_subcommand(
      "check", "Evaluate a formula at a face or facet of a model");
  cmd_check->add_option("model", check_args.model_path, "model JSON file")
      ->required();
  cmd_check->add_option("formula", check_args.formula, "formula text")
      ->required();
  cmd_check->add_option("--facet", check_args.facet_name, "facet by name");
  cmd_check->add_option("--face", check_args.face_ids,
                        "face as comma-separated vertex ids");
  cmd_check->add_option("--sem", check_args.semantics,
                        "3-face | 3-facet | 2-facet | 2-face-demo");
  cmd_check->add_flag("--i-know-this-is-infelicitous",
                      check_args.acknowledge_infelicitous,
                      "confirm running the two-valued face semantics");

  TranslateArgs translate_args;
  auto* cmd_translate = app.add_subcommand(
      "translate", "Compute the definability/truth translations");
  cmd_translate->add_option("formula", translate_args.formula, "formula text")
      ->required();
  cmd_translate->add_option("--which", translate_args.which,
                            "def | sharp | validity");
  cmd_translate->add_option("--agents", translate_args.agents,
                            "comma-separated agent names (default a,b,c; "
                            "each owns p_<agent>)");
  cmd_translate->add_option("--atom", translate_args.extra_atoms,
                            "extra atom as NAME=AGENT (repeatable)");

  TheoremArgs theorem_args;
  auto* cmd_theorems = app.add_subcommand(
      "theorems", "Run the bounded theorem suite over a model family");
  cmd_theorems->add_flag("--default", theorem_args.use_default,
                         "exhaustive 2-agent family plus 500 seeded random "
                         "3-agent models");
  cmd_theorems->add_option("--agents", theorem_args.agents, "2 or 3");
  cmd_theorems->add_option("--atoms-per-agent", theorem_args.atoms_per_agent,
                           "0 or 1");
  cmd_theorems->add_option("--max-facets", theorem_args.max_facets, "1..3");
  cmd_theorems->add_flag("--exhaustive", theorem_args.exhaustive,
                         "enumerate every model of the spec");
  cmd_theorems->add_option("--random", theorem_args.random_count,
                           "number of random models");
  cmd_theorems
      ->add_option("--seed", theorem_args.seed, "seed for --random")
      ->each([&](const std::string&) { theorem_args.seed_given = true; });
  cmd_theorems->add_option("--formulas", theorem_args.formulas,
                           "sampled formulas per theorem");
  cmd_theorems->add_option("--depth", theorem_args.depth,
                           "sampled formula height bound");
  cmd_theorems->add_option("--formula-seed", theorem_args.formula_seed,
                           "seed for formula sampling");
  cmd_theorems->add_option("--only", theorem_args.only,
                           "run a single registered theorem");
  cmd_theorems->add_option("--out", theorem_args.out_dir,
                           "directory for report files");
  cmd_theorems->add_flag("--minimize", theorem_args.minimize,
                         "greedily shrink counterexample models");

  std::string pure_model;
  auto* cmd_pure = app.add_subcommand(
      "pure", "Purity verdict with semantic disagreement witnesses");
  cmd_pure->add_option("model", pure_model, "model JSON file")->required();

  EnumerateArgs enumerate_args;
  auto* cmd_enumerate = app.add_subcommand(
      "enumerate", "Generate a model family and optionally dump it");
  cmd_enumerate->add_option("--agents", enumerate_args.agents, "2 or 3");
  cmd_enumerate->add_option("--atoms-per-agent",
                            enumerate_args.atoms_per_agent, "0 or 1");
  cmd_enumerate->add_option("--max-facets", enumerate_args.max_facets, "1..3");
  cmd_enumerate->add_option("--random", enumerate_args.random_count,
                            "sample this many random models instead");
  cmd_enumerate
      ->add_option("--seed", enumerate_args.seed, "seed for --random")
      ->each([&](const std::string&) { enumerate_args.seed_given = true; });
  cmd_enumerate->add_option("--out", enumerate_args.out_dir,
                            "directory for model files");

  std::string fixtures_dir = "fixtures";
  auto* cmd_fixtures = app.add_subcommand(
      "fixtures", "Write the named example models as JSON files");
  cmd_fixtures->add_option("--out", fixtures_dir, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_check->parsed()) return run_check(check_args);
    if (cmd_translate->parsed()) return run_translate(translate_args);
    if (cmd_theorems->parsed()) return run_theorems(theorem_args);
    if (cmd_pure->parsed()) return run_pure(pure_model);
    if (cmd_enumerate->parsed()) return run_enumerate(enumerate_args);
    if (cmd_fixtures->parsed()) return run_fixtures(fixtures_dir);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

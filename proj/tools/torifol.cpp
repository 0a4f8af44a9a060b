// torifol: command-line front end for toric foliated pairs.
//
//   torifol validate PAIR
//   torifol check PAIR [--assert PREDICATE]
//   torifol resolve PAIR --mode {dagger|smooth|log|fdlt}
//   torifol mmp run PAIR [--max-steps K] [--out FILE]
//   torifol cone PAIR
//
// Exit status: 0 success, 1 an asserted predicate is false, 2 error.

#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "torifol/io.hpp"

namespace {

using namespace torifol;

int emit(const Json& j, const std::string& out) {
  const std::string text = dump(j);
  if (out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) {
    std::cerr << dump(Json{{"error", "IOError"}, {"message", "cannot write " + out}});
    return 2;
  }
  f << text;
  return 0;
}

Verdict predicate(const ToricFoliatedPair& pair, const std::string& name) {
  if (name == "non_dicritical") return is_non_dicritical(pair.fan(), pair.W());
  if (name == "lc") return is_log_canonical(pair);
  if (name == "canonical") return is_canonical(pair);
  if (name == "f_dlt") return is_f_dlt(pair);
  if (name == "simple_singularities") return has_simple_singularities(pair.fan(), pair.W());
  Verdict v;
  v.value = is_algebraically_integrable(pair.W());
  if (!v.value) v.reason = "W is not defined over Q";
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toric foliated pairs: singularities, resolutions and the MMP"};
  app.require_subcommand(1);

  std::string path;
  std::string out;
  std::string assert_pred;
  std::string mode;
  int max_steps = kDefaultMaxSteps;

  auto* validate = app.add_subcommand("validate", "Parse and validate a problem file");
  validate->add_option("pair", path, "problem file")->required();

  auto* check = app.add_subcommand("check", "Singularity report");
  check->add_option("pair", path, "problem file")->required();
  check->add_option("--assert", assert_pred, "exit 1 if this predicate is false")
      ->check(CLI::IsMember({"non_dicritical", "lc", "canonical", "f_dlt", "simple_singularities",
                             "algebraically_integrable"}));

  auto* resolve = app.add_subcommand("resolve", "Resolutions and modifications");
  resolve->add_option("pair", path, "problem file")->required();
  resolve->add_option("--mode", mode, "dagger | smooth | log | fdlt")
      ->required()
      ->check(CLI::IsMember({"dagger", "smooth", "log", "fdlt"}));

  auto* mmp = app.add_subcommand("mmp", "Minimal model program");
  mmp->require_subcommand(1);
  auto* run = mmp->add_subcommand("run", "Run the MMP and emit the trace");
  run->add_option("pair", path, "problem file")->required();
  run->add_option("--max-steps", max_steps, "step cap")->check(CLI::PositiveNumber);

  auto* cone = app.add_subcommand("cone", "Cone theorem certificates");
  cone->add_option("pair", path, "problem file")->required();

  for (auto* sub : {validate, check, resolve, run, cone}) sub->add_option("--out", out, "write the report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    const ToricFoliatedPair pair = load_problem_file(path);
    if (*validate) {
      Json j{{"valid", true}, {"pair", pair_json(pair)}};
      j["fan"] = {{"simplicial", pair.fan().is_simplicial()},
                  {"smooth", pair.fan().is_smooth()},
                  {"complete", pair.fan().is_complete()}};
      return emit(j, out);
    }
    if (*check) {
      const int rc = emit(check_report(pair), out);
      if (rc != 0 || assert_pred.empty()) return rc;
      return predicate(pair, assert_pred) ? 0 : 1;
    }
    if (*resolve) {
      Json j{{"mode", mode}};
      if (mode == "dagger") {
        const RefinementMorphism m = dagger_resolution(pair.fan(), pair.W());
        j["morphism"] = morphism_json(m);
        j["non_dicritical"] = verdict_json(is_non_dicritical(m.source, pair.W()));
      } else if (mode == "smooth") {
        j["morphism"] = morphism_json(smooth_refinement(pair.fan()));
      } else if (mode == "log") {
        const ResolvedPair r = foliated_log_resolution(pair);
        j["morphism"] = morphism_json(r.morphism);
        j["pair"] = pair_json(r.pair);
        j["non_dicritical"] = verdict_json(is_non_dicritical(r.pair.fan(), r.pair.W()));
      } else {
        j = fdlt_json(fdlt_modification(pair));
        j["mode"] = mode;
      }
      return emit(j, out);
    }
    if (*run) return emit(trace_json(run_mmp(pair, max_steps)), out);
    if (*cone) return emit(certificates_json(cone_certificate(pair)), out);
  } catch (const Error& e) {
    std::cerr << dump(error_json(e));
    return 2;
  } catch (const std::exception& e) {
    std::cerr << dump(Json{{"error", "InternalError"}, {"message", e.what()}});
    return 2;
  }
  return 2;
}

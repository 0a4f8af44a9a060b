// Acceptance harness: one PASS/FAIL line per criterion. All comparisons are
// exact; the only tolerances are the wall-clock budgets below.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <algorithm>

#include "fixtures.hpp"
#include "random.hpp"
#include "torifol/divisor.hpp"
#include "torifol/errors.hpp"
#include "torifol/mmp.hpp"
#include "torifol/resolution.hpp"
#include "torifol/singularities.hpp"

using namespace torifol;
using namespace torifol::testing;

namespace {

constexpr double kBudgetExamples = 1.0;     // seconds
constexpr double kBudgetCanonical = 60.0;
constexpr double kBudgetMMP = 180.0;
constexpr double kBudgetTotal = 300.0;

constexpr int kCanonicalCones = 200;
constexpr int kCanonicalMaxCoord = 4;
constexpr int kMMPRuns = 200;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int failures = 0;
double total_seconds = 0;

void criterion(int id, const std::string& title, double budget, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  total_seconds += secs;
  if (budget > 0 && secs > budget) out.fail("over the " + std::to_string(budget) + " s budget");
  if (!out.ok) ++failures;
  std::printf("%s criterion %d: %s [%.2f s]%s%s\n", out.ok ? "PASS" : "FAIL", id, title.c_str(), secs,
              out.detail.empty() ? "" : " -- ", out.detail.c_str());
  std::fflush(stdout);
}

bool has_support_function(const Fan& fan, const GaussianSubspace& W) {
  try {
    support_function(fan, canonical_divisor(fan, W));
    return true;
  } catch (const Error&) {
    return false;
  }
}

// Q(i)-rank of W plus extra vectors, computed from scratch.
int joint_rank(const GaussianSubspace& W, const std::vector<IntVec>& extra) {
  GMat rows = W.basis();
  for (const auto& v : extra) {
    GVec g;
    for (auto x : v) g.push_back(GaussRat(static_cast<long>(x)));
    rows.push_back(g);
  }
  return GaussianSubspace::span(W.ambient(), rows).dim();
}

bool in_W(const GaussianSubspace& W, const IntVec& v) { return joint_rank(W, {v}) == W.dim(); }

std::string show(const IntVec& v) { return to_string(v); }

// --- 1 -----------------------------------------------------------------

void examples(Outcome& out) {
  const Fan q = orthant(2);
  for (const char* lam : {"1", "2", "1/2"}) {
    if (is_non_dicritical(q, span_of(2, {{lam, "1"}}))) out.fail(std::string("lambda=") + lam + " should be dicritical");
  }
  for (const char* lam : {"-1", "i", "1+i"}) {
    if (!is_non_dicritical(q, span_of(2, {{lam, "1"}}))) out.fail(std::string("lambda=") + lam + " should be non-dicritical");
  }
  const Verdict v = is_non_dicritical(orthant(3), kernel_of(3, {{"1", "-1", "i"}}));
  if (v || v.point != IntVec{1, 1, 0}) out.fail("kernel(b1-b2+ib3): expected witness (1,1,0)");

  const Fan o3 = orthant(3);
  auto has_tau = [&](const GaussianSubspace& W) {
    const auto loc = singular_locus(o3, W);
    return std::find(loc.begin(), loc.end(), ConeRays{0, 1}) != loc.end();
  };
  if (has_tau(span_of(3, {{"0", "0", "1"}}))) out.fail("Cone(e1,e2) must be excluded for W = span{e3}");
  if (!has_tau(span_of(3, {{"1", "i", "0"}}))) out.fail("Cone(e1,e2) must be included for W = span{(1,i,0)}");
}

// --- 2 -----------------------------------------------------------------

void canonical_divisor_law(Outcome& out) {
  Rng rng = make_rng(1002);
  for (int t = 0; t < 50; ++t) {
    const Fan fan = random_fan(rng, uniform(rng, 2, 4));
    const GaussianSubspace W = random_W(rng, fan);
    const QVec k = canonical_divisor(fan, W);
    for (int r = 0; r < fan.num_rays(); ++r) {
      const Rat expect = in_W(W, fan.ray(r)) ? Rat(-1) : Rat(0);
      if (k[static_cast<std::size_t>(r)] != expect) out.fail("ray " + show(fan.ray(r)) + " has coefficient " + k[static_cast<std::size_t>(r)].str());
    }
  }
}

// --- 3 -----------------------------------------------------------------

// Box bound for the brute-force search. When every generator lies in W the
// region σ ∩ {φ ≤ 1} is the simplex conv(0, v_i), so the generator box is
// exact. Otherwise fall back to a generous fixed box.
int brute_bound(const Fan& fan, const GaussianSubspace& W) {
  int maxcoord = 1;
  bool all_in_w = true;
  for (const auto& v : fan.rays()) {
    for (auto x : v) maxcoord = std::max<int>(maxcoord, static_cast<int>(std::abs(x)));
    all_in_w = all_in_w && in_W(W, v);
  }
  if (all_in_w) return maxcoord;
  return std::max(6, 3 * maxcoord * fan.num_rays());
}

void canonicity_oracle(Outcome& out) {
  Rng rng = make_rng(1003);
  int non_canonical = 0;
  for (int t = 0; t < kCanonicalCones; ++t) {
    const int n = uniform(rng, 2, 3);
    const int k = uniform(rng, 1, n);
    const Fan fan = random_simplicial_cone(rng, n, k, kCanonicalMaxCoord);
    const ToricFoliatedPair pair(fan, random_W(rng, fan));
    const Verdict c = is_canonical(pair);
    const auto brute = brute_negative_discrepancy(pair, brute_bound(fan, pair.W()));
    if (static_cast<bool>(c) == brute.has_value()) {
      out.fail("disagreement on cone " + show(fan.ray(0)) + "...: is_canonical=" + (c ? "true" : "false") +
               (brute ? ", brute witness " + show(*brute) : ", brute found nothing"));
    }
    if (!c) {
      ++non_canonical;
      if (!c.point || discrepancy_at(pair, *c.point).a.sign() >= 0) out.fail("witness does not replay");
    }
  }
  if (out.ok) out.detail = std::to_string(non_canonical) + "/" + std::to_string(kCanonicalCones) + " non-canonical";
}

// --- 4 -----------------------------------------------------------------

void implications(Outcome& out) {
  Rng rng = make_rng(1004);
  int smooth_dagger = 0;
  for (int t = 0; t < 150; ++t) {
    const Fan raw = random_fan(rng, uniform(rng, 2, 3));
    const GaussianSubspace W = random_W(rng, raw);
    std::vector<Fan> fans{raw};
    if (t % 3 == 0) fans.push_back(smooth_refinement(dagger_resolution(raw, W).source).source);
    for (const Fan& fan : fans) {
      if (!has_support_function(fan, W)) continue;
      const ToricFoliatedPair pair(fan, W);
      const bool nd = static_cast<bool>(is_non_dicritical(fan, W));
      if (is_canonical(pair) && !nd) out.fail("canonical but dicritical");
      if (fan.is_simplicial() && is_f_dlt(pair) && !nd) out.fail("F-dlt but dicritical");
      if (fan.is_smooth() && nd) {
        ++smooth_dagger;
        if (!is_canonical(pair)) out.fail("smooth and non-dicritical but not canonical");
        if (!has_simple_singularities(fan, W)) out.fail("smooth and non-dicritical but not simple");
      }
    }
  }
  if (smooth_dagger == 0) out.fail("corpus produced no smooth non-dicritical pairs");
}

// --- 5 -----------------------------------------------------------------

void resolutions(Outcome& out) {
  Rng rng = make_rng(1005);
  for (int t = 0; t < 100; ++t) {
    const Fan fan = random_fan(rng, uniform(rng, 2, 4));
    const GaussianSubspace W = random_W(rng, fan);
    const RefinementMorphism m = dagger_resolution(fan, W);
    if (!is_non_dicritical(m.source, W)) out.fail("dagger output dicritical");
    if (!(m.replay() == m.source)) out.fail("dagger log does not replay");
  }
  int extracted = 0;
  for (int t = 0; t < 100; ++t) {
    const Fan fan = random_fan(rng, uniform(rng, 2, 3));
    const GaussianSubspace W = random_W(rng, fan);
    if (!has_support_function(fan, W)) continue;
    const ToricFoliatedPair pair(fan, W);
    const FdltModification f = fdlt_modification(pair);
    if (!is_f_dlt(f.pair)) out.fail("F-dlt modification output is not F-dlt");
    for (const auto& e : f.extracted) {
      ++extracted;
      if (evaluate_phi(pair.phi(), fan, e.ray).sign() > 0) out.fail("extracted ray " + show(e.ray) + " has phi > 0");
    }
  }
  if (out.ok) out.detail = std::to_string(extracted) + " extracted rays checked";
}

// --- 6 -----------------------------------------------------------------

void mmp_runs(Outcome& out) {
  {
    const MMPTrace t = run_mmp(ToricFoliatedPair(f1_fan(), span_of(2, {{"0", "1"}})));
    const MMPStep& s = t.steps.front();
    if (t.steps.size() != 1 || s.kind != StepKind::MoriFiberSpace || !s.u_in_w_certified || !s.U || s.U->dim() != 1 ||
        !s.U->contains(QVec{Rat(0), Rat(1)}) || s.after->fan().rank() != 1) {
      out.fail("F1, W = span{(0,1)}: trace differs");
    }
  }
  {
    const MMPTrace t = run_mmp(ToricFoliatedPair(f1_fan(), span_of(2, {{"1", "0"}})));
    if (t.steps.size() != 2 || t.steps[0].kind != StepKind::Divisorial || t.steps[0].contracted_ray != IntVec{0, 1} ||
        t.steps[1].kind != StepKind::MoriFiberSpace || t.steps[1].after->fan().rank() != 0) {
      out.fail("F1, W = span{(1,0)}: trace differs");
    }
  }
  Rng rng = make_rng(1006);
  int flips = 0, divisorial = 0, fibers = 0, terminal = 0;
  for (int t = 0; t < kMMPRuns; ++t) {
    const Fan fan = random_complete_fan(rng, uniform(rng, 2, 3));
    const ToricFoliatedPair pair(fan, random_W(rng, fan));
    MMPTrace trace;
    try {
      trace = run_mmp(pair);
    } catch (const Error& e) {
      out.fail(std::string("run ") + std::to_string(t) + ": " + e.what());
      continue;
    }
    int div_here = 0;
    for (const auto& s : trace.steps) {
      const bool nd_before = static_cast<bool>(is_non_dicritical(s.before.fan(), s.before.W()));
      const bool dlt_before = static_cast<bool>(is_f_dlt(s.before));
      switch (s.kind) {
        case StepKind::Divisorial:
        case StepKind::Flip: {
          const ToricFoliatedPair& a = *s.after;
          if (!a.fan().is_complete() || !a.fan().is_simplicial()) out.fail("step output is not complete simplicial");
          if (nd_before && !is_non_dicritical(a.fan(), a.W())) out.fail("non-dicriticality lost");
          if (dlt_before && !is_f_dlt(a)) out.fail("F-dlt lost");
          if (s.kind == StepKind::Flip) {
            ++flips;
            if (a.fan().rays() != s.before.fan().rays()) out.fail("flip changed the rays");
          } else {
            ++divisorial;
            ++div_here;
          }
          break;
        }
        case StepKind::MoriFiberSpace:
          ++fibers;
          if (nd_before && !s.u_in_w_certified) out.fail("fiber step of a non-dicritical pair without U in W");
          if (s.U) {
            for (const auto& u : s.U->basis()) {
              if (nd_before && !s.before.W().contains(u)) out.fail("U not contained in W");
            }
          }
          if (!s.after->fan().is_complete()) out.fail("base is not complete");
          break;
        case StepKind::Terminate:
          ++terminal;
          for (const auto& wc : wall_classes(s.before)) {
            if (wc.intersection.sign() < 0) out.fail("terminal pair is not nef");
          }
          break;
      }
    }
    const StepKind last = trace.last().kind;
    if (last != StepKind::Terminate && last != StepKind::MoriFiberSpace) out.fail("run ended without nef or fiber space");
    if (div_here > fan.num_rays()) out.fail("more divisorial steps than rays");
  }
  if (out.ok) {
    out.detail = std::to_string(kMMPRuns) + " runs: " + std::to_string(divisorial) + " divisorial, " + std::to_string(flips) +
                 " flips, " + std::to_string(fibers) + " fiber spaces, " + std::to_string(terminal) + " nef";
  }
}

// --- 7 -----------------------------------------------------------------

void certificates(Outcome& out) {
  Rng rng = make_rng(1007);
  int checked = 0;
  for (int t = 0; t < 150; ++t) {
    const Fan fan = random_complete_fan(rng, uniform(rng, 2, 3));
    const ToricFoliatedPair pair(fan, random_W(rng, fan));
    std::size_t negative = 0;
    for (const auto& r : extremal_rays(pair)) negative += r.sign() < 0 ? 1 : 0;
    const auto cs = cone_certificate(pair);
    if (cs.size() != negative) out.fail("missing certificates");
    for (const auto& c : cs) {
      ++checked;
      if (joint_rank(pair.W(), fan.generators(c.curve)) != fan.rank()) out.fail("certificate curve not tangent");
      if (!in_W(pair.W(), fan.ray(c.ell))) out.fail("v_ell not in W");
      const WallRelation rel = wall_relation(fan, c.wall);
      if (!std::binary_search(rel.j_plus.begin(), rel.j_plus.end(), c.ell)) out.fail("ell not in J+");
      if (wall_relation(fan, c.curve).curve_class(fan.num_rays()) != c.ray.curve_class) out.fail("curve not on the ray");
    }
  }
  if (out.ok) out.detail = std::to_string(checked) + " negative extremal rays certified";
}

// --- 8 -----------------------------------------------------------------

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void determinism(Outcome& out) {
#ifndef TORIFOL_CLI_PATH
  out.fail("built without the command-line tool");
#else
  const std::string cli = TORIFOL_CLI_PATH;
  const std::string data = TORIFOL_DATA_DIR;
  const std::vector<std::string> commands = {
      "mmp run " + data + "/f1_w10.json", "mmp run " + data + "/f1_w01.json", "check " + data + "/gaussian_kernel.json",
      "resolve --mode fdlt " + data + "/dicritical_cone.json", "resolve --mode log " + data + "/gaussian_kernel.json",
      "cone " + data + "/f1_w01.json"};
  const std::string tmp = std::filesystem::temp_directory_path() / "torifol_accept";
  int k = 0;
  for (const auto& c : commands) {
    std::string outputs[2];
    for (int rep = 0; rep < 2; ++rep) {
      const std::string file = tmp + "_" + std::to_string(k) + "_" + std::to_string(rep) + ".json";
      const int rc = std::system((cli + " " + c + " --out " + file).c_str());
      if (rc != 0) out.fail("'" + c + "' exited with " + std::to_string(rc));
      outputs[rep] = slurp(file);
      std::remove(file.c_str());
    }
    if (outputs[0].empty() || outputs[0] != outputs[1]) out.fail("'" + c + "' is not byte-identical across runs");
    ++k;
  }
  if (out.ok) out.detail = std::to_string(commands.size()) + " commands";
#endif
}

}  // namespace

int main() {
  std::printf("seed %llu\n", static_cast<unsigned long long>(base_seed()));
  criterion(1, "example fidelity (exact)", kBudgetExamples, examples);
  criterion(2, "canonical divisor law on 50 random pairs (exact)", 0, canonical_divisor_law);
  criterion(3, "canonicity agrees with brute-force discrepancy search (exact)", kBudgetCanonical, canonicity_oracle);
  criterion(4, "implication suite (exact)", 0, implications);
  criterion(5, "resolution postconditions (exact)", 0, resolutions);
  criterion(6, "MMP traces and randomized runs (exact)", kBudgetMMP, mmp_runs);
  criterion(7, "cone theorem certificates (exact)", 0, certificates);
  criterion(8, "CLI determinism (byte-identical)", 0, determinism);
  if (total_seconds > kBudgetTotal) {
    std::printf("FAIL total runtime %.1f s over %.0f s\n", total_seconds, kBudgetTotal);
    ++failures;
  }
  return failures == 0 ? 0 : 1;
}

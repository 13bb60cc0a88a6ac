#include "braidband/scenario.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "braidband/dehornoy.hpp"
#include "braidband/foliation.hpp"
#include "braidband/generators.hpp"
#include "braidband/normal_form.hpp"
#include "braidband/properties.hpp"
#include "braidband/surface.hpp"

#ifndef BRAIDBAND_SCENARIO_DIR
#define BRAIDBAND_SCENARIO_DIR "scenarios"
#endif

namespace braidband {

namespace {

using Facts = std::map<std::string, std::string>;
using Params = std::map<std::string, std::string>;

const char* kHSWord = "s(1,2) s(2,4)^2 s(1,2)^-1 s(1,3) s(1,2) s(2,4)^-1 s(1,2)^-2 s(1,3)^-2";

long long param_int(const Params& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw std::invalid_argument("scenario: missing parameter " + key);
  return std::stoll(it->second);
}

std::string yesno(bool b) { return b ? "true" : "false"; }

BandWord twist_anchored_power(int n, int m) {
  std::vector<BandGen> ls;
  for (int t = 0; t < m; ++t) {
    for (int k = 1; k < n; ++k) ls.emplace_back(k, k + 1, +1);
    ls.emplace_back(1, n, +1);
  }
  return BandWord(n, std::move(ls));
}

Facts facts_hs_example(const Params& params) {
  long long genus = param_int(params, "genus");
  BandWord w = parse_band_word(kHSWord, 4);
  Facts f;
  f["exp"] = std::to_string(exponent_sum(w));
  f["sl"] = std::to_string(self_linking(w));
  f["components"] = std::to_string(closure_profile(w).componentCount);

  SurfaceStats s = surface_stats(build_surface(w));
  f["chi"] = std::to_string(s.eulerChar);
  f["surface_components"] = std::to_string(s.components);
  f["surface_genus"] = s.genus ? std::to_string(*s.genus) : "undefined";
  f["surface_genus_exceeds_input"] = yesno(s.genus && *s.genus > genus);

  DefectReport d = defect_report(w, genus);
  f["defect"] = std::to_string(d.defect);
  f["negative_bands"] = std::to_string(d.negativeBands);
  f["minimal_genus_consistent"] = yesno(d.minimalGenusConsistent);
  f["defect_le_negative_bands"] = yesno(d.defect <= d.negativeBands);

  FoliationComplex F = from_bennequin_surface(build_surface(w));
  f["e_plus"] = std::to_string(F.ellipticCount(+1));
  f["e_minus"] = std::to_string(F.ellipticCount(-1));
  f["h_plus"] = std::to_string(F.hyperbolicCount(+1));
  f["h_minus"] = std::to_string(F.hyperbolicCount(-1));
  DefectBound b = defect_from_foliation(F);
  f["defect_upper_bound"] = std::to_string(b.value);
  f["defect_bound_exact"] = yesno(b.exact);
  return f;
}

Facts facts_remark22(const Params& params) {
  int n = static_cast<int>(param_int(params, "n"));
  int m = static_cast<int>(param_int(params, "m"));
  BandWord w = twist_anchored_power(n, m);
  Facts f;
  DualNormalForm nf = left_normal_form(w);
  f["inf"] = std::to_string(nf.deltaPower);
  f["canonical_length"] = std::to_string(nf.canonicalLength());
  f["rigid"] = yesno(is_rigid(w));
  SqpVerdict v = is_strongly_quasipositive_closure(w);
  f["summit_inf"] = std::to_string(v.summit.summitInf);
  f["sqp"] = yesno(v.stronglyQuasipositive);
  f["floor"] = std::to_string(dehornoy_floor(w));
  RationalInterval i = fdtc_interval(w);
  f["fdtc_interval"] = i.str();
  f["fdtc_contains_m"] =
      yesno(i.lo && i.hi && *i.lo <= Rational(m) && Rational(m) <= *i.hi);
  return f;
}

Facts facts_example54(const Params& params) {
  long long delta = param_int(params, "delta");
  const int n = 4;
  Facts f;

  // route 1: the anchored power x = beta^N with the exact coefficient N
  // N is the least integer with N >= delta/2 + (delta+1)/n + 2
  Rational need = Rational(delta, 2) + Rational(delta + 1, n) + Rational(2);
  long long N = need.floor().convert_to<long long>();
  if (Rational(N) < need) ++N;
  f["anchor_power"] = std::to_string(N);
  BandWord x = twist_anchored_power(n, static_cast<int>(N));
  RationalInterval xFloorInterval = fdtc_interval(x);
  f["anchor_floor_interval"] = xFloorInterval.str();
  f["anchor_interval_contains_power"] =
      yesno(*xFloorInterval.lo <= Rational(N) && Rational(N) <= *xFloorInterval.hi);

  RationalInterval cx = RationalInterval::point(Rational(N));
  RationalInterval cy = propagate_negative_band_lower(delta, n);
  RationalInterval cw = propagate_product(cx, cy);
  f["bound_lower"] = cw.lo->str();
  f["bound_strict"] = yesno(cw.loStrict);
  HypothesisReport hyp = check_main_hypotheses(cw, delta);
  f["main2_hypothesis"] = yesno(hyp.largeTwistForDefect);

  // route 2: the split-alphabet word with a disconnected Bennequin surface;
  // its coefficient bound comes from the Dehornoy floor alone
  Rational altNeed = Rational(3 * delta + 9, 4);
  long long M = altNeed.floor().convert_to<long long>();
  if (Rational(M) < altNeed) ++M;
  f["alt_power"] = std::to_string(M);
  std::vector<BandGen> xs;
  for (int t = 0; t < M + 1; ++t) {
    xs.emplace_back(1, 3, +1);
    xs.emplace_back(2, 4, +1);
    xs.emplace_back(1, 3, +1);
    xs.emplace_back(2, 4, +1);
  }
  xs.emplace_back(1, 3, +1);
  BandWord xAlt(n, xs);
  std::vector<BandGen> ys;
  for (long long t = 0; t < delta; ++t) ys.emplace_back(2, 4, -1);
  BandWord y(n, ys);
  BandWord w = xAlt.concat(y);

  long long altFloor = dehornoy_floor(xAlt);
  f["alt_floor"] = std::to_string(altFloor);
  f["alt_floor_at_least_power"] = yesno(altFloor >= M);

  // bound the positive core by its floor, let the sqp-insert rule carry the
  // bound through the trailing positive band, then multiply in the negative
  // tail via the product rule
  BandWord core(n, std::vector<BandGen>(xs.begin(), xs.end() - 1));
  RationalInterval cCore = fdtc_interval(core);
  f["core_floor"] = cCore.lo->str();
  RationalInterval cxAlt = propagate_sqp_insert(cCore);
  RationalInterval cwAlt = propagate_product(cxAlt, cy);
  f["alt_bound_lower"] = cwAlt.lo->str();
  f["alt_bound_strict"] = yesno(cwAlt.loStrict);
  HypothesisReport altHyp = check_main_hypotheses(cwAlt, delta);
  f["alt_main2_hypothesis"] = yesno(altHyp.largeTwistForDefect);

  SurfaceStats s = surface_stats(build_surface(w));
  f["surface_components"] = std::to_string(s.components);
  f["negative_bands"] = std::to_string(s.negativeBands);
  f["nonfibered_hint"] = yesno(s.components > 1);
  return f;
}

Facts facts_example53_disk(const Params& params, const std::string& dir) {
  auto it = params.find("file");
  std::string file = it == params.end() ? std::string("example53-disk.fol") : it->second;
  FoliationComplex F = load_foliation(dir + "/" + file);
  Facts f;
  f["valid"] = yesno(validate_complex(F).empty());
  EulerAndSl es = euler_and_sl(F);
  f["chi"] = std::to_string(es.chi);
  f["sl"] = std::to_string(es.sl);
  f["e_minus"] = std::to_string(F.ellipticCount(-1));
  f["h_minus"] = std::to_string(F.hyperbolicCount(-1));

  ExtendedGraph G = extended_graph(F);
  f["graph_edges"] = std::to_string(G.edges.size());
  f["graph_fake_vertices"] = std::to_string(G.fakeVertexCount);
  f["min_nonfake_valence"] =
      G.minNonFakeValence() ? std::to_string(*G.minNonFakeValence()) : "undefined";

  Rational bound = fdtc_upper_bound(F, "C0");
  f["fdtc_upper_bound"] = bound.str();
  f["consistent_with_zero_fdtc"] = yesno(Rational(0) <= bound);

  // stabilize along the negative ab-tile
  int negTile = 0;
  for (const auto& h : F.hyperbolic)
    if (h.sign < 0 && h.type == RegionType::ab) negTile = h.id;
  AbStabilization move = ab_stabilization(F, negTile);
  f["stab_sign"] = move.stabilizationSign > 0 ? "positive" : "negative";
  f["stab_chi"] = std::to_string(euler_and_sl(move.result).chi);
  f["stab_e_minus"] = std::to_string(move.result.ellipticCount(-1));
  bool allAa = true;
  for (const auto& h : move.result.hyperbolic) allAa = allAa && h.type == RegionType::aa;
  f["stab_all_aa"] = yesno(allAa);
  return f;
}

Facts facts_lemma52_sweep(const Params& params) {
  PropertyOptions opt;
  opt.count = param_int(params, "count");
  opt.seed = static_cast<std::uint64_t>(param_int(params, "seed"));
  opt.policy = ExecutionPolicy::Parallel;
  PropertyReport r = run_property("lemma52", opt);
  Facts f;
  f["checked"] = std::to_string(r.outcome.checked);
  f["violations"] = std::to_string(r.outcome.violationCount);
  return f;
}

Facts facts_prop55_closure(const Params& params) {
  Facts f;
  // tabulated per-transition deltas from a pool with two circles of each kind
  struct Probe {
    CoherenceEvent e;
    long long dc, di;
  };
  const Probe probes[] = {
      {CoherenceEvent::AcSplit, 0, +1},          {CoherenceEvent::AcMerge, -1, 0},
      {CoherenceEvent::CcSplitIncoherent, 0, +1}, {CoherenceEvent::CcSplitCoherent, 0, +1},
      {CoherenceEvent::CcMergeCoherent, -1, 0},  {CoherenceEvent::CcMergeMixed, -1, 0},
  };
  bool deltasMatch = true;
  for (const Probe& p : probes) {
    CoherenceRun r = coherence_run({2, 2}, {p.e});
    deltasMatch = deltasMatch && r.history[1].coherent - r.history[0].coherent == p.dc &&
                  r.history[1].incoherent - r.history[0].incoherent == p.di;
  }
  f["transition_deltas_match"] = yesno(deltasMatch);

  // a single a-arc split breaks the closure condition
  CoherenceRun split = coherence_run({0, 0}, {CoherenceEvent::AcSplit});
  f["type1_closure_violated"] = yesno(split.sawAcSplit && !split.closureHolds);
  f["type1_final_incoherent"] = std::to_string(split.history.back().incoherent);

  CoherenceRun pair = coherence_run(
      {1, 0}, {CoherenceEvent::CcSplitCoherent, CoherenceEvent::CcMergeMixed});
  f["pair_final_coherent"] = std::to_string(pair.history.back().coherent);
  f["pair_final_incoherent"] = std::to_string(pair.history.back().incoherent);
  f["pair_monotone"] = yesno(pair.incoherentMonotone);

  PropertyOptions opt;
  opt.count = param_int(params, "count");
  opt.seed = static_cast<std::uint64_t>(param_int(params, "seed"));
  PropertyReport r = run_property("coherence", opt);
  f["random_checked"] = std::to_string(r.outcome.checked);
  f["random_violations"] = std::to_string(r.outcome.violationCount);
  return f;
}

}  // namespace

std::vector<std::string> scenario_names() {
  return {"hs-example", "remark22", "example54", "example53-disk", "lemma52-sweep",
          "prop55-closure"};
}

std::string default_scenario_dir() {
  if (const char* env = std::getenv("BRAIDBAND_SCENARIO_DIR")) return env;
  return BRAIDBAND_SCENARIO_DIR;
}

ScenarioFile load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scenario file: " + path);
  ScenarioFile file;
  std::string line;
  ScenarioCase current;
  bool inCase = false;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head) || head[0] == '#') continue;
    auto fail = [&](const std::string& why) {
      throw std::runtime_error(path + ":" + std::to_string(lineNo) + ": " + why);
    };
    if (head == "scenario") {
      if (!(ls >> file.name)) fail("scenario needs a name");
    } else if (head == "case") {
      if (inCase) fail("nested case");
      inCase = true;
      current = ScenarioCase{};
      std::string kv;
      while (ls >> kv) {
        std::size_t eq = kv.find('=');
        if (eq == std::string::npos) fail("case parameters must be key=value");
        current.params[kv.substr(0, eq)] = kv.substr(eq + 1);
        if (!current.label.empty()) current.label += " ";
        current.label += kv;
      }
      if (current.label.empty()) current.label = "default";
    } else if (head == "expect") {
      if (!inCase) fail("expect outside a case");
      ExpectedFact e;
      if (!(ls >> e.key >> e.value >> e.provenance))
        fail("expect needs: key value provenance");
      if (e.provenance != "cited" && e.provenance != "computed" && e.provenance != "definition")
        fail("provenance must be cited, computed, or definition");
      current.expectations.push_back(std::move(e));
    } else if (head == "endcase") {
      if (!inCase) fail("endcase outside a case");
      file.cases.push_back(std::move(current));
      inCase = false;
    } else {
      fail("unknown directive '" + head + "'");
    }
  }
  if (inCase) throw std::runtime_error(path + ": unterminated case");
  if (file.name.empty()) throw std::runtime_error(path + ": missing scenario header");
  return file;
}

std::map<std::string, std::string> scenario_facts(const std::string& name, const Params& params,
                                                  const std::string& dir) {
  if (name == "hs-example") return facts_hs_example(params);
  if (name == "remark22") return facts_remark22(params);
  if (name == "example54") return facts_example54(params);
  if (name == "example53-disk") return facts_example53_disk(params, dir);
  if (name == "lemma52-sweep") return facts_lemma52_sweep(params);
  if (name == "prop55-closure") return facts_prop55_closure(params);
  throw std::invalid_argument("unknown scenario '" + name + "'");
}

ScenarioReport run_scenario(const std::string& name, const std::string& dirIn) {
  std::string dir = dirIn.empty() ? default_scenario_dir() : dirIn;
  ScenarioFile file = load_scenario_file(dir + "/" + name + ".scn");
  if (file.name != name)
    throw std::runtime_error("scenario file declares '" + file.name + "', expected '" + name +
                             "'");
  ScenarioReport report;
  report.name = name;
  report.passed = true;
  for (const auto& c : file.cases) {
    ScenarioCaseResult res;
    res.label = c.label;
    res.facts = scenario_facts(name, c.params, dir);
    res.passed = true;
    for (const auto& e : c.expectations) {
      auto it = res.facts.find(e.key);
      if (it == res.facts.end()) {
        res.failures.push_back("fact '" + e.key + "' was not produced");
        res.passed = false;
      } else if (it->second != e.value) {
        res.failures.push_back("fact '" + e.key + "': expected " + e.value + ", got " +
                               it->second);
        res.passed = false;
      }
    }
    report.passed = report.passed && res.passed;
    report.cases.push_back(std::move(res));
  }
  return report;
}

}  // namespace braidband

#include "braidband/cli.hpp"

#include <CLI11.hpp>

#include "braidband/dehornoy.hpp"
#include "braidband/foliation.hpp"
#include "braidband/generators.hpp"
#include "braidband/normal_form.hpp"
#include "braidband/properties.hpp"
#include "braidband/scenario.hpp"
#include "braidband/surface.hpp"

namespace braidband {

namespace {

constexpr int kOk = 0;
constexpr int kInconsistent = 1;  // the mathematics rejects the input
constexpr int kUsage = 2;         // the input itself is malformed

using Fields = std::vector<std::pair<std::string, std::string>>;

class Writer {
 public:
  Writer(bool records, std::ostream& out) : records_(records), out_(out) {}

  /// records mode: one line, tab-separated key=value pairs;
  /// human mode: "key: value" lines.
  void fact(const Fields& fields) {
    if (records_) {
      bool first = true;
      for (const auto& [k, v] : fields) {
        if (!first) out_ << '\t';
        out_ << k << '=' << v;
        first = false;
      }
      out_ << '\n';
    } else {
      for (const auto& [k, v] : fields) out_ << k << ": " << v << '\n';
    }
  }

  void text(const std::string& s) {
    if (!records_) out_ << s << '\n';
  }

 private:
  bool records_;
  std::ostream& out_;
};

BandWord read_word(const std::string& text, int n, bool artin) {
  if (artin) return artin_to_band(parse_artin_word(text, n));
  return parse_band_word(text, n);
}

std::string yesno(bool b) { return b ? "true" : "false"; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"braid words in band generators: Garside normal forms, Bennequin surfaces, "
               "open-book-foliation combinatorics, Dehornoy floors"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "human";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"human", "records"}))
      ->capture_default_str();

  int n = 0;
  bool artin = false;
  std::string word;
  auto addWordOptions = [&](CLI::App* cmd, bool needWord = true) {
    cmd->add_option("--n", n, "strand count")->required();
    cmd->add_flag("--artin", artin, "parse the word in Artin-generator syntax (aK factors)");
    if (needWord) cmd->add_option("word", word, "braid word")->required();
  };

  CLI::App* cmdParse = app.add_subcommand("parse", "parse a word and echo its letters");
  addWordOptions(cmdParse);

  CLI::App* cmdSl = app.add_subcommand("sl", "self-linking number of the closure");
  addWordOptions(cmdSl);

  long long genus = 0;
  CLI::App* cmdDefect =
      app.add_subcommand("defect", "Bennequin-inequality defect bookkeeping");
  addWordOptions(cmdDefect);
  cmdDefect->add_option("--genus", genus, "topological genus of the closure (trusted input)")
      ->required();

  bool perComponent = false;
  CLI::App* cmdSurface = app.add_subcommand("surface", "Bennequin surface and its stats");
  addWordOptions(cmdSurface);
  cmdSurface->add_flag("--per-component", perComponent, "also list per-component stats");

  CLI::App* cmdNf = app.add_subcommand("nf", "left canonical normal form");
  addWordOptions(cmdNf);

  CLI::App* cmdInf = app.add_subcommand("inf", "infimum, supremum, canonical length");
  addWordOptions(cmdInf);

  CLI::App* cmdSqp =
      app.add_subcommand("sqp", "strong quasipositivity of the closure (summit search)");
  addWordOptions(cmdSqp);

  CLI::App* cmdRigid = app.add_subcommand("rigid", "rigidity of the normal form");
  addWordOptions(cmdRigid);

  CLI::App* cmdFloor = app.add_subcommand("floor", "Dehornoy floor");
  addWordOptions(cmdFloor);

  CLI::App* cmdFdtc =
      app.add_subcommand("fdtc", "twist-coefficient interval from the Dehornoy floor");
  addWordOptions(cmdFdtc);

  std::string folFile;
  CLI::App* cmdFolCheck = app.add_subcommand("fol-check", "validate a foliation complex file");
  cmdFolCheck->add_option("file", folFile, "complex file")->required();

  CLI::App* cmdFolGraph =
      app.add_subcommand("fol-graph", "extended graph and valence bound of a complex");
  cmdFolGraph->add_option("file", folFile, "complex file")->required();

  int regionId = 0;
  bool iterate = false;
  CLI::App* cmdFolStab = app.add_subcommand("fol-stab", "remove an ab-tile by stabilization");
  cmdFolStab->add_option("file", folFile, "complex file")->required();
  cmdFolStab->add_option("--region", regionId, "hyperbolic id of the ab-tile");
  cmdFolStab->add_flag("--iterate", iterate, "stabilize until no ab-tile remains");

  std::string binding;
  CLI::App* cmdFolBound =
      app.add_subcommand("fol-bound", "twist-coefficient upper bound from a complex");
  cmdFolBound->add_option("file", folFile, "complex file")->required();
  cmdFolBound->add_option("--binding", binding, "binding component")->required();

  long long nCoherent = 0, nIncoherent = 0;
  std::vector<std::string> eventNames;
  CLI::App* cmdCoherence =
      app.add_subcommand("coherence", "replay a c-circle coherence event sequence");
  cmdCoherence->add_option("--coherent", nCoherent, "initial coherent circles");
  cmdCoherence->add_option("--incoherent", nIncoherent, "initial incoherent circles");
  cmdCoherence->add_option("events", eventNames, "events (ac-split ac-merge cc-split-incoherent "
                                                 "cc-split-coherent cc-merge-coherent "
                                                 "cc-merge-mixed aa)");

  std::string scenarioName, scenarioDir;
  bool listScenarios = false;
  CLI::App* cmdScenario = app.add_subcommand("scenario", "run a bundled scenario");
  cmdScenario->add_option("name", scenarioName, "scenario name");
  cmdScenario->add_option("--dir", scenarioDir, "scenario directory");
  cmdScenario->add_flag("--list", listScenarios, "list scenario names");

  std::string property;
  long long count = 1000;
  std::uint64_t seed = 20240810;
  int maxLen = 6;
  int enumN = 3;
  bool parallel = false, serial = false, listProperties = false;
  CLI::App* cmdEnum = app.add_subcommand("enumerate", "run a bulk verification sweep");
  cmdEnum->add_option("--property", property, "property suite name");
  cmdEnum->add_option("--n", enumN, "strand count bound")->capture_default_str();
  cmdEnum->add_option("--max-len", maxLen, "word length bound")->capture_default_str();
  cmdEnum->add_option("--count", count, "item count for seeded sweeps")->capture_default_str();
  cmdEnum->add_option("--seed", seed, "sweep seed")->capture_default_str();
  cmdEnum->add_flag("--parallel", parallel, "drive items across OpenMP threads");
  cmdEnum->add_flag("--serial", serial, "force the serial reference driver");
  cmdEnum->add_flag("--list", listProperties, "list property names");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  Writer w(format == "records", out);

  try {
    if (app.got_subcommand(cmdParse)) {
      BandWord bw = read_word(word, n, artin);
      w.fact({{"op", "parse"},
              {"n", std::to_string(bw.strands())},
              {"letters", std::to_string(bw.size())},
              {"word", bw.empty() ? "<identity>" : bw.str()}});
    } else if (app.got_subcommand(cmdSl)) {
      BandWord bw = read_word(word, n, artin);
      w.fact({{"op", "sl"},
              {"n", std::to_string(n)},
              {"exp", std::to_string(exponent_sum(bw))},
              {"components", std::to_string(closure_profile(bw).componentCount)},
              {"sl", std::to_string(self_linking(bw))}});
    } else if (app.got_subcommand(cmdDefect)) {
      BandWord bw = read_word(word, n, artin);
      DefectReport r = defect_report(bw, genus);
      w.fact({{"op", "defect"},
              {"n", std::to_string(n)},
              {"genus", std::to_string(genus)},
              {"sl", std::to_string(r.sl)},
              {"minus_chi", std::to_string(r.minusChi)},
              {"defect", std::to_string(r.defect)},
              {"negative_bands", std::to_string(r.negativeBands)},
              {"minimal_genus_consistent", yesno(r.minimalGenusConsistent)},
              {"nonfibered_hint", yesno(r.disconnectedSurfaceHint)}});
    } else if (app.got_subcommand(cmdSurface)) {
      BandWord bw = read_word(word, n, artin);
      BennequinSurface F = build_surface(bw);
      SurfaceStats s = surface_stats(F);
      w.fact({{"op", "surface"},
              {"disks", std::to_string(F.n)},
              {"bands", std::to_string(F.bands.size())},
              {"negative_bands", std::to_string(s.negativeBands)},
              {"chi", std::to_string(s.eulerChar)},
              {"components", std::to_string(s.components)},
              {"boundary", std::to_string(s.boundaryComponents)},
              {"genus", s.genus ? std::to_string(*s.genus) : "undefined"}});
      if (perComponent) {
        for (const auto& c : component_stats(F)) {
          std::string disks;
          for (int d : c.disks) disks += (disks.empty() ? "" : ",") + std::to_string(d);
          w.fact({{"op", "surface-component"},
                  {"disks", disks},
                  {"bands", std::to_string(c.bands)},
                  {"chi", std::to_string(c.eulerChar)},
                  {"boundary", std::to_string(c.boundaryComponents)},
                  {"genus", std::to_string(c.genus)}});
        }
      }
    } else if (app.got_subcommand(cmdNf)) {
      BandWord bw = read_word(word, n, artin);
      DualNormalForm nf = left_normal_form(bw);
      w.fact({{"op", "nf"},
              {"n", std::to_string(n)},
              {"inf", std::to_string(nf.infimum())},
              {"sup", std::to_string(nf.supremum())},
              {"len", std::to_string(nf.canonicalLength())},
              {"nf", nf.str()}});
    } else if (app.got_subcommand(cmdInf)) {
      BandWord bw = read_word(word, n, artin);
      DualNormalForm nf = left_normal_form(bw);
      w.fact({{"op", "inf"},
              {"inf", std::to_string(nf.infimum())},
              {"sup", std::to_string(nf.supremum())},
              {"len", std::to_string(nf.canonicalLength())}});
    } else if (app.got_subcommand(cmdSqp)) {
      BandWord bw = read_word(word, n, artin);
      SqpVerdict v = is_strongly_quasipositive_closure(bw);
      Fields fields{{"op", "sqp"},
                    {"sqp", yesno(v.stronglyQuasipositive)},
                    {"summit_inf", std::to_string(v.summit.summitInf)}};
      if (v.stronglyQuasipositive)
        fields.push_back({"witness", v.summit.witness.empty() ? "<identity>"
                                                              : v.summit.witness.str()});
      w.fact(fields);
    } else if (app.got_subcommand(cmdRigid)) {
      BandWord bw = read_word(word, n, artin);
      w.fact({{"op", "rigid"}, {"rigid", yesno(is_rigid(bw))}});
    } else if (app.got_subcommand(cmdFloor)) {
      BandWord bw = read_word(word, n, artin);
      w.fact({{"op", "floor"}, {"floor", std::to_string(dehornoy_floor(bw))}});
    } else if (app.got_subcommand(cmdFdtc)) {
      BandWord bw = read_word(word, n, artin);
      w.fact({{"op", "fdtc"}, {"interval", fdtc_interval(bw).str()}});
    } else if (app.got_subcommand(cmdFolCheck)) {
      FoliationComplex F = load_foliation(folFile);
      std::vector<std::string> violations = validate_complex(F);
      w.fact({{"op", "fol-check"},
              {"file", folFile},
              {"valid", yesno(violations.empty())},
              {"violations", std::to_string(violations.size())}});
      for (const auto& v : violations) w.fact({{"violation", v}});
      if (!violations.empty()) return kInconsistent;
    } else if (app.got_subcommand(cmdFolGraph)) {
      FoliationComplex F = load_foliation(folFile);
      ExtendedGraph G = extended_graph(F);
      Fields fields{{"op", "fol-graph"},
                    {"nonfake_vertices", std::to_string(G.nonFakeVertices.size())},
                    {"fake_vertices", std::to_string(G.fakeVertexCount)},
                    {"edges", std::to_string(G.edges.size())}};
      if (auto mv = G.minNonFakeValence()) {
        fields.push_back({"min_nonfake_valence", std::to_string(*mv)});
        long long em = F.ellipticCount(-1), hm = F.hyperbolicCount(-1);
        if (em >= 1 && F.minimalGenusAsserted && hm - em >= 0) {
          KeyLemmaReport r = key_lemma_check(F);
          fields.push_back({"valence_bound", std::to_string(r.bound)});
          fields.push_back({"small_valence_vertex", yesno(r.holds)});
        }
      }
      w.fact(fields);
      for (const auto& e : G.edges)
        w.fact({{"edge_a", std::to_string(e.a)},
                {"edge_b", std::to_string(e.b)},
                {"through_hyperbolic", std::to_string(e.negativeHyperbolicId)}});
    } else if (app.got_subcommand(cmdFolStab)) {
      FoliationComplex F = load_foliation(folFile);
      if (iterate) {
        int steps = 0;
        while (true) {
          int tile = 0;
          for (const auto& h : F.hyperbolic)
            if (h.type == RegionType::ab) {
              tile = h.id;
              break;
            }
          if (tile == 0) break;
          F = ab_stabilization(F, tile).result;
          ++steps;
        }
        w.fact({{"op", "fol-stab"}, {"steps", std::to_string(steps)}});
      } else {
        AbStabilization move = ab_stabilization(F, regionId);
        F = move.result;
        w.fact({{"op", "fol-stab"},
                {"stabilization", move.stabilizationSign > 0 ? "positive" : "negative"},
                {"removed_elliptic", std::to_string(move.removedElliptic)},
                {"removed_hyperbolic", std::to_string(move.removedHyperbolic)}});
      }
      out << F.str();
    } else if (app.got_subcommand(cmdFolBound)) {
      FoliationComplex F = load_foliation(folFile);
      w.fact({{"op", "fol-bound"},
              {"binding", binding},
              {"upper_bound", fdtc_upper_bound(F, binding).str()}});
    } else if (app.got_subcommand(cmdCoherence)) {
      std::vector<CoherenceEvent> events;
      for (const auto& name : eventNames) {
        auto e = coherence_event_from_string(name);
        if (!e) {
          err << "error: unknown coherence event '" << name << "'\n";
          return kUsage;
        }
        events.push_back(*e);
      }
      CoherenceRun run = coherence_run({nCoherent, nIncoherent}, events);
      w.fact({{"op", "coherence"},
              {"final_coherent", std::to_string(run.history.back().coherent)},
              {"final_incoherent", std::to_string(run.history.back().incoherent)},
              {"incoherent_monotone", yesno(run.incoherentMonotone)},
              {"saw_ac_split", yesno(run.sawAcSplit)},
              {"closure_holds", yesno(run.closureHolds)}});
    } else if (app.got_subcommand(cmdScenario)) {
      if (listScenarios) {
        for (const auto& s : scenario_names()) w.fact({{"scenario", s}});
        return kOk;
      }
      if (scenarioName.empty()) {
        err << "error: scenario name required (or --list)\n";
        return kUsage;
      }
      ScenarioReport report = run_scenario(scenarioName, scenarioDir);
      for (const auto& c : report.cases) {
        w.fact({{"op", "scenario"},
                {"name", report.name},
                {"case", c.label},
                {"result", c.passed ? "PASS" : "FAIL"}});
        for (const auto& fmsg : c.failures) w.fact({{"mismatch", fmsg}});
      }
      w.fact({{"op", "scenario"},
              {"name", report.name},
              {"result", report.passed ? "PASS" : "FAIL"}});
      if (!report.passed) return kInconsistent;
    } else if (app.got_subcommand(cmdEnum)) {
      if (listProperties) {
        for (const auto& p : property_names()) w.fact({{"property", p}});
        return kOk;
      }
      if (property.empty()) {
        err << "error: --property required (or --list)\n";
        return kUsage;
      }
      PropertyOptions opt;
      opt.n = enumN;
      opt.maxLen = maxLen;
      opt.count = count;
      opt.seed = seed;
      opt.policy = parallel && !serial ? ExecutionPolicy::Parallel : ExecutionPolicy::Serial;
      PropertyReport r = run_property(property, opt);
      w.fact({{"op", "enumerate"},
              {"property", r.property},
              {"mode", r.mode},
              {"checked", std::to_string(r.outcome.checked)},
              {"violations", std::to_string(r.outcome.violationCount)}});
      for (const auto& v : r.outcome.violations) w.fact({{"violation", v}});
      if (!r.outcome.clean()) return kInconsistent;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << " (position " << e.position << ")\n";
    return kUsage;
  } catch (const HandleBudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kInconsistent;
  } catch (const FoliationError& e) {
    err << "error: " << e.what() << '\n';
    return kInconsistent;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kInconsistent;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace braidband

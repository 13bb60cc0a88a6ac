#ifndef BRAIDBAND_SCENARIO_HPP
#define BRAIDBAND_SCENARIO_HPP

#include <map>
#include <string>
#include <vector>

namespace braidband {

/// One expectation from a scenario file. `provenance` records where the
/// value comes from: "cited" (stated in the source literature), "computed"
/// (generated by this project's oracle commands), or "definition"
/// (immediate from the definitions).
struct ExpectedFact {
  std::string key;
  std::string value;
  std::string provenance;
};

struct ScenarioCase {
  std::string label;
  std::map<std::string, std::string> params;
  std::vector<ExpectedFact> expectations;
};

struct ScenarioFile {
  std::string name;
  std::vector<ScenarioCase> cases;
};

struct ScenarioCaseResult {
  std::string label;
  bool passed = false;
  std::map<std::string, std::string> facts;
  std::vector<std::string> failures;
};

struct ScenarioReport {
  std::string name;
  bool passed = false;
  std::vector<ScenarioCaseResult> cases;
};

std::vector<std::string> scenario_names();

/// Directory holding the bundled scenario files; the BRAIDBAND_SCENARIO_DIR
/// environment variable overrides the compiled-in default.
std::string default_scenario_dir();

ScenarioFile load_scenario_file(const std::string& path);

/// Runs the named scenario against its expectation file. Every expected fact
/// must be produced by the run and match exactly.
ScenarioReport run_scenario(const std::string& name, const std::string& dir = "");

/// The facts a scenario computes for one parameter set (exposed for tests).
std::map<std::string, std::string> scenario_facts(const std::string& name,
                                                  const std::map<std::string, std::string>& params,
                                                  const std::string& dir);

}  // namespace braidband

#endif

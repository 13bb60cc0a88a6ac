#ifndef BRAIDBAND_SWEEP_HPP
#define BRAIDBAND_SWEEP_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace braidband {

/// How a bulk verification sweep is driven. The serial driver is the
/// reference; the parallel one fans the same per-item kernel out over OpenMP
/// threads. Both must produce identical outcomes for identical inputs, which
/// the test suite and the benchmark tool check.
enum class ExecutionPolicy { Serial, Parallel };

struct SweepOutcome {
  long long checked = 0;
  long long violationCount = 0;
  std::vector<std::string> violations;  // first few, ordered by item index

  bool clean() const { return violationCount == 0; }
};

using ItemCheck = std::function<std::optional<std::string>(long long index)>;

/// Runs item(0..count-1); items must be independent and deterministic in
/// their index. Violations are reported in index order regardless of policy.
SweepOutcome sweep_run(long long count, const ItemCheck& item, ExecutionPolicy policy,
                       std::size_t keepViolations = 8);

int sweep_thread_count();

}  // namespace braidband

#endif

#include "braidband/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

#ifdef BRAIDBAND_HAVE_OPENMP
#include <omp.h>
#endif

namespace braidband {

int sweep_thread_count() {
#ifdef BRAIDBAND_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

SweepOutcome finalize(long long count, std::vector<std::pair<long long, std::string>> hits,
                      std::size_t keep) {
  std::sort(hits.begin(), hits.end());
  SweepOutcome out;
  out.checked = count;
  out.violationCount = static_cast<long long>(hits.size());
  for (std::size_t k = 0; k < hits.size() && k < keep; ++k)
    out.violations.push_back("item " + std::to_string(hits[k].first) + ": " + hits[k].second);
  return out;
}

}  // namespace

SweepOutcome sweep_run(long long count, const ItemCheck& item, ExecutionPolicy policy,
                       std::size_t keepViolations) {
  if (count < 0) throw std::invalid_argument("sweep_run: negative count");
  std::vector<std::pair<long long, std::string>> hits;

#ifdef BRAIDBAND_HAVE_OPENMP
  if (policy == ExecutionPolicy::Parallel) {
    std::exception_ptr firstError = nullptr;
#pragma omp parallel for schedule(dynamic, 16)
    for (long long k = 0; k < count; ++k) {
      try {
        std::optional<std::string> v = item(k);
        if (v) {
#pragma omp critical(braidband_sweep_hits)
          hits.emplace_back(k, *v);
        }
      } catch (...) {
#pragma omp critical(braidband_sweep_err)
        if (!firstError) firstError = std::current_exception();
      }
    }
    if (firstError) std::rethrow_exception(firstError);
    return finalize(count, std::move(hits), keepViolations);
  }
#else
  (void)policy;
#endif

  for (long long k = 0; k < count; ++k) {
    std::optional<std::string> v = item(k);
    if (v) hits.emplace_back(k, *v);
  }
  return finalize(count, std::move(hits), keepViolations);
}

}  // namespace braidband

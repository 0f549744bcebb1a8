#ifndef LOOPS_PAPERCHECK_HPP
#define LOOPS_PAPERCHECK_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace loops {

struct PapercheckOptions {
  /// Largest order used anywhere. Exhaustive identity and co1 checks stop
  /// at min(max_order, 6); the triviality audit goes to min(max_order, 7).
  std::size_t max_order = 7;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  /// Criterion ids to run, 1..10; empty runs all.
  std::vector<int> only;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double budget = 0;
};

/// Runs the acceptance criteria in order, handing each result to
/// `on_result` as soon as it is known. A criterion passes only when its
/// check holds and it finished within its time budget.
std::vector<CriterionResult> run_papercheck(
    const PapercheckOptions& options = {},
    const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace loops

#endif  // LOOPS_PAPERCHECK_HPP

#ifndef LOOPS_REPORT_HPP
#define LOOPS_REPORT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "loops/loop.hpp"

namespace loops {

enum class FindingStatus : std::uint8_t {
  /// A checked property holds.
  holds,
  /// A property that should hold was violated, or a searched-for object
  /// (counterexample, non-special map) was found.
  violation,
  /// Descriptive output: sizes, flags, classifications.
  info,
  /// Check not run, e.g. hypotheses not met.
  skipped,
};

const char* to_string(FindingStatus status);

/// One line of a report. `witness` is 0-based here and rendered 1-based.
struct Finding {
  std::string kind;
  FindingStatus status = FindingStatus::info;
  std::vector<std::string> loops;
  std::vector<Element> witness;
  /// Names the property being checked, e.g. "x(xy)=(yx)x <=> xy=yx".
  std::string anchor;
  std::string detail;
  nlohmann::json data = nlohmann::json::object();
};

struct AnalysisReport {
  std::vector<Finding> findings;

  Finding& add(Finding f) { return findings.emplace_back(std::move(f)); }
  void append(const AnalysisReport& other);
  bool has_violations() const;
  std::size_t count(FindingStatus status) const;
};

/// Fixed-key record: kind, status, loops, witness, anchor, detail, data.
nlohmann::json to_json(const Finding& f);

enum class ReportFormat : std::uint8_t { text, json_lines };

void render(std::ostream& out, const AnalysisReport& report, ReportFormat format);
void render(std::ostream& out, const Finding& finding, ReportFormat format);

/// 1-based labels separated by commas, e.g. "(3,2,6)".
std::string format_tuple(const std::vector<Element>& elements);

}  // namespace loops

#endif  // LOOPS_REPORT_HPP

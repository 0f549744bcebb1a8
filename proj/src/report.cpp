#include "loops/report.hpp"

#include <algorithm>
#include <ostream>

namespace loops {

const char* to_string(FindingStatus status) {
  switch (status) {
    case FindingStatus::holds: return "holds";
    case FindingStatus::violation: return "violation";
    case FindingStatus::info: return "info";
    case FindingStatus::skipped: return "skipped";
  }
  return "?";
}

void AnalysisReport::append(const AnalysisReport& other) {
  findings.insert(findings.end(), other.findings.begin(), other.findings.end());
}

bool AnalysisReport::has_violations() const { return count(FindingStatus::violation) > 0; }

std::size_t AnalysisReport::count(FindingStatus status) const {
  return static_cast<std::size_t>(std::count_if(
      findings.begin(), findings.end(), [&](const Finding& f) { return f.status == status; }));
}

nlohmann::json to_json(const Finding& f) {
  nlohmann::json witness = nlohmann::json::array();
  for (Element e : f.witness) witness.push_back(e + 1);
  return {{"kind", f.kind},     {"status", to_string(f.status)}, {"loops", f.loops},
          {"witness", witness}, {"anchor", f.anchor},           {"detail", f.detail},
          {"data", f.data}};
}

std::string format_tuple(const std::vector<Element>& elements) {
  std::string out = "(";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(elements[i] + 1);
  }
  return out + ")";
}

void render(std::ostream& out, const Finding& f, ReportFormat format) {
  if (format == ReportFormat::json_lines) {
    out << to_json(f).dump() << '\n';
    return;
  }
  out << '[' << to_string(f.status) << "] " << f.kind;
  if (!f.loops.empty()) {
    out << " {";
    for (std::size_t i = 0; i < f.loops.size(); ++i) out << (i ? ", " : "") << f.loops[i];
    out << '}';
  }
  if (!f.witness.empty()) out << " witness " << format_tuple(f.witness);
  if (!f.detail.empty()) out << ": " << f.detail;
  if (!f.data.empty()) out << ' ' << f.data.dump();
  out << '\n';
}

void render(std::ostream& out, const AnalysisReport& report, ReportFormat format) {
  for (const auto& f : report.findings) render(out, f, format);
}

}  // namespace loops

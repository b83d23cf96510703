#include "qschubert/report.hpp"

#include <cstdio>
#include <sstream>

namespace qschubert {

bool VerificationReport::same_content(const VerificationReport& other) const {
  return suite == other.suite && l == other.l && k == other.k && cases == other.cases &&
         expected_cases == other.expected_cases && counterexamples == other.counterexamples &&
         errors == other.errors && notes == other.notes && stats == other.stats && case_ids == other.case_ids;
}

nlohmann::json to_json(const VerificationReport& report) {
  auto cases_json = [](const std::vector<Counterexample>& list) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : list) {
      out.push_back({{"case", c.case_id}, {"detail", c.detail}});
    }
    return out;
  };
  nlohmann::json j;
  j["suite"] = report.suite;
  j["l"] = report.l;
  j["k"] = report.k;
  j["cases"] = report.cases;
  j["expected_cases"] = report.expected_cases ? nlohmann::json(*report.expected_cases) : nlohmann::json(nullptr);
  j["passed"] = report.passed();
  j["counterexamples"] = cases_json(report.counterexamples);
  j["errors"] = cases_json(report.errors);
  j["notes"] = report.notes;
  j["stats"] = report.stats;
  if (!report.case_ids.empty()) {
    j["case_ids"] = report.case_ids;
  }
  j["elapsed_ms"] = report.elapsed_ms;
  return j;
}

std::string to_text_table(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof line, "%-20s %3s %3s %10s %10s %8s %12s\n", "suite", "l", "k", "cases", "expected",
                "status", "elapsed_ms");
  out << line;
  for (const auto& r : reports) {
    const std::string expected = r.expected_cases ? std::to_string(*r.expected_cases) : "-";
    std::snprintf(line, sizeof line, "%-20s %3d %3d %10lld %10s %8s %12.1f\n", r.suite.c_str(), r.l, r.k, r.cases,
                  expected.c_str(), r.passed() ? "PASS" : "FAIL", r.elapsed_ms);
    out << line;
    for (const auto& c : r.counterexamples) {
      out << "    counterexample " << c.case_id << ": " << c.detail << '\n';
    }
    for (const auto& c : r.errors) {
      out << "    error " << c.case_id << ": " << c.detail << '\n';
    }
    for (const auto& note : r.notes) {
      out << "    note: " << note << '\n';
    }
    for (const auto& [key, value] : r.stats) {
      out << "    " << key << " = " << value << '\n';
    }
  }
  return out.str();
}

}  // namespace qschubert

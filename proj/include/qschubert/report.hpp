#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace qschubert {

struct Counterexample {
  std::string case_id;
  std::string detail;
  bool operator==(const Counterexample&) const = default;
};

/// Outcome of one verification suite over one context.
struct VerificationReport {
  std::string suite;
  int l = 0;  // 0 for suites not tied to a Grassmannian
  int k = 0;
  long long cases = 0;
  std::optional<long long> expected_cases;  // closed-form count for exhaustive runs
  std::vector<Counterexample> counterexamples;
  std::vector<Counterexample> errors;  // exceptions raised while checking a case
  std::vector<std::string> notes;
  std::map<std::string, long long> stats;
  std::vector<std::string> case_ids;  // filled only when requested
  double elapsed_ms = 0.0;

  [[nodiscard]] bool passed() const { return counterexamples.empty() && errors.empty(); }
  /// Equality ignoring wall-clock time.
  [[nodiscard]] bool same_content(const VerificationReport& other) const;
};

[[nodiscard]] nlohmann::json to_json(const VerificationReport& report);
/// One row per report plus indented counterexample lines.
[[nodiscard]] std::string to_text_table(const std::vector<VerificationReport>& reports);

}  // namespace qschubert

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "qschubert/report.hpp"

namespace qschubert {

struct SweepOptions {
  unsigned workers = 1;
  std::uint64_t seed = 1;
  std::size_t sample = 0;  // 0: every case; otherwise a seeded random subset of this size
  bool record_case_ids = false;
};

/// Result of checking one case.  An empty `failure` means the case passed.
struct CaseOutcome {
  std::string failure;
  std::string note;
  std::vector<std::pair<std::string, long long>> counters;
};

/// Runs fn(i) for i in [0, count) on up to `workers` threads.
inline void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& fn) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) {
      fn(i);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> failures(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < count; i = next++) {
          fn(i);
        }
      } catch (...) {
        failures[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) {
    t.join();
  }
  for (auto& f : failures) {
    if (f) {
      std::rethrow_exception(f);
    }
  }
}

/// Indices of the cases a sweep visits, ascending.
inline std::vector<std::size_t> select_cases(std::size_t total, const SweepOptions& options) {
  std::vector<std::size_t> all(total);
  std::iota(all.begin(), all.end(), std::size_t{0});
  if (options.sample == 0 || options.sample >= total) {
    return all;
  }
  std::mt19937_64 rng(options.seed);
  std::vector<std::size_t> picked;
  std::sample(all.begin(), all.end(), std::back_inserter(picked), options.sample, rng);
  return picked;
}

/// Checks every selected case in parallel and merges outcomes in case order,
/// so the report does not depend on scheduling.
template <class Case, class IdFn, class CheckFn>
void run_cases(VerificationReport& report, const std::vector<Case>& cases, IdFn&& id_of, CheckFn&& check,
               const SweepOptions& options) {
  const auto selected = select_cases(cases.size(), options);
  std::vector<CaseOutcome> outcomes(selected.size());
  std::vector<std::string> errors(selected.size());
  parallel_for(selected.size(), options.workers, [&](std::size_t i) {
    try {
      outcomes[i] = check(cases[selected[i]]);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });
  for (std::size_t i = 0; i < selected.size(); ++i) {
    const Case& c = cases[selected[i]];
    if (!outcomes[i].failure.empty()) {
      report.counterexamples.push_back({id_of(c), outcomes[i].failure});
    }
    if (!errors[i].empty()) {
      report.errors.push_back({id_of(c), errors[i]});
    }
    if (!outcomes[i].note.empty()) {
      report.notes.push_back(outcomes[i].note);
    }
    for (const auto& [key, value] : outcomes[i].counters) {
      report.stats[key] += value;
    }
    if (options.record_case_ids) {
      report.case_ids.push_back(id_of(c));
    }
  }
  report.cases += static_cast<long long>(selected.size());
  if (selected.size() < cases.size()) {
    report.expected_cases.reset();  // only exhaustive runs have a closed-form count
  }
}

class Stopwatch {
 public:
  [[nodiscard]] double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace qschubert

#pragma once

#include <random>
#include <vector>

#include "qschubert/partition.hpp"

namespace qschubert {

/// A legal rim hook, stored compactly as its head (topmost row, leftmost cell
/// in that row) plus the number of cells in each occupied column, left to right.
struct RimHook {
  Cell head;
  int first_col = 0;             // leftmost occupied column
  std::vector<int> column_cells;  // cells per column, first_col onward

  [[nodiscard]] int width() const { return static_cast<int>(column_cells.size()); }
  [[nodiscard]] int cell_count() const;
  [[nodiscard]] std::vector<Cell> cells(const Partition& source) const;
  bool operator==(const RimHook&) const = default;
};

struct RimHookTrace {
  Partition source;
  int n = 0;
  std::vector<RimHook> removed;
  Partition core;

  [[nodiscard]] int removals() const { return static_cast<int>(removed.size()); }
};

/// All n-cell rim hooks whose removal leaves a partition, ordered by head in row-major order.
[[nodiscard]] std::vector<RimHook> legal_rim_hooks(const Partition& p, int n);

/// p with the hook removed.  The hook must be legal for p.
[[nodiscard]] Partition remove_rim_hook(const Partition& p, const RimHook& hook);

/// Repeatedly strips the legal n-rim hook with the smallest head.
[[nodiscard]] RimHookTrace n_core(const Partition& p, int n);

/// Same procedure, but each step removes a uniformly random legal hook.
[[nodiscard]] RimHookTrace n_core_random_order(const Partition& p, int n, std::mt19937_64& rng);

/// n-core via beta-numbers on an n-runner abacus (no hook bookkeeping).
[[nodiscard]] Partition n_core_abacus(const Partition& p, int n);

/// (|p| - |core|) / n.
[[nodiscard]] int r_n(const Partition& p, int n);

/// (-1)^{sum (k - width)} over the hooks of the trace.
[[nodiscard]] int epsilon(const RimHookTrace& trace, const GrassmannianContext& ctx);
[[nodiscard]] int epsilon(const Partition& p, int n, const GrassmannianContext& ctx);

}  // namespace qschubert

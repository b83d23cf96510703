#include "qschubert/rimhook.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qschubert {

int RimHook::cell_count() const { return std::accumulate(column_cells.begin(), column_cells.end(), 0); }

// A legal hook occupies the bottom cells of each of its columns.
std::vector<Cell> RimHook::cells(const Partition& source) const {
  const Partition conj = source.conjugate();
  std::vector<Cell> out;
  for (int offset = 0; offset < width(); ++offset) {
    const int col = first_col + offset;
    const int bottom = conj.part(col);
    for (int row = bottom - column_cells[static_cast<std::size_t>(offset)] + 1; row <= bottom; ++row) {
      out.push_back({row, col});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RimHook> legal_rim_hooks(const Partition& p, int n) {
  if (n < 1) {
    throw std::invalid_argument("rim hook size must be positive");
  }
  std::vector<RimHook> hooks;
  const Partition conj = p.conjugate();
  // Removable n-rim hooks correspond to cells (i, j) of hook length n: the
  // hook runs along the rim from the end of row i to the bottom of column j.
  for (int i = 1; i <= p.length(); ++i) {
    for (int j = 1; j <= p.part(i); ++j) {
      const int bottom = conj.part(j);
      if ((p.part(i) - j) + (bottom - i) + 1 != n) {
        continue;
      }
      // Row r keeps its first `kept` cells after removal.
      auto kept = [&](int r) { return r < bottom ? p.part(r + 1) - 1 : j - 1; };
      RimHook hook;
      hook.head = {i, kept(i) + 1};
      hook.first_col = j;
      for (int col = j; col <= p.part(i); ++col) {
        int count = 0;
        for (int r = i; r <= bottom; ++r) {
          if (kept(r) < col && col <= p.part(r)) {
            ++count;
          }
        }
        hook.column_cells.push_back(count);
      }
      hooks.push_back(std::move(hook));
    }
  }
  std::sort(hooks.begin(), hooks.end(), [](const RimHook& a, const RimHook& b) { return a.head < b.head; });
  return hooks;
}

Partition remove_rim_hook(const Partition& p, const RimHook& hook) {
  Partition conj = p.conjugate();
  std::vector<int> cols = conj.parts();
  for (int offset = 0; offset < hook.width(); ++offset) {
    auto& c = cols.at(static_cast<std::size_t>(hook.first_col + offset - 1));
    c -= hook.column_cells[static_cast<std::size_t>(offset)];
  }
  if (!std::is_sorted(cols.begin(), cols.end(), std::greater<>()) ||
      std::any_of(cols.begin(), cols.end(), [](int c) { return c < 0; })) {
    throw std::logic_error("rim hook removal does not leave a partition");
  }
  return Partition(std::move(cols)).conjugate();
}

namespace {

template <class Chooser>
RimHookTrace strip_hooks(const Partition& p, int n, Chooser choose) {
  if (n < 2) {
    throw std::invalid_argument("n-core requires n >= 2");
  }
  RimHookTrace trace{p, n, {}, p};
  while (true) {
    auto hooks = legal_rim_hooks(trace.core, n);
    if (hooks.empty()) {
      break;
    }
    RimHook& hook = hooks[choose(hooks.size())];
    trace.core = remove_rim_hook(trace.core, hook);
    trace.removed.push_back(std::move(hook));
  }
  return trace;
}

}  // namespace

RimHookTrace n_core(const Partition& p, int n) {
  return strip_hooks(p, n, [](std::size_t) { return std::size_t{0}; });
}

RimHookTrace n_core_random_order(const Partition& p, int n, std::mt19937_64& rng) {
  return strip_hooks(p, n, [&](std::size_t count) {
    return std::uniform_int_distribution<std::size_t>(0, count - 1)(rng);
  });
}

Partition n_core_abacus(const Partition& p, int n) {
  if (n < 2) {
    throw std::invalid_argument("n-core requires n >= 2");
  }
  const int beads = p.length();
  std::vector<int> per_runner(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= beads; ++i) {
    ++per_runner[static_cast<std::size_t>((p.part(i) + beads - i) % n)];
  }
  std::vector<int> positions;
  for (int runner = 0; runner < n; ++runner) {
    for (int level = 0; level < per_runner[static_cast<std::size_t>(runner)]; ++level) {
      positions.push_back(runner + level * n);
    }
  }
  std::sort(positions.begin(), positions.end(), std::greater<>());
  std::vector<int> parts;
  for (int i = 1; i <= beads; ++i) {
    parts.push_back(positions[static_cast<std::size_t>(i - 1)] - (beads - i));
  }
  return Partition(std::move(parts));
}

int r_n(const Partition& p, int n) { return n_core(p, n).removals(); }

int epsilon(const RimHookTrace& trace, const GrassmannianContext& ctx) {
  if (trace.n != ctx.n()) {
    throw std::invalid_argument("epsilon needs n = l + k (got n=" + std::to_string(trace.n) +
                                ", l+k=" + std::to_string(ctx.n()) + ")");
  }
  int exponent = 0;
  for (const RimHook& hook : trace.removed) {
    exponent += ctx.k - hook.width();
  }
  return exponent % 2 == 0 ? 1 : -1;
}

int epsilon(const Partition& p, int n, const GrassmannianContext& ctx) {
  if (n != ctx.n()) {
    throw std::invalid_argument("epsilon needs n = l + k (got n=" + std::to_string(n) +
                                ", l+k=" + std::to_string(ctx.n()) + ")");
  }
  return epsilon(n_core(p, n), ctx);
}

}  // namespace qschubert

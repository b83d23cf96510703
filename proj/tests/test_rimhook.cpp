#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "qschubert/rimhook.hpp"

using namespace qschubert;

namespace {

std::set<Cell> cell_set(const Partition& p) {
  std::set<Cell> out;
  for (int r = 1; r <= p.length(); ++r) {
    for (int c = 1; c <= p.part(r); ++c) {
      out.insert({r, c});
    }
  }
  return out;
}

bool connected(const std::set<Cell>& cells) {
  if (cells.empty()) {
    return true;
  }
  std::set<Cell> seen{*cells.begin()};
  std::vector<Cell> stack{*cells.begin()};
  while (!stack.empty()) {
    const Cell c = stack.back();
    stack.pop_back();
    for (const Cell next : {Cell{c.row + 1, c.col}, Cell{c.row - 1, c.col}, Cell{c.row, c.col + 1},
                            Cell{c.row, c.col - 1}}) {
      if (cells.count(next) && !seen.count(next)) {
        seen.insert(next);
        stack.push_back(next);
      }
    }
  }
  return seen.size() == cells.size();
}

bool has_square(const std::set<Cell>& cells) {
  for (const Cell c : cells) {
    if (cells.count({c.row + 1, c.col}) && cells.count({c.row, c.col + 1}) && cells.count({c.row + 1, c.col + 1})) {
      return true;
    }
  }
  return false;
}

// Legal n-rim hooks straight from the definition: skew shapes p/q of size n
// that are connected and contain no 2x2 block.
std::set<std::set<Cell>> legal_hooks_bruteforce(const Partition& p, int n) {
  std::set<std::set<Cell>> out;
  if (p.size() < n) {
    return out;
  }
  const auto all = cell_set(p);
  for (const auto& q : partitions_of(p.size() - n, std::max(p.first(), 1), std::max(p.length(), 1))) {
    if (!p.contains(q)) {
      continue;
    }
    std::set<Cell> skew;
    const auto inner = cell_set(q);
    std::set_difference(all.begin(), all.end(), inner.begin(), inner.end(), std::inserter(skew, skew.end()));
    if (connected(skew) && !has_square(skew)) {
      out.insert(skew);
    }
  }
  return out;
}

int hook_length(const Partition& p, int row, int col) {
  return p.part(row) - col + p.conjugate().part(col) - row + 1;
}

// Cores are exactly the partitions with no hook length divisible by n.
bool is_core_by_hooks(const Partition& p, int n) {
  for (int r = 1; r <= p.length(); ++r) {
    for (int c = 1; c <= p.part(r); ++c) {
      if (hook_length(p, r, c) % n == 0) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("legal rim hooks examples") {
  CHECK(legal_rim_hooks(Partition{}, 3).empty());
  const auto dom = legal_rim_hooks(Partition{1, 1}, 2);
  REQUIRE(dom.size() == 1);
  CHECK(dom[0].width() == 1);
  CHECK(dom[0].cell_count() == 2);
  CHECK(dom[0].cells(Partition{1, 1}) == std::vector<Cell>{{1, 1}, {2, 1}});
  CHECK(legal_rim_hooks(Partition{2, 1}, 2).empty());
  CHECK_THROWS((void)legal_rim_hooks(Partition{2}, 0));
}

TEST_CASE("legal rim hooks match the definition") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& p : partitions_up_to(11, 11, 11)) {
      const auto hooks = legal_rim_hooks(p, n);
      std::set<std::set<Cell>> found;
      Cell previous{0, 0};
      for (const auto& h : hooks) {
        const auto cells = h.cells(p);
        const std::set<Cell> s(cells.begin(), cells.end());
        CHECK(static_cast<int>(s.size()) == n);
        std::set<int> cols;
        for (const Cell c : s) {
          cols.insert(c.col);
        }
        CHECK(h.width() == static_cast<int>(cols.size()));
        CHECK(previous < h.head);
        previous = h.head;
        found.insert(s);

        const auto rest = remove_rim_hook(p, h);
        CHECK(rest.size() == p.size() - n);
        CHECK(p.contains(rest));
      }
      CHECK(found.size() == hooks.size());
      CHECK(found == legal_hooks_bruteforce(p, n));
    }
  }
}

TEST_CASE("n-core examples") {
  const auto empty = n_core(Partition{}, 3);
  CHECK(empty.core.empty());
  CHECK(empty.removals() == 0);

  const auto dom = n_core(Partition{1, 1}, 2);
  CHECK(dom.core.empty());
  REQUIRE(dom.removals() == 1);
  CHECK(dom.removed[0].width() == 1);

  const auto stuck = n_core(Partition{3, 1}, 3);
  CHECK(stuck.core == Partition{3, 1});
  CHECK(stuck.removals() == 0);

  CHECK(r_n(Partition{}, 4) == 0);
  CHECK(r_n(Partition{2, 2, 2}, 4) == 1);
  CHECK(n_core(Partition{2, 2, 2}, 4).core == Partition{1, 1});
  CHECK(r_n(Partition{1, 1}, 2) == 1);

  CHECK_THROWS((void)n_core(Partition{2}, 1));
  std::mt19937_64 rng(7);
  CHECK_THROWS((void)n_core_random_order(Partition{2}, 1, rng));
}

TEST_CASE("epsilon examples") {
  CHECK(epsilon(Partition{}, 2, {1, 1}) == 1);
  CHECK(epsilon(Partition{1, 1}, 2, {1, 1}) == 1);
  CHECK(epsilon(Partition{2, 2, 2}, 4, {2, 2}) == 1);
  // A single 4-hook of width 1 in the 2 x 2 box: (-1)^(2-1).
  CHECK(epsilon(Partition{1, 1, 1, 1}, 4, {2, 2}) == -1);
  CHECK_THROWS_AS((void)epsilon(Partition{1, 1}, 3, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS((void)epsilon(n_core(Partition{1, 1}, 2), {2, 2}), std::invalid_argument);
}

TEST_CASE("traces replay and cores agree with independent characterizations") {
  std::mt19937_64 rng(12345);
  for (int n = 2; n <= 6; ++n) {
    for (const auto& p : partitions_up_to(12, 12, 12)) {
      const auto trace = n_core(p, n);
      Partition shape = p;
      for (const auto& h : trace.removed) {
        const auto legal = legal_rim_hooks(shape, n);
        CHECK(std::find(legal.begin(), legal.end(), h) != legal.end());
        shape = remove_rim_hook(shape, h);
      }
      CHECK(shape == trace.core);
      CHECK(p.size() == trace.core.size() + n * trace.removals());
      CHECK(legal_rim_hooks(trace.core, n).empty());
      CHECK(n_core(trace.core, n).removals() == 0);
      CHECK(is_core_by_hooks(trace.core, n));
      CHECK(n_core_abacus(p, n) == trace.core);
      CHECK(r_n(p, n) == trace.removals());

      const auto shuffled = n_core_random_order(p, n, rng);
      CHECK(shuffled.core == trace.core);
      CHECK(shuffled.removals() == trace.removals());
      for (int l = 1; l < n; ++l) {
        const GrassmannianContext ctx{l, n - l};
        CHECK(epsilon(shuffled, ctx) == epsilon(trace, ctx));
      }
    }
  }
}

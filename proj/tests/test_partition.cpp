#include <set>
#include <stdexcept>

#include "doctest.h"
#include "qschubert/partition.hpp"

using namespace qschubert;

namespace {

// Partition numbers by the pentagonal recurrence, independent of the enumerator.
long long partition_number(int n) {
  std::vector<long long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    long long total = 0;
    for (int j = 1;; ++j) {
      const int g1 = j * (3 * j - 1) / 2;
      const int g2 = j * (3 * j + 1) / 2;
      if (g1 > m) {
        break;
      }
      const long long sign = (j % 2 == 1) ? 1 : -1;
      total += sign * p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) {
        total += sign * p[static_cast<std::size_t>(m - g2)];
      }
    }
    p[static_cast<std::size_t>(m)] = total;
  }
  return p[static_cast<std::size_t>(n)];
}

long long binomial(int n, int r) {
  long long out = 1;
  for (int i = 1; i <= r; ++i) {
    out = out * (n - r + i) / i;
  }
  return out;
}

}  // namespace

TEST_CASE("partition normalization and validation") {
  CHECK(Partition{3, 1, 0, 0} == Partition{3, 1});
  CHECK(Partition{0, 0}.empty());
  CHECK(Partition{3, 2, 1}.size() == 6);
  CHECK(Partition{3, 2, 1}.part(4) == 0);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
  CHECK(Partition{4, 2, 1}.conjugate() == Partition{3, 2, 1, 1});
  CHECK_THROWS(GrassmannianContext(0, 2));
  CHECK_THROWS(GrassmannianContext(2, 0));
}

TEST_CASE("fits_in_box") {
  CHECK(fits_in_box(Partition{}, {1, 1}));
  CHECK(fits_in_box(Partition{2, 1}, {2, 2}));
  CHECK_FALSE(fits_in_box(Partition{3, 1}, {2, 2}));
  CHECK_FALSE(fits_in_box(Partition{1, 1, 1}, {2, 2}));
  CHECK_THROWS_AS(require_in_box(Partition{3}, {2, 2}, "lambda"), BoxError);
}

TEST_CASE("complement") {
  const GrassmannianContext ctx{2, 2};
  CHECK(complement(Partition{}, ctx) == Partition{2, 2});
  CHECK(complement(Partition{2, 2}, ctx) == Partition{});
  CHECK(complement(Partition{2, 1}, ctx) == Partition{1});
  CHECK_THROWS_AS((void)complement(Partition{3}, ctx), BoxError);
  for (int l = 1; l <= 4; ++l) {
    for (int k = 1; k <= 4; ++k) {
      const GrassmannianContext c{l, k};
      for (const auto& p : partitions_in_box(c)) {
        const auto q = complement(p, c);
        CHECK(q.size() == l * k - p.size());
        CHECK(complement(q, c) == p);
      }
    }
  }
}

TEST_CASE("overlap with rotation") {
  const GrassmannianContext ctx{2, 2};
  CHECK(overlap_with_rotation(Partition{}, Partition{2, 2}, ctx).empty());
  const auto cells = overlap_with_rotation(Partition{2, 1}, Partition{2, 1}, ctx);
  CHECK(cells == std::vector<Cell>{{1, 2}, {2, 1}});
  CHECK(overlap_with_rotation(Partition{2, 2}, Partition{2, 2}, ctx).size() == 4);
  CHECK_THROWS_AS((void)overlap_with_rotation(Partition{3}, Partition{}, ctx), BoxError);

  // Oracle: rotate mu cell by cell and intersect.
  const GrassmannianContext big{3, 4};
  for (const auto& lam : partitions_in_box(big)) {
    for (const auto& mu : partitions_in_box(big)) {
      std::vector<Cell> expected;
      for (int i = 1; i <= big.l; ++i) {
        for (int j = 1; j <= big.k; ++j) {
          if (lam.has_cell(i, j) && mu.has_cell(big.l + 1 - i, big.k + 1 - j)) {
            expected.push_back({i, j});
          }
        }
      }
      CHECK(overlap_with_rotation(lam, mu, big) == expected);
    }
  }
}

TEST_CASE("largest square in overlap") {
  const GrassmannianContext ctx{2, 2};
  CHECK(largest_square_in_overlap(Partition{}, Partition{1}, ctx) == 0);
  CHECK(largest_square_in_overlap(Partition{2, 1}, Partition{2, 1}, ctx) == 1);
  for (int l = 1; l <= 4; ++l) {
    for (int k = 1; k <= 4; ++k) {
      const GrassmannianContext c{l, k};
      CHECK(largest_square_in_overlap(rectangle(l, k), rectangle(l, k), c) == std::min(l, k));
    }
  }

  // Rotation symmetry, and agreement with a naive square search.
  const GrassmannianContext big{3, 4};
  for (const auto& lam : partitions_in_box(big)) {
    for (const auto& mu : partitions_in_box(big)) {
      const int d = largest_square_in_overlap(lam, mu, big);
      CHECK(d == largest_square_in_overlap(mu, lam, big));
      const auto cells = overlap_with_rotation(lam, mu, big);
      const std::set<Cell> in(cells.begin(), cells.end());
      int best = 0;
      for (int s = 1; s <= 3; ++s) {
        for (int r = 1; r + s - 1 <= big.l; ++r) {
          for (int c = 1; c + s - 1 <= big.k; ++c) {
            bool all = true;
            for (int i = 0; i < s && all; ++i) {
              for (int j = 0; j < s && all; ++j) {
                all = in.count({r + i, c + j}) > 0;
              }
            }
            if (all) {
              best = s;
            }
          }
        }
      }
      CHECK(d == best);
    }
  }
}

TEST_CASE("durfee and frobenius") {
  CHECK(durfee(Partition{}) == 0);
  CHECK(durfee(Partition{1}) == 1);
  CHECK(durfee(Partition{3, 2, 1}) == 2);

  CHECK(to_frobenius(Partition{}) == FrobeniusCoordinates{});
  CHECK(to_frobenius(Partition{1}) == FrobeniusCoordinates{{0}, {0}});
  CHECK(to_frobenius(Partition{3, 2, 1}) == FrobeniusCoordinates{{2, 0}, {2, 0}});
  CHECK(from_frobenius({}) == Partition{});
  CHECK(from_frobenius({{0}, {0}}) == Partition{1});
  CHECK(from_frobenius({{2, 0}, {2, 0}}) == Partition{3, 2, 1});
  CHECK_THROWS((void)from_frobenius({{0, 1}, {1, 0}}));
  CHECK_THROWS((void)from_frobenius({{1}, {1, 0}}));

  for (const auto& p : partitions_up_to(20, 20, 20)) {
    const auto f = to_frobenius(p);
    CHECK(from_frobenius(f) == p);
    CHECK(static_cast<int>(f.alpha.size()) == durfee(p));
    int size = 0;
    for (std::size_t i = 0; i < f.alpha.size(); ++i) {
      size += f.alpha[i] + f.beta[i] + 1;
    }
    CHECK(size == p.size());
    CHECK(to_frobenius(p.conjugate()) == FrobeniusCoordinates{f.beta, f.alpha});
  }
}

TEST_CASE("hook class") {
  CHECK(hook_class(0, 0) == Partition{1});
  CHECK(hook_class(2, 0) == Partition{3});
  CHECK(hook_class(1, 2) == Partition{2, 1, 1});
}

TEST_CASE("enumeration") {
  CHECK(partitions_up_to(0, 5, 5) == std::vector<Partition>{Partition{}});
  CHECK(partitions_of(2, 2, 2) == std::vector<Partition>{Partition{2}, Partition{1, 1}});
  CHECK(partitions_of(3, 2, 2) == std::vector<Partition>{Partition{2, 1}});
  CHECK(partitions_of(10, 10, 10).size() == 42);

  for (int n = 0; n <= 18; ++n) {
    const auto ps = partitions_of(n, n, n);
    CHECK(static_cast<long long>(ps.size()) == partition_number(n));
    const std::set<Partition> unique(ps.begin(), ps.end());
    CHECK(unique.size() == ps.size());
    for (std::size_t i = 1; i < ps.size(); ++i) {
      CHECK(ps[i - 1] > ps[i]);
    }
  }

  for (int l = 1; l <= 5; ++l) {
    for (int k = 1; k <= 5; ++k) {
      const GrassmannianContext ctx{l, k};
      const auto box = partitions_in_box(ctx);
      CHECK(static_cast<long long>(box.size()) == binomial(l + k, l));
      CHECK(box_partition_count(ctx) == binomial(l + k, l));
      for (const auto& p : box) {
        CHECK(fits_in_box(p, ctx));
      }
    }
  }
}

TEST_CASE("text round trip and parse errors") {
  CHECK(to_string(Partition{}) == "-");
  CHECK(to_string(Partition{3, 2, 1}) == "3,2,1");
  CHECK(parse_partition("-") == Partition{});
  CHECK(parse_partition("3,2,1") == Partition{3, 2, 1});
  for (const auto& p : partitions_up_to(12, 12, 12)) {
    CHECK(parse_partition(to_string(p)) == p);
  }
  for (const char* bad : {"", "1,2", "3,,1", "a", "3, 1", " 3", "3,0", "+1", "1,", ",1", "-1", "3.1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS((void)parse_partition(bad), ParseError);
  }
}

TEST_CASE("intersect and unite") {
  CHECK(intersect(Partition{3, 1}, Partition{2, 2, 1}) == Partition{2, 1});
  CHECK(unite(Partition{3, 1}, Partition{2, 2, 1}) == Partition{3, 2, 1});
}

#include "qschubert/lr.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace qschubert {

namespace {

struct SkewCell {
  int row;
  int col;
};

// Backtracking over the skew shape in reverse reading order (rows top to
// bottom, each row right to left), so the lattice condition is checked on the
// prefix of the reading word as cells are filled.
class LrCounter {
 public:
  LrCounter(const Partition& lam, const Partition& mu, const Partition& rho) : lam_(lam), mu_(mu), rho_(rho) {
    for (int r = 1; r <= rho.length(); ++r) {
      for (int c = rho.part(r); c > lam.part(r); --c) {
        cells_.push_back({r, c});
      }
    }
    grid_.assign(static_cast<std::size_t>(rho.length() + 1),
                 std::vector<int>(static_cast<std::size_t>(rho.first() + 2), 0));
    counts_.assign(static_cast<std::size_t>(mu.length() + 1), 0);
  }

  std::uint64_t run() { return fill(0); }

 private:
  std::uint64_t fill(std::size_t index) {
    if (index == cells_.size()) {
      return 1;
    }
    const auto [r, c] = cells_[index];
    int low = 1;
    if (r > 1 && c > lam_.part(r - 1)) {
      low = at(r - 1, c) + 1;
    }
    int high = mu_.length();
    if (c < rho_.part(r)) {
      high = std::min(high, at(r, c + 1));
    }
    std::uint64_t total = 0;
    for (int v = low; v <= high; ++v) {
      auto& cnt = counts_[static_cast<std::size_t>(v)];
      if (cnt >= mu_.part(v)) {
        continue;
      }
      if (v > 1 && cnt >= counts_[static_cast<std::size_t>(v - 1)]) {
        continue;
      }
      ++cnt;
      at(r, c) = v;
      total += fill(index + 1);
      at(r, c) = 0;
      --cnt;
    }
    return total;
  }

  int& at(int r, int c) { return grid_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }

  const Partition& lam_;
  const Partition& mu_;
  const Partition& rho_;
  std::vector<SkewCell> cells_;
  std::vector<std::vector<int>> grid_;
  std::vector<int> counts_;
};

std::string memo_key(const Partition& lam, const Partition& mu, const Partition& rho) {
  std::string key;
  key.reserve(static_cast<std::size_t>(lam.length() + mu.length() + rho.length() + 2));
  for (const Partition* p : {&lam, &mu, &rho}) {
    for (int x : p->parts()) {
      key.push_back(static_cast<char>(x));
    }
    key.push_back('\xff');
  }
  return key;
}

}  // namespace

std::uint64_t lr_coefficient_uncached(const Partition& lam, const Partition& mu, const Partition& rho) {
  if (rho.size() != lam.size() + mu.size() || !rho.contains(lam) || !rho.contains(mu)) {
    return 0;
  }
  return LrCounter(lam, mu, rho).run();
}

std::uint64_t lr_coefficient(const Partition& lam, const Partition& mu, const Partition& rho) {
  if (rho.size() != lam.size() + mu.size() || !rho.contains(lam) || !rho.contains(mu)) {
    return 0;
  }
  if (lam.empty() || mu.empty()) {
    return 1;
  }
  // Parts are packed into single bytes; anything larger skips the cache.
  if (rho.first() >= 255 || rho.length() >= 255) {
    return lr_coefficient_uncached(lam, mu, rho);
  }
  thread_local std::unordered_map<std::string, std::uint64_t> memo;
  auto key = memo_key(lam, mu, rho);
  if (auto it = memo.find(key); it != memo.end()) {
    return it->second;
  }
  const std::uint64_t value = LrCounter(lam, mu, rho).run();
  memo.emplace(std::move(key), value);
  return value;
}

ClassicalExpansion classical_product(const Partition& lam, const Partition& mu, const GrassmannianContext& ctx) {
  require_in_box(lam, ctx, "lambda");
  require_in_box(mu, ctx, "mu");
  ClassicalExpansion out{ctx, {}};
  const int size = lam.size() + mu.size();
  if (size > ctx.l * ctx.k) {
    return out;
  }
  for (const Partition& rho : partitions_of(size, ctx.k, ctx.l)) {
    if (const auto c = lr_coefficient(lam, mu, rho); c != 0) {
      out.terms.emplace(rho, c);
    }
  }
  return out;
}

bool product_nonzero(const Partition& lam, const Partition& mu, const GrassmannianContext& ctx) {
  return overlap_with_rotation(lam, mu, ctx).empty();
}

Partition kappa(const Partition& alpha, const Partition& beta, const GrassmannianContext& ctx) {
  require_in_box(alpha, ctx, "alpha");
  require_in_box(beta, ctx, "beta");
  const int size = alpha.size() + beta.size();
  bool found = false;
  Partition meet;
  if (size <= ctx.l * ctx.k) {
    for (const Partition& gamma : partitions_of(size, ctx.k, ctx.l)) {
      if (lr_coefficient(alpha, beta, gamma) == 0) {
        continue;
      }
      meet = found ? intersect(meet, gamma) : gamma;
      found = true;
    }
  }
  return found ? meet : rectangle(ctx.l, ctx.k);
}

Partition kappa_rectangles_closed_form(int m, int M, int n, int N, const GrassmannianContext& ctx) {
  if (m < 0 || M < 0 || n < 0 || N < 0 || m > ctx.l || n > ctx.l || M > ctx.k || N > ctx.k) {
    throw BoxError("rectangle does not fit in the " + std::to_string(ctx.l) + "x" + std::to_string(ctx.k) +
                   " box");
  }
  const Partition first = rectangle(m, M);
  const Partition second = rectangle(n, N);
  if (!product_nonzero(first, second, ctx)) {
    return rectangle(ctx.l, ctx.k);
  }
  auto keep = [&](int rows, int cols) {
    if (rows <= 0 || cols <= 0 || rows > ctx.l || cols > ctx.k) {
      return Partition{};
    }
    return rectangle(rows, cols);
  };
  Partition out = unite(first, second);
  out = unite(out, keep(m + n, M + N - ctx.k));
  out = unite(out, keep(m + n - ctx.l, M + N));
  return out;
}

bool triple_product_nonzero_bruteforce(const Partition& lam, const Partition& mu, const Partition& nu,
                                       const GrassmannianContext& ctx) {
  require_in_box(lam, ctx, "lambda");
  require_in_box(mu, ctx, "mu");
  require_in_box(nu, ctx, "nu");
  const int size = lam.size() + mu.size();
  if (size > ctx.l * ctx.k) {
    return false;
  }
  for (const Partition& rho : partitions_of(size, ctx.k, ctx.l)) {
    if (product_nonzero(rho, nu, ctx) && lr_coefficient(lam, mu, rho) != 0) {
      return true;
    }
  }
  return false;
}

}  // namespace qschubert

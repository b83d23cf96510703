#include "qschubert/quantum.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qschubert/rimhook.hpp"

namespace qschubert {

QuantumExpansion QuantumExpansion::basis(const GrassmannianContext& ctx, const Partition& shape, int degree,
                                         const Coefficient& coeff) {
  require_in_box(shape, ctx, "basis shape");
  QuantumExpansion out(ctx);
  out.accumulate({degree, shape}, coeff);
  return out;
}

Coefficient QuantumExpansion::coefficient(int degree, const Partition& shape) const {
  auto it = terms_.find({degree, shape});
  return it == terms_.end() ? Coefficient(0) : it->second;
}

void QuantumExpansion::accumulate(const Term& term, const Coefficient& delta) {
  if (delta == 0) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(term, delta);
  if (!inserted) {
    it->second += delta;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

QuantumExpansion QuantumExpansion::negate() const {
  QuantumExpansion out(context_);
  for (const auto& [term, c] : terms_) {
    out.terms_.emplace(term, -c);
  }
  return out;
}

QuantumExpansion QuantumExpansion::classical_part() const {
  QuantumExpansion out(context_);
  for (const auto& [term, c] : terms_) {
    if (term.degree == 0) {
      out.terms_.emplace(term, c);
    }
  }
  return out;
}

std::vector<RimHookContribution> rim_hook_contributions(const Partition& lam, const Partition& mu,
                                                        const GrassmannianContext& ctx) {
  require_in_box(lam, ctx, "lambda");
  require_in_box(mu, ctx, "mu");
  std::vector<RimHookContribution> out;
  const Partition floor = unite(lam, mu);
  for (const Partition& rho : partitions_of(lam.size() + mu.size(), ctx.k, lam.length() + mu.length())) {
    if (!rho.contains(floor)) {
      continue;
    }
    const std::uint64_t c = lr_coefficient(lam, mu, rho);
    if (c == 0) {
      continue;
    }
    RimHookTrace trace = n_core(rho, ctx.n());
    RimHookContribution entry;
    entry.rho = rho;
    entry.lr = c;
    entry.degree = trace.removals();
    entry.sign = epsilon(trace, ctx);
    entry.core_in_box = fits_in_box(trace.core, ctx);
    entry.core = std::move(trace.core);
    out.push_back(std::move(entry));
  }
  return out;
}

QuantumExpansion group_by_core(const std::vector<RimHookContribution>& contributions,
                               const GrassmannianContext& ctx) {
  QuantumExpansion out(ctx);
  for (const RimHookContribution& entry : contributions) {
    if (!entry.core_in_box) {
      continue;
    }
    Coefficient c = entry.lr;
    out.accumulate({entry.degree, entry.core}, entry.sign > 0 ? c : Coefficient(-c));
  }
  return out;
}

QuantumExpansion quantum_product_basis(const Partition& lam, const Partition& mu, const GrassmannianContext& ctx) {
  return group_by_core(rim_hook_contributions(lam, mu, ctx), ctx);
}

const QuantumExpansion& ProductCache::product(const Partition& lam, const Partition& mu) {
  auto key = std::make_pair(lam, mu);
  {
    std::lock_guard lock(mutex_);
    if (auto it = table_.find(key); it != table_.end()) {
      return it->second;
    }
  }
  QuantumExpansion value = quantum_product_basis(lam, mu, context_);
  std::lock_guard lock(mutex_);
  return table_.try_emplace(std::move(key), std::move(value)).first->second;
}

namespace {

void require_same_context(const QuantumExpansion& x, const QuantumExpansion& y) {
  if (!(x.context() == y.context())) {
    throw std::invalid_argument("quantum expansions live in different Grassmannians");
  }
}

template <class BasisProduct>
QuantumExpansion multiply_with(const QuantumExpansion& x, const QuantumExpansion& y, BasisProduct&& basis_product) {
  require_same_context(x, y);
  QuantumExpansion out(x.context());
  for (const auto& [tx, cx] : x.terms()) {
    for (const auto& [ty, cy] : y.terms()) {
      const QuantumExpansion& prod = basis_product(tx.shape, ty.shape);
      const Coefficient scale = cx * cy;
      for (const auto& [t, c] : prod.terms()) {
        out.accumulate({t.degree + tx.degree + ty.degree, t.shape}, scale * c);
      }
    }
  }
  return out;
}

}  // namespace

QuantumExpansion ring_add(const QuantumExpansion& x, const QuantumExpansion& y) {
  require_same_context(x, y);
  QuantumExpansion out = x;
  for (const auto& [term, c] : y.terms()) {
    out.accumulate(term, c);
  }
  return out;
}

QuantumExpansion ring_multiply(const QuantumExpansion& x, const QuantumExpansion& y) {
  QuantumExpansion scratch(x.context());
  return multiply_with(x, y, [&](const Partition& a, const Partition& b) -> const QuantumExpansion& {
    scratch = quantum_product_basis(a, b, x.context());
    return scratch;
  });
}

QuantumExpansion ring_multiply(const QuantumExpansion& x, const QuantumExpansion& y, ProductCache& cache) {
  if (!(cache.context() == x.context())) {
    throw std::invalid_argument("product cache belongs to a different Grassmannian");
  }
  return multiply_with(x, y, [&](const Partition& a, const Partition& b) -> const QuantumExpansion& {
    return cache.product(a, b);
  });
}

std::uint64_t gw_invariant(const QuantumExpansion& product, const Partition& nu, int d) {
  const Coefficient c = product.coefficient(d, complement(nu, product.context()));
  if (c < 0) {
    throw std::logic_error("negative Gromov-Witten invariant computed at nu=" + to_string(nu) +
                           ", d=" + std::to_string(d));
  }
  return c.convert_to<std::uint64_t>();
}

std::uint64_t gw_invariant(const Partition& lam, const Partition& mu, const Partition& nu, int d,
                           const GrassmannianContext& ctx) {
  require_in_box(nu, ctx, "nu");
  if (d < 0) {
    return 0;
  }
  return gw_invariant(quantum_product_basis(lam, mu, ctx), nu, d);
}

std::vector<int> occurring_degrees(const QuantumExpansion& x) {
  std::vector<int> out;
  for (const auto& [term, c] : x.terms()) {
    out.push_back(term.degree);
  }
  // Terms are ordered by degree first.
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> occurring_degrees(const Partition& lam, const Partition& mu, const GrassmannianContext& ctx) {
  return occurring_degrees(quantum_product_basis(lam, mu, ctx));
}

std::optional<int> d_min(const Partition& lam, const Partition& mu, const GrassmannianContext& ctx) {
  auto degrees = occurring_degrees(lam, mu, ctx);
  return degrees.empty() ? std::nullopt : std::optional<int>(degrees.front());
}

std::optional<int> d_max(const Partition& lam, const Partition& mu, const GrassmannianContext& ctx) {
  auto degrees = occurring_degrees(lam, mu, ctx);
  return degrees.empty() ? std::nullopt : std::optional<int>(degrees.back());
}

QuantumExpansion quantum_giambelli_determinant(const Partition& lam, ProductCache& cache) {
  const GrassmannianContext& ctx = cache.context();
  require_in_box(lam, ctx, "lambda");
  const FrobeniusCoordinates f = to_frobenius(lam);
  const std::size_t t = f.alpha.size();
  QuantumExpansion total(ctx);
  if (t == 0) {
    return QuantumExpansion::basis(ctx, Partition{});
  }
  std::vector<std::size_t> perm(t);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t j = i + 1; j < t; ++j) {
        inversions += perm[i] > perm[j] ? 1 : 0;
      }
    }
    QuantumExpansion term = QuantumExpansion::basis(ctx, Partition{});
    for (std::size_t i = 0; i < t; ++i) {
      const Partition hook = hook_class(f.alpha[i], f.beta[perm[i]]);
      term = ring_multiply(term, QuantumExpansion::basis(ctx, hook), cache);
    }
    total = ring_add(total, inversions % 2 == 0 ? term : term.negate());
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

bool quantum_giambelli_check(const Partition& lam, ProductCache& cache) {
  return quantum_giambelli_determinant(lam, cache) == QuantumExpansion::basis(cache.context(), lam);
}

bool quantum_giambelli_check(const Partition& lam, const GrassmannianContext& ctx) {
  ProductCache cache(ctx);
  return quantum_giambelli_check(lam, cache);
}

}  // namespace qschubert

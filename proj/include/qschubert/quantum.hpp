#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "qschubert/lr.hpp"
#include "qschubert/partition.hpp"

namespace qschubert {

using Coefficient = boost::multiprecision::cpp_int;

/// Index of a basis element q^degree sigma_shape.
struct Term {
  int degree = 0;
  Partition shape;
  auto operator<=>(const Term&) const = default;
  bool operator==(const Term&) const = default;
};

/// An element of QH*(Gr(l, C^n)): finite Z-combination of q^d sigma_nu.
/// Zero coefficients are never stored.
class QuantumExpansion {
 public:
  explicit QuantumExpansion(GrassmannianContext ctx) : context_(ctx) {}

  static QuantumExpansion basis(const GrassmannianContext& ctx, const Partition& shape, int degree = 0,
                                const Coefficient& coeff = 1);

  [[nodiscard]] const GrassmannianContext& context() const { return context_; }
  [[nodiscard]] const std::map<Term, Coefficient>& terms() const { return terms_; }
  [[nodiscard]] bool empty() const { return terms_.empty(); }

  /// Coefficient of q^degree sigma_shape (zero when absent).
  [[nodiscard]] Coefficient coefficient(int degree, const Partition& shape) const;

  /// Adds `delta` to a term, dropping it if it cancels.
  void accumulate(const Term& term, const Coefficient& delta);

  [[nodiscard]] QuantumExpansion negate() const;
  /// Keeps only the q^0 part.
  [[nodiscard]] QuantumExpansion classical_part() const;

  bool operator==(const QuantumExpansion&) const = default;

 private:
  GrassmannianContext context_;
  std::map<Term, Coefficient> terms_;
};

/// One rho in the rim-hook sum: c_{lam,mu}^{rho} != 0 and rho_1 <= k.
struct RimHookContribution {
  Partition rho;
  std::uint64_t lr = 0;
  int degree = 0;  // r_n(rho)
  Partition core;
  int sign = 1;    // epsilon(rho)
  bool core_in_box = false;
};

/// Every rho with |rho| = |lam|+|mu|, rho_1 <= k and c_{lam,mu}^{rho} != 0,
/// before grouping by core.  Ordered lexicographically descending by rho.
[[nodiscard]] std::vector<RimHookContribution> rim_hook_contributions(const Partition& lam, const Partition& mu,
                                                                      const GrassmannianContext& ctx);

/// Sums q^{r_n} epsilon c sigma_core over contributions whose core fits the box.
[[nodiscard]] QuantumExpansion group_by_core(const std::vector<RimHookContribution>& contributions,
                                             const GrassmannianContext& ctx);

/// sigma_lam * sigma_mu by the rim-hook rule.
[[nodiscard]] QuantumExpansion quantum_product_basis(const Partition& lam, const Partition& mu,
                                                     const GrassmannianContext& ctx);

/// Thread-safe memo of basis products for one context.
class ProductCache {
 public:
  explicit ProductCache(GrassmannianContext ctx) : context_(ctx) {}

  [[nodiscard]] const GrassmannianContext& context() const { return context_; }
  [[nodiscard]] const QuantumExpansion& product(const Partition& lam, const Partition& mu);

 private:
  GrassmannianContext context_;
  std::mutex mutex_;
  std::map<std::pair<Partition, Partition>, QuantumExpansion> table_;
};

[[nodiscard]] QuantumExpansion ring_add(const QuantumExpansion& x, const QuantumExpansion& y);
[[nodiscard]] QuantumExpansion ring_multiply(const QuantumExpansion& x, const QuantumExpansion& y);
[[nodiscard]] QuantumExpansion ring_multiply(const QuantumExpansion& x, const QuantumExpansion& y,
                                             ProductCache& cache);

/// <lam, mu, nu>_d, read off sigma_lam * sigma_mu at q^d sigma_{nu^vee}.
/// Throws std::logic_error if the computed value is negative.
[[nodiscard]] std::uint64_t gw_invariant(const Partition& lam, const Partition& mu, const Partition& nu, int d,
                                         const GrassmannianContext& ctx);
/// Same lookup against an already computed product.
[[nodiscard]] std::uint64_t gw_invariant(const QuantumExpansion& product, const Partition& nu, int d);

/// Degrees of q with a nonzero coefficient, ascending.
[[nodiscard]] std::vector<int> occurring_degrees(const QuantumExpansion& x);
[[nodiscard]] std::vector<int> occurring_degrees(const Partition& lam, const Partition& mu,
                                                 const GrassmannianContext& ctx);

/// Smallest / largest degree of q in sigma_lam * sigma_mu; nullopt for a zero product.
[[nodiscard]] std::optional<int> d_min(const Partition& lam, const Partition& mu, const GrassmannianContext& ctx);
[[nodiscard]] std::optional<int> d_max(const Partition& lam, const Partition& mu, const GrassmannianContext& ctx);

/// det(sigma_{(alpha_i | beta_j)}) expanded over permutations in the quantum ring.
[[nodiscard]] QuantumExpansion quantum_giambelli_determinant(const Partition& lam, ProductCache& cache);
/// True iff the hook determinant equals sigma_lam.
[[nodiscard]] bool quantum_giambelli_check(const Partition& lam, const GrassmannianContext& ctx);
[[nodiscard]] bool quantum_giambelli_check(const Partition& lam, ProductCache& cache);

}  // namespace qschubert
